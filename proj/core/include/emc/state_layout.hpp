#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace emc {

// Storage unit of a packed state. With a 32-bit layout only the low 32 bits
// of each word are used.
using Word = std::uint64_t;
using StateWords = std::span<Word>;
using ConstStateWords = std::span<const Word>;

struct VarDecl {
  std::string name;
  std::uint32_t count = 1;  // array length, 1 for scalars
  unsigned bits = 8;        // width of each element
};

// Where a declaration ended up. Elements of an array placed inside a single
// word are contiguous from `bit`; arrays that start a fresh word hold
// `per_word` elements per word and never straddle a word boundary.
struct Placement {
  std::uint32_t word = 0;
  unsigned bit = 0;
  std::uint32_t per_word = 0;
};

// Resolved accessor for one declared variable. Cheap to copy; models keep
// these after binding to a layout and use them on every callback.
class VarRef {
 public:
  VarRef() = default;
  VarRef(std::string name, std::uint32_t count, unsigned bits, Placement where);

  Word get(ConstStateWords state, std::uint32_t element = 0) const {
    check_element(element);
    const auto [word, shift] = locate(element);
    return (state[word] >> shift) & mask_;
  }

  void set(StateWords state, std::uint32_t element, Word value) const {
    check_element(element);
    if (value > mask_) value_out_of_range(value);
    const auto [word, shift] = locate(element);
    state[word] = (state[word] & ~(mask_ << shift)) | (value << shift);
  }

  void set(StateWords state, Word value) const { set(state, 0, value); }

  const std::string& name() const { return name_; }
  std::uint32_t count() const { return count_; }
  unsigned bits() const { return bits_; }
  Word max_value() const { return mask_; }
  const Placement& placement() const { return where_; }

 private:
  struct Position {
    std::uint32_t word;
    unsigned shift;
  };

  Position locate(std::uint32_t element) const {
    const std::uint32_t q = element / where_.per_word;
    const std::uint32_t r = element % where_.per_word;
    return {where_.word + q, where_.bit + r * bits_};
  }

  void check_element(std::uint32_t element) const {
    if (element >= count_) element_out_of_range(element);
  }
  [[noreturn]] void element_out_of_range(std::uint32_t element) const;
  [[noreturn]] void value_out_of_range(Word value) const;

  std::string name_;
  std::uint32_t count_ = 0;
  unsigned bits_ = 0;
  Word mask_ = 0;
  Placement where_;
};

class StateLayout {
 public:
  StateLayout() = default;

  // Packs declarations in order. A declaration goes into the most recently
  // employed word when all of its count*bits fit into that word's unused
  // bits; otherwise it starts a fresh word and takes as many whole words as
  // it needs. Throws LayoutError for bits == 0, bits > word_width, count == 0,
  // or an unsupported word width.
  static StateLayout build(unsigned word_width, std::vector<VarDecl> decls);

  unsigned word_width() const { return word_width_; }
  std::size_t total_words() const { return total_words_; }
  const std::vector<VarDecl>& decls() const { return decls_; }
  const std::vector<Placement>& placements() const { return placements_; }

  std::optional<VarRef> find(std::string_view name) const;
  // Throws ContractViolation for an undeclared name.
  VarRef var(std::string_view name) const;

  // Bits a layout actually uses in each word; everything else is padding
  // and stays zero.
  std::vector<Word> used_bits_masks() const;

 private:
  unsigned word_width_ = 64;
  std::size_t total_words_ = 0;
  std::vector<VarDecl> decls_;
  std::vector<Placement> placements_;
};

Word read_var(ConstStateWords state, const StateLayout& layout,
              std::string_view var, std::uint32_t element = 0);
void write_var(StateWords state, const StateLayout& layout,
               std::string_view var, std::uint32_t element, Word value);

}  // namespace emc
