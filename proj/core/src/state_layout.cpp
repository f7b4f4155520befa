#include "emc/state_layout.hpp"

#include <algorithm>
#include <sstream>

#include "emc/errors.hpp"

namespace emc {

namespace {

Word low_mask(unsigned bits) {
  return bits >= 64 ? ~Word{0} : (Word{1} << bits) - 1;
}

}  // namespace

VarRef::VarRef(std::string name, std::uint32_t count, unsigned bits,
               Placement where)
    : name_(std::move(name)),
      count_(count),
      bits_(bits),
      mask_(low_mask(bits)),
      where_(where) {}

void VarRef::element_out_of_range(std::uint32_t element) const {
  std::ostringstream os;
  os << "element " << element << " out of range for state variable '"
     << name_ << "' of length " << count_;
  throw ContractViolation(os.str());
}

void VarRef::value_out_of_range(Word value) const {
  std::ostringstream os;
  os << "value " << value << " does not fit in " << bits_
     << " bits of state variable '" << name_ << "'";
  throw ContractViolation(os.str());
}

StateLayout StateLayout::build(unsigned word_width, std::vector<VarDecl> decls) {
  if (word_width != 32 && word_width != 64) {
    throw LayoutError("word width must be 32 or 64, got " +
                      std::to_string(word_width));
  }

  StateLayout layout;
  layout.word_width_ = word_width;
  layout.placements_.reserve(decls.size());

  // used bits in the most recently employed word; meaningless while
  // total_words_ == 0
  unsigned used = 0;

  for (const VarDecl& d : decls) {
    if (d.bits == 0 || d.bits > word_width) {
      throw LayoutError("state variable '" + d.name + "' has width " +
                        std::to_string(d.bits) + ", expected 1.." +
                        std::to_string(word_width));
    }
    if (d.count == 0) {
      throw LayoutError("state variable '" + d.name + "' has length 0");
    }

    const std::uint64_t need = std::uint64_t{d.count} * d.bits;
    Placement p;
    if (layout.total_words_ > 0 && need <= word_width - used) {
      p.word = static_cast<std::uint32_t>(layout.total_words_ - 1);
      p.bit = used;
      p.per_word = d.count;
      used += static_cast<unsigned>(need);
    } else {
      p.word = static_cast<std::uint32_t>(layout.total_words_);
      p.bit = 0;
      p.per_word = word_width / d.bits;
      const std::uint32_t words = (d.count + p.per_word - 1) / p.per_word;
      layout.total_words_ += words;
      const std::uint32_t in_last = d.count - (words - 1) * p.per_word;
      used = in_last * d.bits;
    }
    layout.placements_.push_back(p);
  }

  layout.decls_ = std::move(decls);
  return layout;
}

std::optional<VarRef> StateLayout::find(std::string_view name) const {
  for (std::size_t i = 0; i < decls_.size(); ++i) {
    if (decls_[i].name == name) {
      return VarRef(decls_[i].name, decls_[i].count, decls_[i].bits,
                    placements_[i]);
    }
  }
  return std::nullopt;
}

VarRef StateLayout::var(std::string_view name) const {
  if (auto ref = find(name)) return *std::move(ref);
  throw ContractViolation("unknown state variable '" + std::string(name) + "'");
}

std::vector<Word> StateLayout::used_bits_masks() const {
  std::vector<Word> masks(total_words_, 0);
  for (std::size_t i = 0; i < decls_.size(); ++i) {
    const VarRef ref(decls_[i].name, decls_[i].count, decls_[i].bits,
                     placements_[i]);
    std::vector<Word> probe(total_words_, 0);
    for (std::uint32_t e = 0; e < ref.count(); ++e) {
      ref.set(probe, e, ref.max_value());
    }
    for (std::size_t w = 0; w < total_words_; ++w) masks[w] |= probe[w];
  }
  return masks;
}

Word read_var(ConstStateWords state, const StateLayout& layout,
              std::string_view var, std::uint32_t element) {
  return layout.var(var).get(state, element);
}

void write_var(StateWords state, const StateLayout& layout,
               std::string_view var, std::uint32_t element, Word value) {
  layout.var(var).set(state, element, value);
}

}  // namespace emc
