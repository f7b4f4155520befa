#pragma once

#include <cstddef>
#include <vector>

#include "emc/state_layout.hpp"

namespace emc {

// 64-bit mixing over the words of a state. Shared by the store and by
// PackedState so both agree on what "equal" means.
inline std::size_t hash_words(ConstStateWords words) {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ words.size();
  for (Word w : words) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0xbf58476d1ce4e5b9ull;
    h ^= h >> 31;
  }
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdull;
  h ^= h >> 33;
  return static_cast<std::size_t>(h);
}

// One system state as an owned sequence of words. Padding bits are zero, so
// word equality is state equality.
class PackedState {
 public:
  PackedState() = default;
  explicit PackedState(std::size_t words) : words_(words, 0) {}
  explicit PackedState(ConstStateWords words)
      : words_(words.begin(), words.end()) {}

  StateWords words() { return words_; }
  ConstStateWords words() const { return words_; }
  std::size_t size() const { return words_.size(); }

  operator StateWords() { return words_; }
  operator ConstStateWords() const { return words_; }

  friend bool operator==(const PackedState&, const PackedState&) = default;
  friend auto operator<=>(const PackedState&, const PackedState&) = default;

 private:
  std::vector<Word> words_;
};

struct PackedStateHash {
  std::size_t operator()(const PackedState& s) const {
    return hash_words(s.words());
  }
};

}  // namespace emc
