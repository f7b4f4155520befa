#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <vector>

#include "emc/state_layout.hpp"

namespace emc {

using StateIndex = std::uint32_t;
inline constexpr StateIndex kNoState = std::numeric_limits<StateIndex>::max();

// How a state was first reached during breadth-first search.
struct Pred {
  StateIndex from = kNoState;
  std::uint32_t transition = 0;
};

// Interns packed states and hands out dense indices in first-seen order.
//
// States and predecessor records live in fixed-size blocks, so spans
// returned by state() stay valid while the store grows. The lookup index is
// an open-addressing table of 32-bit state indices; the states themselves
// are not duplicated in it.
class StateStore {
 public:
  struct InternResult {
    StateIndex index;
    bool is_new;
  };

  explicit StateStore(std::size_t words_per_state, bool keep_pred = true);

  StateStore(StateStore&&) noexcept = default;
  StateStore& operator=(StateStore&&) noexcept = default;

  InternResult intern(ConstStateWords state);
  std::optional<StateIndex> find(ConstStateWords state) const;

  ConstStateWords state(StateIndex i) const {
    if (words_ == 0) return {};
    return {block_of(states_, i) + offset_in_block(i) * words_, words_};
  }

  std::size_t size() const { return size_; }
  std::size_t words_per_state() const { return words_; }

  bool keeps_pred() const { return keep_pred_; }
  void set_pred(StateIndex i, Pred p);
  Pred pred(StateIndex i) const;

  // Bytes held for the states themselves and for everything else
  // (predecessor records and the lookup table), counting allocated capacity.
  std::size_t state_bytes() const;
  std::size_t bookkeeping_bytes() const;

 private:
  static constexpr unsigned kBlockShift = 14;
  static constexpr std::size_t kBlockStates = std::size_t{1} << kBlockShift;

  template <class T>
  static T* block_of(const std::vector<std::unique_ptr<T[]>>& blocks,
                     StateIndex i) {
    return blocks[i >> kBlockShift].get();
  }
  static std::size_t offset_in_block(StateIndex i) {
    return i & (kBlockStates - 1);
  }

  bool equal(StateIndex i, ConstStateWords s) const;
  std::size_t probe_start(std::size_t hash) const { return hash & (slots_.size() - 1); }
  void grow_table();

  std::size_t words_;
  bool keep_pred_;
  std::size_t size_ = 0;
  std::vector<std::unique_ptr<Word[]>> states_;
  std::vector<std::unique_ptr<Pred[]>> preds_;
  std::vector<StateIndex> slots_;
};

}  // namespace emc
