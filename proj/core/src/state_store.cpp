#include "emc/state_store.hpp"

#include <algorithm>
#include <stdexcept>

#include "emc/errors.hpp"
#include "emc/packed_state.hpp"

namespace emc {

StateStore::StateStore(std::size_t words_per_state, bool keep_pred)
    : words_(words_per_state), keep_pred_(keep_pred), slots_(1024, kNoState) {}

bool StateStore::equal(StateIndex i, ConstStateWords s) const {
  const ConstStateWords stored = state(i);
  return std::equal(stored.begin(), stored.end(), s.begin());
}

std::optional<StateIndex> StateStore::find(ConstStateWords s) const {
  const std::size_t mask = slots_.size() - 1;
  for (std::size_t pos = probe_start(hash_words(s));; pos = (pos + 1) & mask) {
    const StateIndex i = slots_[pos];
    if (i == kNoState) return std::nullopt;
    if (equal(i, s)) return i;
  }
}

StateStore::InternResult StateStore::intern(ConstStateWords s) {
  if (s.size() != words_) {
    throw ContractViolation("state has " + std::to_string(s.size()) +
                            " words, store expects " + std::to_string(words_));
  }
  const std::size_t mask = slots_.size() - 1;
  std::size_t pos = probe_start(hash_words(s));
  for (;; pos = (pos + 1) & mask) {
    const StateIndex i = slots_[pos];
    if (i == kNoState) break;
    if (equal(i, s)) return {i, false};
  }

  if (size_ >= kNoState - 1) {
    throw std::length_error("state store exhausted 32-bit state indices");
  }
  const auto index = static_cast<StateIndex>(size_);
  if (offset_in_block(index) == 0) {
    if (words_ > 0) {
      states_.push_back(std::make_unique<Word[]>(kBlockStates * words_));
    }
    if (keep_pred_) preds_.push_back(std::make_unique<Pred[]>(kBlockStates));
  }
  if (words_ > 0) {
    std::copy(s.begin(), s.end(),
              block_of(states_, index) + offset_in_block(index) * words_);
  }
  ++size_;
  slots_[pos] = index;

  // keep the load factor at or below 3/4
  if (size_ * 4 > slots_.size() * 3) grow_table();
  return {index, true};
}

void StateStore::grow_table() {
  std::vector<StateIndex> fresh(slots_.size() * 2, kNoState);
  const std::size_t mask = fresh.size() - 1;
  for (StateIndex i = 0; i < size_; ++i) {
    std::size_t pos = hash_words(state(i)) & mask;
    while (fresh[pos] != kNoState) pos = (pos + 1) & mask;
    fresh[pos] = i;
  }
  slots_.swap(fresh);
}

void StateStore::set_pred(StateIndex i, Pred p) {
  if (!keep_pred_) throw InternalError("state store does not keep predecessors");
  block_of(preds_, i)[offset_in_block(i)] = p;
}

Pred StateStore::pred(StateIndex i) const {
  if (!keep_pred_) throw InternalError("state store does not keep predecessors");
  return block_of(preds_, i)[offset_in_block(i)];
}

std::size_t StateStore::state_bytes() const {
  return states_.size() * kBlockStates * words_ * sizeof(Word);
}

std::size_t StateStore::bookkeeping_bytes() const {
  return preds_.size() * kBlockStates * sizeof(Pred) +
         slots_.capacity() * sizeof(StateIndex) +
         (states_.capacity() + preds_.capacity()) * sizeof(void*);
}

}  // namespace emc
