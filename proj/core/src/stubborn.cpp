#include "emc/stubborn.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "emc/errors.hpp"
#include "emc/run_config.hpp"

namespace emc {

StubbornSelector::StubbornSelector(Model& model, unsigned transitions,
                                   bool debug_checks)
    : model_(model),
      transitions_(transitions),
      debug_checks_(debug_checks),
      enabled_(transitions, 0),
      memo_stamp_(transitions, 0),
      memo_all_(transitions, 0),
      memo_(transitions),
      visit_stamp_(transitions, 0) {}

void StubbornSelector::begin_state(ConstStateWords state) {
  state_ = state;
  if (++stamp_ == 0) {
    std::fill(memo_stamp_.begin(), memo_stamp_.end(), 0);
    stamp_ = 1;
  }
}

const std::vector<unsigned>* StubbornSelector::obligations(unsigned t) {
  if (memo_stamp_[t] != stamp_) {
    emitter_.clear();
    model_.next_stubborn(state_, t, emitter_);
    raise_if_err_msg(model_);
    for (unsigned u : emitter_.collected()) {
      if (u >= transitions_) {
        throw ContractViolation("model '" + model_.name() +
                                "': obligation names transition " +
                                std::to_string(u) + " of " +
                                std::to_string(transitions_));
      }
    }
    memo_[t] = emitter_.collected();
    memo_all_[t] = emitter_.all();
    memo_stamp_[t] = stamp_;
  }
  return memo_all_[t] ? nullptr : &memo_[t];
}

bool StubbornSelector::traverse(unsigned root, std::size_t budget,
                                std::size_t& enabled_count) {
  if (++visit_ == 0) {
    std::fill(visit_stamp_.begin(), visit_stamp_.end(), 0);
    visit_ = 1;
  }
  members_.clear();
  stack_.clear();
  enabled_count = 0;

  visit_stamp_[root] = visit_;
  stack_.push_back(root);
  while (!stack_.empty()) {
    const unsigned t = stack_.back();
    stack_.pop_back();
    members_.push_back(t);
    if (enabled_[t] && ++enabled_count > budget) return true;

    const std::vector<unsigned>* next = obligations(t);
    if (next == nullptr) return false;
    for (unsigned u : *next) {
      if (visit_stamp_[u] != visit_) {
        visit_stamp_[u] = visit_;
        stack_.push_back(u);
      }
    }
  }
  return true;
}

std::vector<unsigned> StubbornSelector::closure(ConstStateWords state,
                                                unsigned root) {
  if (root >= transitions_) {
    throw ContractViolation("closure root " + std::to_string(root) +
                            " out of range");
  }
  begin_state(state);
  // enabledness is irrelevant here; pretend nothing is enabled so the
  // traversal never stops on budget
  std::fill(enabled_.begin(), enabled_.end(), 0);
  std::size_t ignored = 0;
  std::vector<unsigned> out;
  if (!traverse(root, 0, ignored)) {
    out.resize(transitions_);
    std::iota(out.begin(), out.end(), 0u);
    return out;
  }
  out = members_;
  std::sort(out.begin(), out.end());
  return out;
}

StubbornSelection StubbornSelector::select(ConstStateWords state) {
  StubbornSelection sel;

  scratch_.assign(state.begin(), state.end());
  std::size_t enabled_total = 0;
  for (unsigned t = 0; t < transitions_; ++t) {
    const bool en = fire_checked(model_, scratch_, t, debug_checks_);
    enabled_[t] = en;
    if (en) {
      ++enabled_total;
      std::copy(state.begin(), state.end(), scratch_.begin());
    }
  }
  if (enabled_total == 0) {
    sel.terminal = true;
    return sel;
  }

  begin_state(state);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  bool best_is_all = false;
  std::vector<unsigned> best_members;

  for (unsigned root = 0; root < transitions_ && best > 1; ++root) {
    if (!enabled_[root]) continue;
    // a candidate must beat the current best strictly
    const std::size_t budget = best == std::numeric_limits<std::size_t>::max()
                                   ? best
                                   : best - 1;
    std::size_t count = 0;
    if (!traverse(root, budget, count)) {
      if (enabled_total < best) {
        best = enabled_total;
        best_is_all = true;
      }
      continue;
    }
    if (count > budget) continue;
    best = count;
    best_is_all = false;
    best_members = members_;
  }

  if (best_is_all) {
    sel.members.resize(transitions_);
    std::iota(sel.members.begin(), sel.members.end(), 0u);
  } else {
    sel.members = std::move(best_members);
    std::sort(sel.members.begin(), sel.members.end());
  }
  for (unsigned t : sel.members) {
    if (enabled_[t]) sel.enabled.push_back(t);
  }
  if (debug_checks_) check_closure(sel.members);
  return sel;
}

void StubbornSelector::check_closure(const std::vector<unsigned>& members) {
  for (unsigned t : members) {
    const std::vector<unsigned>* next = obligations(t);
    if (next == nullptr) {
      if (members.size() != transitions_) {
        throw InternalError("stubborn set is missing stb_all() members");
      }
      continue;
    }
    for (unsigned u : *next) {
      if (!std::binary_search(members.begin(), members.end(), u)) {
        throw InternalError("stubborn set is not closed under obligation " +
                            std::to_string(t) + " -> " + std::to_string(u));
      }
    }
  }
}

}  // namespace emc
