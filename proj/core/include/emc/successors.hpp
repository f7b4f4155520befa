#pragma once

#include <algorithm>
#include <vector>

#include "emc/errors.hpp"
#include "emc/run_config.hpp"
#include "emc/stubborn.hpp"
#include "emc/symmetry.hpp"

namespace emc {

enum class Expansion { terminal, expanded, stopped };

// Produces the edges leaving a state exactly as exploration fires them:
// all transitions in plain mode, the enabled members of the stubborn set in
// stubborn mode, each successor canonicalized when symmetry is on. Stage 1,
// stage 2 and the counterexample walkers all go through here so they agree
// edge for edge.
class SuccessorGenerator {
 public:
  SuccessorGenerator(Model& model, const RunPlan& plan)
      : model_(model),
        plan_(plan),
        stubborn_(model, plan.transitions, plan.debug_checks),
        canon_(model, plan.debug_checks) {}

  // Calls visit(t, successor) for each fired transition in increasing t;
  // visit returns false to stop early. Terminality is judged on all
  // transitions regardless of mode.
  template <class Visit>
  Expansion expand(ConstStateWords state, Visit&& visit) {
    base_.assign(state.begin(), state.end());
    work_.assign(state.begin(), state.end());

    if (plan_.stubborn) {
      const StubbornSelection sel = stubborn_.select(state);
      if (sel.terminal) return Expansion::terminal;
      for (unsigned t : sel.enabled) {
        std::copy(base_.begin(), base_.end(), work_.begin());
        if (!fire_checked(model_, work_, t, plan_.debug_checks)) {
          throw InternalError("transition " + std::to_string(t) +
                              " changed enabledness between two firings");
        }
        if (plan_.symmetry) canon_.apply(work_);
        if (!visit(t, ConstStateWords(work_))) return Expansion::stopped;
      }
      return Expansion::expanded;
    }

    bool any = false;
    for (unsigned t = 0; t < plan_.transitions; ++t) {
      if (!fire_checked(model_, work_, t, plan_.debug_checks)) continue;
      any = true;
      if (plan_.symmetry) canon_.apply(work_);
      if (!visit(t, ConstStateWords(work_))) return Expansion::stopped;
      std::copy(base_.begin(), base_.end(), work_.begin());
    }
    return any ? Expansion::expanded : Expansion::terminal;
  }

  // Canonical form of a state (identity without symmetry).
  void canonicalize(StateWords state) {
    if (plan_.symmetry) canon_.apply(state);
  }

  std::uint64_t idempotence_violations() const {
    return canon_.idempotence_violations();
  }

 private:
  Model& model_;
  const RunPlan& plan_;
  StubbornSelector stubborn_;
  Canonicalizer canon_;
  std::vector<Word> base_;
  std::vector<Word> work_;
};

}  // namespace emc
