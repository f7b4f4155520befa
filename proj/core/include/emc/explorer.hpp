#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "emc/model.hpp"
#include "emc/run_config.hpp"
#include "emc/state_store.hpp"

namespace emc {

enum class VerdictKind {
  pass,
  safety_error,
  deadlock_error,
  may_progress_error,
  must_progress_error,
  ag_ef_error,
  model_error,
  limit_exceeded,
};

const char* to_string(VerdictKind kind);

// Outcome of a check, with what is needed to print its counterexample.
//
// The trace is the breadth-first path to `state`. When `lasso` is nonempty
// it starts at `state` and continues from there; lasso[cycle_start..] is a
// cycle whose last state leads back to lasso[cycle_start].
struct Finding {
  VerdictKind kind = VerdictKind::pass;
  std::string message;
  StateIndex state = kNoState;
  std::vector<StateIndex> lasso;
  std::size_t cycle_start = 0;
  // print a "==========" line right before `state`
  bool mark_boundary = false;

  bool ok() const { return kind == VerdictKind::pass; }
};

struct ExplorationResult {
  explicit ExplorationResult(std::size_t words_per_state) : store(words_per_state) {}

  StateStore store;
  std::uint64_t edges = 0;
  Finding verdict;
  std::uint64_t idempotence_violations = 0;

  std::uint64_t states() const { return store.size(); }
};

// Stage 1: breadth-first construction with on-the-fly safety and illegal
// deadlock detection. Stops at the first failing check, when the model sets
// err_msg, or when the state count exceeds stop_cnt.
ExplorationResult explore(Model& model, const RunPlan& plan);

// Indices along the predecessor chain from the initial state to `target`.
std::vector<StateIndex> counterexample_path(const StateStore& store,
                                            StateIndex target);

// The same path rendered with the model's format_state.
std::vector<std::string> counterexample(const ExplorationResult& result,
                                        const Model& model, StateIndex target);

// "<N> states, <M> edges"
std::string stats_line(std::uint64_t states, std::uint64_t edges);

}  // namespace emc
