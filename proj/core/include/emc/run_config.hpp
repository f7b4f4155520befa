#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "emc/model.hpp"
#include "emc/packed_state.hpp"
#include "emc/state_layout.hpp"

namespace emc {

// Options of one verification run. Unset check flags fall back to the
// model's defaults.
struct RunConfig {
  bool stubborn = false;
  bool symmetry = false;
  std::optional<bool> chk_state;
  std::optional<bool> chk_deadlock;
  std::optional<bool> chk_may_progress;
  std::optional<bool> chk_must_progress;
  std::optional<std::uint64_t> stop_cnt;
  bool debug_checks = false;
  unsigned word_width = 64;
};

struct CheckSet {
  bool state = false;
  bool deadlock = false;
  bool may_progress = false;
  bool must_progress = false;
};

// A configuration that has been checked against a model, plus everything
// derived from the model before exploration starts.
struct RunPlan {
  CheckSet checks;
  bool stubborn = false;
  bool symmetry = false;
  std::optional<std::uint64_t> stop_cnt;
  bool debug_checks = false;
  StateLayout layout;
  unsigned transitions = 0;
  PackedState initial;  // after init(), before canonicalization
};

// Resolves defaults, rejects flags the model cannot honor (ConfigError),
// lays out the state, binds the model and runs init() once. An err_msg from
// init() surfaces as ModelError.
RunPlan validate(Model& model, const RunConfig& cfg);

// fire() plus the engine's per-call contract checks: err_msg is turned into
// ModelError, and with debug_checks a disabled firing that modified the
// state raises ContractViolation.
bool fire_checked(Model& model, StateWords state, unsigned t, bool debug_checks);

}  // namespace emc
