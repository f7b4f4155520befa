#include <algorithm>
#include <vector>

#include "emc/errors.hpp"
#include "emc/model.hpp"
#include "emc/run_config.hpp"

namespace emc {

void throw_model_error(const Model& model) { throw ModelError(model.err_msg()); }

namespace {

bool resolve(const std::optional<bool>& requested, const Capabilities& caps,
             Capability c, const char* flag, const std::string& model) {
  if (!requested) return caps.on_by_default(c);
  if (*requested && !caps.provides(c)) {
    throw ConfigError("model '" + model + "' does not support " + flag);
  }
  return *requested;
}

}  // namespace

RunPlan validate(Model& model, const RunConfig& cfg) {
  const Capabilities caps = model.capabilities();
  const std::string name = model.name();

  RunPlan plan;
  plan.checks.state =
      resolve(cfg.chk_state, caps, Capability::check_state, "--chk-state", name);
  plan.checks.deadlock = resolve(cfg.chk_deadlock, caps,
                                 Capability::check_deadlock, "--chk-deadlock", name);
  plan.checks.may_progress = resolve(cfg.chk_may_progress, caps,
                                     Capability::may_progress,
                                     "--chk-may-progress", name);
  plan.checks.must_progress = resolve(cfg.chk_must_progress, caps,
                                      Capability::must_progress,
                                      "--chk-must-progress", name);
  if (cfg.stubborn && !caps.provides(Capability::stubborn)) {
    throw ConfigError("model '" + name + "' does not support --stubborn");
  }
  if (cfg.symmetry && !caps.provides(Capability::symmetry)) {
    throw ConfigError("model '" + name + "' does not support --symmetry");
  }
  if (cfg.stop_cnt && *cfg.stop_cnt == 0) {
    throw ConfigError("--stop-cnt must be positive");
  }

  plan.stubborn = cfg.stubborn;
  plan.symmetry = cfg.symmetry;
  plan.stop_cnt = cfg.stop_cnt;
  plan.debug_checks = cfg.debug_checks;

  try {
    plan.layout = StateLayout::build(cfg.word_width, model.declarations());
  } catch (const LayoutError& e) {
    throw ConfigError(std::string("model '") + name + "': " + e.what());
  }
  model.bind(plan.layout);

  plan.initial = PackedState(plan.layout.total_words());
  model.clear_err_msg();
  plan.transitions = model.init(plan.initial);
  raise_if_err_msg(model);
  return plan;
}

bool fire_checked(Model& model, StateWords state, unsigned t, bool debug_checks) {
  if (!debug_checks) {
    const bool enabled = model.fire(state, t);
    raise_if_err_msg(model);
    return enabled;
  }

  const std::vector<Word> before(state.begin(), state.end());
  const bool enabled = model.fire(state, t);
  raise_if_err_msg(model);
  if (!enabled && !std::equal(before.begin(), before.end(), state.begin())) {
    throw ContractViolation("model '" + model.name() + "': disabled transition " +
                            std::to_string(t) + " modified the state");
  }
  return enabled;
}

}  // namespace emc
