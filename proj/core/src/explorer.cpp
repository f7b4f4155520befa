#include "emc/explorer.hpp"

#include <algorithm>

#include "emc/errors.hpp"
#include "emc/successors.hpp"

namespace emc {

const char* to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::pass: return "pass";
    case VerdictKind::safety_error: return "safety error";
    case VerdictKind::deadlock_error: return "illegal deadlock";
    case VerdictKind::may_progress_error: return "may progress error";
    case VerdictKind::must_progress_error: return "must progress error";
    case VerdictKind::ag_ef_error: return "AG EF termination error";
    case VerdictKind::model_error: return "model error";
    case VerdictKind::limit_exceeded: return "state limit exceeded";
  }
  return "?";
}

namespace {

std::string limit_message(std::uint64_t stop_cnt) {
  return "State count limit " + std::to_string(stop_cnt) + " was exceeded";
}

}  // namespace

ExplorationResult explore(Model& model, const RunPlan& plan) {
  ExplorationResult result(plan.layout.total_words());
  StateStore& store = result.store;
  SuccessorGenerator successors(model, plan);

  const auto fail = [&](VerdictKind kind, std::string message, StateIndex at) {
    result.verdict.kind = kind;
    result.verdict.message = std::move(message);
    result.verdict.state = at;
  };
  const auto over_limit = [&] {
    return plan.stop_cnt && store.size() > *plan.stop_cnt;
  };

  try {
    PackedState initial = plan.initial;
    successors.canonicalize(initial);
    store.intern(initial);
    if (plan.checks.state) {
      const auto msg = model.check_state(initial);
      raise_if_err_msg(model);
      if (msg) {
        fail(VerdictKind::safety_error, std::string(*msg), 0);
        return result;
      }
    }
    if (over_limit()) {
      fail(VerdictKind::limit_exceeded, limit_message(*plan.stop_cnt), kNoState);
      return result;
    }

    for (StateIndex i = 0; i < store.size(); ++i) {
      const Expansion how = successors.expand(
          store.state(i), [&](unsigned t, ConstStateWords succ) {
            ++result.edges;
            const auto [j, is_new] = store.intern(succ);
            if (!is_new) return true;
            store.set_pred(j, Pred{i, t});
            if (plan.checks.state) {
              const auto msg = model.check_state(succ);
              raise_if_err_msg(model);
              if (msg) {
                fail(VerdictKind::safety_error, std::string(*msg), j);
                return false;
              }
            }
            if (over_limit()) {
              fail(VerdictKind::limit_exceeded, limit_message(*plan.stop_cnt), kNoState);
              return false;
            }
            return true;
          });

      if (how == Expansion::stopped) break;
      if (how == Expansion::terminal && plan.checks.deadlock) {
        const auto msg = model.check_deadlock(store.state(i));
        raise_if_err_msg(model);
        if (msg) {
          fail(VerdictKind::deadlock_error, std::string(*msg), i);
          break;
        }
      }
    }
  } catch (const ModelError& e) {
    fail(VerdictKind::model_error, e.what(), kNoState);
  }

  result.idempotence_violations = successors.idempotence_violations();
  return result;
}

std::vector<StateIndex> counterexample_path(const StateStore& store,
                                            StateIndex target) {
  if (!store.keeps_pred()) {
    throw InternalError("counterexample requested but predecessors were not kept");
  }
  if (target >= store.size()) {
    throw ContractViolation("counterexample target " + std::to_string(target) +
                            " is not a stored state");
  }
  std::vector<StateIndex> path;
  for (StateIndex s = target; s != kNoState; s = store.pred(s).from) {
    path.push_back(s);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<std::string> counterexample(const ExplorationResult& result,
                                        const Model& model, StateIndex target) {
  std::vector<std::string> lines;
  for (StateIndex s : counterexample_path(result.store, target)) {
    lines.push_back(model.format_state(result.store.state(s)));
  }
  return lines;
}

std::string stats_line(std::uint64_t states, std::uint64_t edges) {
  return std::to_string(states) + " states, " + std::to_string(edges) + " edges";
}

}  // namespace emc
