#include "emc/run.hpp"

#include "emc/errors.hpp"
#include "emc/progress.hpp"
#include "emc/report.hpp"

namespace emc {

int exit_code(VerdictKind verdict) {
  switch (verdict) {
    case VerdictKind::pass: return 0;
    case VerdictKind::safety_error:
    case VerdictKind::deadlock_error:
    case VerdictKind::may_progress_error:
    case VerdictKind::must_progress_error:
    case VerdictKind::ag_ef_error: return 1;
    case VerdictKind::limit_exceeded: return 2;
    case VerdictKind::model_error: return 3;
  }
  return 3;
}

namespace {

Finding model_failure(std::string message) {
  Finding f;
  f.kind = VerdictKind::model_error;
  f.message = std::move(message);
  return f;
}

}  // namespace

RunReport run_checks(Model& model, const RunConfig& cfg, std::ostream& out,
                     const RunOptions& options) {
  RunReport report;
  const auto finish = [&](const Finding& f, const StateStore* store) {
    report.verdict = f.kind;
    report.message = f.message;
    if (store != nullptr) {
      write_finding(out, model, *store, f, options.quiet);
    } else if (!f.ok()) {
      out << kErrorPrefix << f.message << '\n';
    }
    if (report.unreliable_pass_warning) out << kUnreliablePassWarning << '\n';
    out << stats_line(report.states, report.edges) << '\n';
    return report;
  };

  RunPlan plan;
  try {
    plan = validate(model, cfg);
  } catch (const ModelError& e) {
    return finish(model_failure(e.what()), nullptr);
  }

  report.stages.push_back("explore");
  ExplorationResult result = explore(model, plan);
  report.states = result.states();
  report.edges = result.edges;
  if (result.idempotence_violations > 0) {
    out << "Warning: symmetry representative was not idempotent on "
        << result.idempotence_violations << " states\n";
  }
  if (!result.verdict.ok()) {
    const bool traceable = result.verdict.kind != VerdictKind::model_error &&
                           result.verdict.kind != VerdictKind::limit_exceeded;
    return finish(result.verdict, traceable ? &result.store : nullptr);
  }

  const CheckSet& checks = plan.checks;
  const bool ag_ef = plan.stubborn &&
                     (checks.state || checks.may_progress || checks.must_progress);
  if (!(checks.may_progress || checks.must_progress || ag_ef)) {
    return finish(Finding{}, &result.store);
  }

  try {
    report.stages.push_back("reverse");
    const ReverseGraph rg = build_reverse(model, plan, result);

    if (checks.may_progress) {
      report.stages.push_back("may_progress");
      Finding f = check_may_progress(model, result, rg);
      if (!f.ok()) return finish(f, &result.store);
    }
    if (checks.must_progress) {
      report.stages.push_back("must_progress");
      Finding f = check_must_progress(model, result, rg);
      if (!f.ok()) return finish(f, &result.store);
    }
    if (ag_ef) {
      report.stages.push_back("ag_ef");
      Finding f = check_ag_ef_terminating(model, plan, result, rg);
      if (!f.ok()) return finish(f, &result.store);
    }
  } catch (const ModelError& e) {
    return finish(model_failure(e.what()), nullptr);
  }

  report.unreliable_pass_warning = plan.stubborn && checks.must_progress;
  return finish(Finding{}, &result.store);
}

}  // namespace emc
