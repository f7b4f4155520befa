// emc: run a bundled model through the explicit-state checker.
//
//   emc tokenring --n 6 --stubborn
//   emc tokenring --n 2 --variant faulty-guard --stubborn
//   emc --list

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "emc/errors.hpp"
#include "emc/registry.hpp"
#include "emc/run.hpp"

namespace {

constexpr int kUsageError = 3;

// --chk-X / --no-chk-X pair; unset keeps the model's default.
void add_check_flag(CLI::App& app, const std::string& name,
                    std::optional<bool>& target, const std::string& what) {
  app.add_flag_callback("--" + name, [&target] { target = true; },
                        "Check " + what);
  app.add_flag_callback("--no-" + name, [&target] { target = false; },
                        "Do not check " + what);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Explicit-state model checker for models compiled into the engine"};
  app.set_version_flag("--version", "emc 0.1.0");

  std::string model_name;
  emc::ModelParams params;
  emc::RunConfig cfg;
  emc::RunOptions options;
  bool list = false;
  std::uint64_t stop_cnt = 0;

  app.add_option("model", model_name, "Bundled model to check");
  app.add_flag("--list", list, "List bundled models and exit");
  app.add_option("--n", params.n, "Model size parameter")->check(CLI::PositiveNumber);
  app.add_option("--variant", params.variant, "Model variant");
  app.add_flag("--symm-must", params.symm_must,
               "Track the original customer 0 through symmetry rotations");
  app.add_flag("--stubborn", cfg.stubborn, "Use stubborn-set reduction");
  app.add_flag("--symmetry", cfg.symmetry, "Use symmetry reduction");
  auto* stop = app.add_option("--stop-cnt", stop_cnt,
                              "Stop when more than this many states are found")
                   ->check(CLI::PositiveNumber);
  add_check_flag(app, "chk-state", cfg.chk_state, "state safety");
  add_check_flag(app, "chk-deadlock", cfg.chk_deadlock, "illegal deadlocks");
  add_check_flag(app, "chk-may-progress", cfg.chk_may_progress, "may progress");
  add_check_flag(app, "chk-must-progress", cfg.chk_must_progress, "must progress");
  app.add_flag("--debug-checks", cfg.debug_checks,
               "Verify model contracts (disabled purity, closure, idempotence)");
  app.add_option("--word-width", cfg.word_width, "State word width in bits")
      ->check(CLI::IsMember({32u, 64u}));
  app.add_flag("--quiet", options.quiet, "Print only verdict and statistics");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsageError;
  }

  const emc::ModelRegistry& registry = emc::ModelRegistry::builtin();
  if (list) {
    for (const auto& [name, summary] : registry.list()) {
      std::cout << name << "  " << summary << '\n';
    }
    return 0;
  }
  if (model_name.empty()) {
    std::cerr << "error: no model given\n" << app.help();
    return kUsageError;
  }
  if (*stop) cfg.stop_cnt = stop_cnt;

  try {
    auto model = registry.create(model_name, params);
    const emc::RunReport report = emc::run_checks(*model, cfg, std::cout, options);
    return emc::exit_code(report.verdict);
  } catch (const emc::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kUsageError;
}
