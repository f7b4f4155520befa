#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "emc/explorer.hpp"
#include "emc/model.hpp"
#include "emc/run_config.hpp"

namespace emc {

struct RunOptions {
  bool quiet = false;  // no trace lines, keep "!!! " lines and stats
};

struct RunReport {
  VerdictKind verdict = VerdictKind::pass;
  std::string message;
  std::uint64_t states = 0;
  std::uint64_t edges = 0;
  // stages in the order they ran: explore, reverse, may_progress,
  // must_progress, ag_ef
  std::vector<std::string> stages;
  bool unreliable_pass_warning = false;
};

inline constexpr const char* kUnreliablePassWarning =
    "Warning: stubborn sets do not guarantee that must progress errors are "
    "found; the pass verdict is unreliable";

// Runs every configured stage in order and writes the transcript:
// counterexample and "!!! " line if something failed, warnings, then the
// stats line. Throws ConfigError for an invalid configuration.
RunReport run_checks(Model& model, const RunConfig& cfg, std::ostream& out,
                     const RunOptions& options = {});

// 0 pass, 1 property error, 2 stop_cnt exceeded, 3 configuration/model error.
int exit_code(VerdictKind verdict);

}  // namespace emc
