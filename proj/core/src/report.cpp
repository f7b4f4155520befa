#include "emc/report.hpp"

namespace emc {

void write_finding(std::ostream& out, const Model& model, const StateStore& store,
                   const Finding& finding, bool quiet) {
  if (finding.ok()) return;

  if (!quiet && finding.state != kNoState) {
    const auto line = [&](StateIndex s) {
      out << model.format_state(store.state(s)) << '\n';
    };
    const std::vector<StateIndex> stem = counterexample_path(store, finding.state);
    for (std::size_t i = 0; i + 1 < stem.size(); ++i) line(stem[i]);
    if (finding.mark_boundary) out << kBoundaryMarker << '\n';
    if (finding.lasso.empty()) {
      line(finding.state);
    } else {
      for (std::size_t i = 0; i < finding.lasso.size(); ++i) {
        if (i == finding.cycle_start) out << kCycleMarker << '\n';
        line(finding.lasso[i]);
      }
    }
  }
  out << kErrorPrefix << finding.message << '\n';
}

}  // namespace emc
