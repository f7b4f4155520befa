#pragma once

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "emc/explorer.hpp"
#include "emc/models/token_ring.hpp"
#include "emc/packed_state.hpp"
#include "emc/run.hpp"
#include "emc/run_config.hpp"

namespace emc::testing {

using models::TokenRing;
using models::TokenRingVariant;

inline RunConfig plain() { return {}; }
inline RunConfig stubborn() {
  RunConfig c;
  c.stubborn = true;
  return c;
}
inline RunConfig symmetric() {
  RunConfig c;
  c.symmetry = true;
  return c;
}

inline std::set<PackedState> stored_states(const ExplorationResult& r) {
  std::set<PackedState> out;
  for (StateIndex i = 0; i < r.states(); ++i) out.emplace(r.store.state(i));
  return out;
}

// States of the store in which no transition is enabled.
inline std::set<PackedState> terminal_states(Model& model, unsigned transitions,
                                             const ExplorationResult& r) {
  std::set<PackedState> out;
  for (StateIndex i = 0; i < r.states(); ++i) {
    bool any = false;
    for (unsigned t = 0; t < transitions && !any; ++t) {
      PackedState s(r.store.state(i));
      any = model.fire(s, t);
    }
    if (!any) out.emplace(r.store.state(i));
  }
  return out;
}

struct Transcript {
  RunReport report;
  std::vector<std::string> lines;
  std::string text;

  bool contains(const std::string& line) const {
    for (const auto& l : lines) {
      if (l == line) return true;
    }
    return false;
  }
};

inline Transcript run_transcript(Model& model, const RunConfig& cfg,
                                 bool quiet = false) {
  std::ostringstream out;
  Transcript t;
  t.report = run_checks(model, cfg, out, RunOptions{quiet});
  t.text = out.str();
  std::istringstream in(t.text);
  for (std::string line; std::getline(in, line);) t.lines.push_back(line);
  return t;
}

}  // namespace emc::testing
