#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "emc/explorer.hpp"
#include "emc/run_config.hpp"

namespace emc {

// Edges of the explored state space, reversed and stored compactly: one
// 32-bit predecessor index per edge, grouped by target state.
struct ReverseGraph {
  std::vector<std::uint64_t> offsets;  // size states+1
  std::vector<StateIndex> sources;     // size edges
  std::vector<bool> terminal;          // no transition enabled

  std::size_t states() const { return terminal.size(); }
  std::size_t edges() const { return sources.size(); }
  std::span<const StateIndex> predecessors(StateIndex v) const {
    return {sources.data() + offsets[v], sources.data() + offsets[v + 1]};
  }
  std::vector<StateIndex> terminal_states() const;
};

// Re-fires, in every stored state, the transitions stage 1 fired there (same
// stubborn selection, same canonicalization), once to count in-degrees and
// once to fill. Throws InternalError when the re-fired edges do not match
// stage 1.
ReverseGraph build_reverse(Model& model, const RunPlan& plan,
                           const ExplorationResult& result);

// States from which some seed is reachable (seeds included).
std::vector<bool> backward_reach(const ReverseGraph& rg,
                                 std::span<const StateIndex> seeds);

// Flags the lowest-indexed state from which neither a terminal state nor a
// state accepted by is_may_progress is reachable.
Finding check_may_progress(Model& model, const ExplorationResult& result,
                           const ReverseGraph& rg);

// Looks for a cycle through states rejected by is_must_progress. The
// reported cycle is rotated to start at its lowest-indexed state.
Finding check_must_progress(Model& model, const ExplorationResult& result,
                            const ReverseGraph& rg);

// Checks that a terminal state is reachable from every stored state. The
// counterexample goes to the lowest-indexed state that cannot terminate and
// then follows the first fired transition until a state repeats.
Finding check_ag_ef_terminating(Model& model, const RunPlan& plan,
                                const ExplorationResult& result,
                                const ReverseGraph& rg);

}  // namespace emc
