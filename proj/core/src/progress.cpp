#include "emc/progress.hpp"

#include <algorithm>
#include <utility>

#include "emc/errors.hpp"
#include "emc/successors.hpp"

namespace emc {

std::vector<StateIndex> ReverseGraph::terminal_states() const {
  std::vector<StateIndex> out;
  for (std::size_t i = 0; i < terminal.size(); ++i) {
    if (terminal[i]) out.push_back(static_cast<StateIndex>(i));
  }
  return out;
}

ReverseGraph build_reverse(Model& model, const RunPlan& plan,
                           const ExplorationResult& result) {
  if (!result.verdict.ok()) {
    throw ContractViolation("reverse graph needs a completed stage 1");
  }
  const StateStore& store = result.store;
  const std::size_t n = store.size();
  SuccessorGenerator successors(model, plan);

  ReverseGraph rg;
  rg.offsets.assign(n + 1, 0);
  rg.terminal.assign(n, false);

  const auto target_of = [&](ConstStateWords succ) {
    const auto j = store.find(succ);
    if (!j) throw InternalError("re-fired successor is not a stored state");
    return *j;
  };

  std::uint64_t counted = 0;
  for (StateIndex i = 0; i < n; ++i) {
    const Expansion how =
        successors.expand(store.state(i), [&](unsigned, ConstStateWords succ) {
          ++rg.offsets[target_of(succ)];
          ++counted;
          return true;
        });
    rg.terminal[i] = how == Expansion::terminal;
  }
  if (counted != result.edges) {
    throw InternalError("stage 2 re-fired " + std::to_string(counted) +
                        " edges, stage 1 fired " + std::to_string(result.edges));
  }

  std::uint64_t running = 0;
  for (std::size_t v = 0; v < n; ++v) {
    running += std::exchange(rg.offsets[v], running);
  }
  rg.offsets[n] = running;

  rg.sources.resize(counted);
  for (StateIndex i = 0; i < n; ++i) {
    successors.expand(store.state(i), [&](unsigned, ConstStateWords succ) {
      std::uint64_t& cursor = rg.offsets[target_of(succ)];
      if (cursor >= counted) throw InternalError("stage 2 edge overflow");
      rg.sources[cursor++] = i;
      return true;
    });
  }
  // each offsets[v] now holds the end of v's range, i.e. the start of v+1's
  for (std::size_t v = n; v > 0; --v) rg.offsets[v] = rg.offsets[v - 1];
  rg.offsets[0] = 0;
  return rg;
}

std::vector<bool> backward_reach(const ReverseGraph& rg,
                                 std::span<const StateIndex> seeds) {
  std::vector<bool> marked(rg.states(), false);
  std::vector<StateIndex> queue;
  queue.reserve(seeds.size());
  for (StateIndex s : seeds) {
    if (!marked[s]) {
      marked[s] = true;
      queue.push_back(s);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (StateIndex u : rg.predecessors(queue[head])) {
      if (!marked[u]) {
        marked[u] = true;
        queue.push_back(u);
      }
    }
  }
  return marked;
}

Finding check_may_progress(Model& model, const ExplorationResult& result,
                           const ReverseGraph& rg) {
  std::vector<StateIndex> seeds;
  for (StateIndex i = 0; i < rg.states(); ++i) {
    const bool progress = model.is_may_progress(result.store.state(i));
    raise_if_err_msg(model);
    if (rg.terminal[i] || progress) seeds.push_back(i);
  }
  const std::vector<bool> marked = backward_reach(rg, seeds);

  Finding f;
  const auto it = std::find(marked.begin(), marked.end(), false);
  if (it == marked.end()) return f;
  f.kind = VerdictKind::may_progress_error;
  f.message =
      "State was reached from which no terminal or may progress state is reachable";
  f.state = static_cast<StateIndex>(it - marked.begin());
  return f;
}

Finding check_must_progress(Model& model, const ExplorationResult& result,
                            const ReverseGraph& rg) {
  const std::size_t n = rg.states();
  std::vector<bool> candidate(n);
  for (StateIndex i = 0; i < n; ++i) {
    candidate[i] = !model.is_must_progress(result.store.state(i));
    raise_if_err_msg(model);
  }

  // forward adjacency of the subgraph induced by non-progress states
  std::vector<std::uint64_t> offsets(n + 1, 0);
  for (StateIndex v = 0; v < n; ++v) {
    if (!candidate[v]) continue;
    for (StateIndex u : rg.predecessors(v)) {
      if (candidate[u]) ++offsets[u + 1];
    }
  }
  for (std::size_t u = 0; u < n; ++u) offsets[u + 1] += offsets[u];
  std::vector<StateIndex> targets(offsets[n]);
  {
    std::vector<std::uint64_t> cursor(offsets.begin(), offsets.end() - 1);
    for (StateIndex v = 0; v < n; ++v) {
      if (!candidate[v]) continue;
      for (StateIndex u : rg.predecessors(v)) {
        if (candidate[u]) targets[cursor[u]++] = v;
      }
    }
  }

  enum Color : unsigned char { white, grey, black };
  std::vector<unsigned char> color(n, white);
  std::vector<std::pair<StateIndex, std::uint64_t>> stack;

  Finding f;
  for (StateIndex root = 0; root < n; ++root) {
    if (!candidate[root] || color[root] != white) continue;
    color[root] = grey;
    stack.emplace_back(root, offsets[root]);
    while (!stack.empty()) {
      auto& [u, pos] = stack.back();
      if (pos == offsets[u + 1]) {
        color[u] = black;
        stack.pop_back();
        continue;
      }
      const StateIndex v = targets[pos++];
      if (color[v] == white) {
        color[v] = grey;
        stack.emplace_back(v, offsets[v]);
      } else if (color[v] == grey) {
        auto first = std::find_if(stack.begin(), stack.end(),
                                  [v](const auto& e) { return e.first == v; });
        std::vector<StateIndex> cycle;
        for (; first != stack.end(); ++first) cycle.push_back(first->first);
        std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()),
                    cycle.end());
        f.kind = VerdictKind::must_progress_error;
        f.message = "Cycle was found that contains no must progress state";
        f.state = cycle.front();
        f.lasso = std::move(cycle);
        f.cycle_start = 0;
        return f;
      }
    }
  }
  return f;
}

Finding check_ag_ef_terminating(Model& model, const RunPlan& plan,
                                const ExplorationResult& result,
                                const ReverseGraph& rg) {
  const std::vector<StateIndex> terminals = rg.terminal_states();
  const std::vector<bool> marked = backward_reach(rg, terminals);

  Finding f;
  const auto it = std::find(marked.begin(), marked.end(), false);
  if (it == marked.end()) return f;
  const auto target = static_cast<StateIndex>(it - marked.begin());

  // Unmarked states are closed under successors and none is terminal, so
  // following the first fired transition must end in a cycle.
  SuccessorGenerator successors(model, plan);
  std::vector<std::size_t> position(rg.states(), SIZE_MAX);
  std::vector<StateIndex> lasso;
  StateIndex cur = target;
  for (;;) {
    position[cur] = lasso.size();
    lasso.push_back(cur);
    StateIndex next = kNoState;
    successors.expand(result.store.state(cur), [&](unsigned, ConstStateWords succ) {
      if (const auto j = result.store.find(succ)) next = *j;
      return false;
    });
    if (next == kNoState || marked[next]) {
      throw InternalError("AG EF continuation left the non-terminating states");
    }
    if (position[next] != SIZE_MAX) {
      f.cycle_start = position[next];
      break;
    }
    cur = next;
  }

  f.kind = VerdictKind::ag_ef_error;
  f.message = "State was reached from which termination is unreachable";
  f.state = target;
  f.lasso = std::move(lasso);
  f.mark_boundary = true;
  return f;
}

}  // namespace emc
