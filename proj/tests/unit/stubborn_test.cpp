#include <gtest/gtest.h>

#include <map>
#include <numeric>

#include "emc/errors.hpp"
#include "emc/explorer.hpp"
#include "emc/report.hpp"
#include "emc/stubborn.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"
#include "support/test_models.hpp"

namespace emc {
namespace {

using testing::GraphModel;
using testing::TokenRing;
using testing::TokenRingVariant;

// Graph model with hand-written obligation rules; a rule of {-1} means
// stb_all().
class StubbornGraph : public GraphModel {
 public:
  explicit StubbornGraph(std::vector<Edge> edges) : GraphModel(std::move(edges)) {
    caps.provide(Capability::stubborn);
  }
  std::map<unsigned, std::vector<int>> rules;

  void next_stubborn(ConstStateWords, unsigned t, ObligationEmitter& out) override {
    const auto it = rules.find(t);
    if (it == rules.end()) return;
    for (int u : it->second) {
      if (u < 0) {
        out.stb_all();
      } else {
        out.stb(static_cast<unsigned>(u));
      }
    }
  }
};

struct Selected {
  std::vector<unsigned> members, enabled;
};

Selected select_initial(Model& model) {
  const auto plan = validate(model, testing::plain());
  StubbornSelector sel(model, plan.transitions, true);
  const auto s = sel.select(plan.initial);
  return {s.members, s.enabled};
}

TEST(Stubborn, PicksTheClosureWithFewestEnabled) {
  StubbornGraph g({{0, 1}, {0, 2}, {0, 3}, {1, 2}});
  g.rules = {{0, {1}}, {1, {0}}, {2, {3}}};
  const auto s = select_initial(g);
  EXPECT_EQ(s.members, (std::vector<unsigned>{2, 3}));
  EXPECT_EQ(s.enabled, std::vector<unsigned>{2});
}

TEST(Stubborn, TiesGoToTheLowestRoot) {
  StubbornGraph g({{0, 1}, {0, 2}, {0, 3}});
  const auto s = select_initial(g);
  EXPECT_EQ(s.enabled, std::vector<unsigned>{0});

  StubbornGraph h({{0, 1}, {0, 2}, {0, 3}});
  h.rules = {{0, {1}}};
  EXPECT_EQ(select_initial(h).enabled, std::vector<unsigned>{1});
}

TEST(Stubborn, StbAllYieldsEveryTransition) {
  StubbornGraph g({{0, 1}, {0, 2}, {1, 2}});
  g.rules = {{0, {-1}}, {1, {-1}}};
  const auto s = select_initial(g);
  EXPECT_EQ(s.members, (std::vector<unsigned>{0, 1, 2}));
  EXPECT_EQ(s.enabled, (std::vector<unsigned>{0, 1}));
}

TEST(Stubborn, TerminalStateHasNoSelection) {
  StubbornGraph g({{1, 0}});
  const auto plan = validate(g, testing::plain());
  StubbornSelector sel(g, plan.transitions, false);
  EXPECT_TRUE(sel.select(plan.initial).terminal);
}

TEST(Stubborn, ObligationOutOfRangeIsAContractViolation) {
  StubbornGraph g({{0, 1}});
  g.rules = {{0, {5}}};
  EXPECT_THROW(select_initial(g), ContractViolation);
}

TEST(Stubborn, ExplorationFollowsTheSelection) {
  // 0 -> 1 and 0 -> 2 commute into 3; the rules allow firing just one
  StubbornGraph g({{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  const auto r = explore(g, validate(g, testing::stubborn()));
  EXPECT_EQ(r.states(), 3u);
  EXPECT_EQ(r.edges, 2u);
}

TEST(Stubborn, TokenRingClosureAtTheInitialState) {
  TokenRing model(2);
  const auto plan = validate(model, testing::plain());
  StubbornSelector sel(model, plan.transitions, true);
  std::vector<unsigned> all(6);
  std::iota(all.begin(), all.end(), 0u);
  EXPECT_EQ(sel.closure(plan.initial, 0), all);
  const auto s = sel.select(plan.initial);
  EXPECT_EQ(s.enabled, (std::vector<unsigned>{0, 1, 2, 3}));
  EXPECT_THROW(sel.closure(plan.initial, 6), ContractViolation);
}

TEST(Stubborn, TokenRingClosureOfAWaitingServer) {
  TokenRing model(3);
  const auto plan = validate(model, testing::plain());
  PackedState s = plan.initial;
  // customer 0 requested, server 0 waits for the token
  model.customer().set(s, 0, 1);
  model.server().set(s, 0, 1);
  StubbornSelector sel(model, plan.transitions, true);
  // server 0 lacks the token and needs server 2; server 2 can react to the
  // waiting server 0, so it adds nothing
  EXPECT_EQ(sel.closure(s, 6), (std::vector<unsigned>{6, 8}));
}

TEST(Stubborn, TokenRingOfTwoCounts) {
  TokenRing model(2);
  const auto r = explore(model, validate(model, testing::stubborn()));
  EXPECT_TRUE(r.verdict.ok());
  EXPECT_EQ(r.states(), 44u);
  EXPECT_EQ(r.edges, 60u);
}

// Checks the two defining conditions of strong stubborn sets in every
// reachable state, against every sequence of at most `depth` transitions
// outside the set:
//   commutation: s -seq t-> s' implies s -t seq-> s' for each member t
//   key:         each enabled member stays enabled after seq
// Returns the number of violations.
std::size_t stubborn_violations(TokenRing& model, unsigned depth) {
  const auto plan = validate(model, testing::plain());
  const auto r = explore(model, plan);
  const unsigned m = plan.transitions;
  StubbornSelector sel(model, m, false);
  std::size_t bad = 0;
  for (StateIndex i = 0; i < r.states(); ++i) {
    const PackedState s(r.store.state(i));
    const auto selected = sel.select(s);
    if (selected.terminal) continue;
    const auto& in = selected.members;
    const auto member = [&](unsigned t) {
      return std::binary_search(in.begin(), in.end(), t);
    };

    std::map<PackedState, std::vector<unsigned>> seen{{s, {}}};
    std::vector<PackedState> frontier{s};
    while (!frontier.empty()) {
      const PackedState u = frontier.back();
      frontier.pop_back();
      const std::vector<unsigned> seq = seen.at(u);
      for (unsigned t : selected.enabled) {
        PackedState x = u;
        if (!model.fire(x, t)) ++bad;
      }
      for (unsigned t : in) {
        PackedState x = u;
        if (!model.fire(x, t)) continue;
        PackedState y = s;
        bool ok = model.fire(y, t);
        for (unsigned a : seq) ok = ok && model.fire(y, a);
        if (!ok || y != x) ++bad;
      }
      if (seq.size() >= depth) continue;
      for (unsigned t = 0; t < m; ++t) {
        PackedState x = u;
        if (member(t) || !model.fire(x, t) || seen.count(x)) continue;
        auto longer = seq;
        longer.push_back(t);
        seen.emplace(x, std::move(longer));
        frontier.push_back(x);
      }
    }
  }
  return bad;
}

TEST(StubbornProperty, SelectionsAreStrongStubbornSets) {
  for (auto variant : {TokenRingVariant::correct, TokenRingVariant::modified_progress}) {
    for (unsigned n = 2; n <= 3; ++n) {
      TokenRing model(n, variant);
      EXPECT_EQ(stubborn_violations(model, 4), 0u) << to_string(variant) << " n=" << n;
    }
  }
}

// The obligation rules assume the guard tests that the next server lacks
// the token; without that test they are unsound.
TEST(StubbornProperty, FaultyGuardBreaksTheRules) {
  TokenRing model(2, TokenRingVariant::faulty_guard);
  EXPECT_GT(stubborn_violations(model, 4), 0u);
}

// Terminal states are exactly preserved by the reduction when the rules are
// sound.
TEST(StubbornProperty, DeadlockSetEqualsPlain) {
  for (auto variant : {TokenRingVariant::correct, TokenRingVariant::modified_progress}) {
    for (unsigned n = 2; n <= 4; ++n) {
      TokenRing model(n, variant);
      const auto plan = validate(model, testing::plain());
      const auto g = testing::enumerate_dfs(model, plan.initial, plan.transitions);
      std::set<PackedState> oracle;
      for (std::size_t i = 0; i < g.states.size(); ++i) {
        if (g.terminal(i)) oracle.insert(g.states[i]);
      }
      const auto r = explore(model, validate(model, testing::stubborn()));
      ASSERT_TRUE(r.verdict.ok());
      EXPECT_EQ(testing::terminal_states(model, plan.transitions, r), oracle)
          << to_string(variant) << " n=" << n;
    }
  }
}

TEST(StubbornProperty, SafetyAndDeadlockVerdictsAgree) {
  for (auto variant : {TokenRingVariant::correct, TokenRingVariant::faulty_guard,
                       TokenRingVariant::modified_progress,
                       TokenRingVariant::broken_mutex}) {
    for (unsigned n = 2; n <= 4; ++n) {
      TokenRing a(n, variant), b(n, variant);
      const auto plain = explore(a, validate(a, testing::plain()));
      const auto red = explore(b, validate(b, testing::stubborn()));
      EXPECT_EQ(plain.verdict.kind, red.verdict.kind) << to_string(variant) << " n=" << n;
      EXPECT_EQ(plain.verdict.message, red.verdict.message);
    }
  }
}

TEST(StubbornProperty, NeverLargerThanPlain) {
  for (unsigned n = 2; n <= 6; ++n) {
    TokenRing a(n), b(n);
    const auto plain = explore(a, validate(a, testing::plain()));
    const auto red = explore(b, validate(b, testing::stubborn()));
    EXPECT_LE(red.states(), plain.states()) << "n=" << n;
    EXPECT_LE(red.edges, plain.edges) << "n=" << n;
  }
}

// With debug checks every selection is re-verified to be closed under the
// obligations; any gap throws InternalError.
TEST(StubbornProperty, SelectionsAreClosed) {
  for (auto variant : {TokenRingVariant::correct, TokenRingVariant::faulty_guard,
                       TokenRingVariant::modified_progress}) {
    for (unsigned n = 2; n <= 4; ++n) {
      TokenRing model(n, variant);
      RunConfig cfg = testing::stubborn();
      cfg.debug_checks = true;
      EXPECT_NO_THROW(explore(model, validate(model, cfg)));
    }
  }
}

TEST(StubbornProperty, EnabledMembersAreNonEmptyAndReallyEnabled) {
  TokenRing model(3);
  const auto plan = validate(model, testing::plain());
  const auto r = explore(model, plan);
  StubbornSelector sel(model, plan.transitions, true);
  for (StateIndex i = 0; i < r.states(); ++i) {
    const auto s = sel.select(r.store.state(i));
    if (s.terminal) continue;
    ASSERT_FALSE(s.enabled.empty());
    for (unsigned t = 0; t < plan.transitions; ++t) {
      PackedState x(r.store.state(i));
      const bool en = model.fire(x, t);
      const bool member = std::binary_search(s.members.begin(), s.members.end(), t);
      const bool listed = std::binary_search(s.enabled.begin(), s.enabled.end(), t);
      ASSERT_EQ(listed, member && en);
    }
  }
}

TEST(Stubborn, FaultyGuardTerminationErrorIsReported) {
  TokenRing model(2, TokenRingVariant::faulty_guard);
  const auto t = testing::run_transcript(model, testing::stubborn());
  EXPECT_EQ(t.report.verdict, VerdictKind::ag_ef_error);
  EXPECT_TRUE(t.contains("!!! State was reached from which termination is unreachable"));
  EXPECT_TRUE(t.contains(kBoundaryMarker));
  EXPECT_TRUE(t.contains(kCycleMarker));
  EXPECT_EQ(t.lines.front(), "-i -i*");
  EXPECT_EQ(t.lines.back(), "54 states, 74 edges");
}

TEST(Stubborn, CorrectRingTerminatesEverywhere) {
  for (unsigned n = 2; n <= 6; ++n) {
    TokenRing model(n);
    const auto t = testing::run_transcript(model, testing::stubborn(), true);
    EXPECT_EQ(t.report.verdict, VerdictKind::pass) << "n=" << n << "\n" << t.text;
    EXPECT_EQ(t.report.stages.back(), "ag_ef");
  }
}

}  // namespace
}  // namespace emc
