#include <gtest/gtest.h>

#include <random>

#include "emc/errors.hpp"
#include "emc/explorer.hpp"
#include "emc/symmetry.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"
#include "support/test_models.hpp"

namespace emc {
namespace {

using testing::TokenRing;
using testing::TokenRingVariant;

TEST(Symmetry, CanonicalStatesKeepTheTokenAtServerOne) {
  TokenRing model(3);
  const auto plan = validate(model, testing::plain());
  PackedState s = plan.initial;
  model.token().set(s, 1, 0);
  model.token().set(s, 0, 1);
  model.customer().set(s, 0, 2);
  canonicalize(model, s);
  // shift by prev(0) = 2: old index 2 moves to 0, old index 0 to 1
  EXPECT_EQ(model.format_state(s), "-i Ci*-i ");

  PackedState already = plan.initial;
  canonicalize(model, already);
  EXPECT_EQ(already, plan.initial);
}

TEST(Symmetry, MissingTokenIsAModelError) {
  TokenRing model(3);
  const auto plan = validate(model, testing::plain());
  PackedState s = plan.initial;
  model.token().set(s, 1, 0);
  EXPECT_THROW(canonicalize(model, s), ModelError);
}

// Random walks through the plain space: the representative is idempotent
// and stays in the same orbit (a rotation of the original).
TEST(SymmetryProperty, IdempotentOnRandomReachableStates) {
  TokenRing model(4);
  const auto plan = validate(model, testing::plain());
  std::mt19937 rng(99);
  PackedState s = plan.initial;
  for (int step = 0; step < 1000; ++step) {
    std::vector<unsigned> order(plan.transitions);
    for (unsigned t = 0; t < plan.transitions; ++t) order[t] = t;
    std::shuffle(order.begin(), order.end(), rng);
    bool moved = false;
    for (unsigned t : order) {
      if (model.fire(s, t)) {
        moved = true;
        break;
      }
    }
    if (!moved) s = plan.initial;

    PackedState once = s;
    model.symmetry_representative(once);
    PackedState twice = once;
    model.symmetry_representative(twice);
    ASSERT_EQ(once, twice);
    ASSERT_EQ(model.token().get(once, 1), 1u);

    unsigned c_sum_a = 0, c_sum_b = 0;
    for (unsigned i = 0; i < 4; ++i) {
      c_sum_a += model.customer().get(s, i) + 4 * model.server().get(s, i);
      c_sum_b += model.customer().get(once, i) + 4 * model.server().get(once, i);
    }
    ASSERT_EQ(c_sum_a, c_sum_b);
  }
}

TEST(SymmetryProperty, QuotientMatchesOracle) {
  for (auto variant : {TokenRingVariant::correct, TokenRingVariant::faulty_guard,
                       TokenRingVariant::modified_progress}) {
    for (unsigned n = 2; n <= 4; ++n) {
      TokenRing model(n, variant);
      const auto plan = validate(model, testing::plain());
      const auto g =
          testing::enumerate_dfs(model, plan.initial, plan.transitions, true);
      const auto r = explore(model, validate(model, testing::symmetric()));
      ASSERT_TRUE(r.verdict.ok());
      EXPECT_EQ(testing::stored_states(r), g.state_set());
      std::uint64_t edges = 0;
      for (const auto& s : g.succ) edges += s.size();
      EXPECT_EQ(r.edges, edges);
    }
  }
}

TEST(Symmetry, TokenRingCounts) {
  const std::pair<std::uint64_t, std::uint64_t> expected[] = {
      {34, 70}, {156, 450}, {732, 2720}, {3456, 15720}, {16344, 87960}};
  for (unsigned n = 2; n <= 6; ++n) {
    TokenRing model(n);
    const auto r = explore(model, validate(model, testing::symmetric()));
    EXPECT_TRUE(r.verdict.ok());
    EXPECT_EQ(r.states(), expected[n - 2].first) << "n=" << n;
    EXPECT_EQ(r.edges, expected[n - 2].second) << "n=" << n;
  }
}

TEST(Symmetry, CombinedWithStubbornShrinksFurther) {
  TokenRing a(4), b(4);
  const auto sym = explore(a, validate(a, testing::symmetric()));
  RunConfig both = testing::stubborn();
  both.symmetry = true;
  const auto mixed = explore(b, validate(b, both));
  EXPECT_TRUE(mixed.verdict.ok());
  EXPECT_LT(mixed.states(), sym.states());
}

TEST(Symmetry, SafetyVerdictIsPreserved) {
  TokenRing a(3, TokenRingVariant::broken_mutex), b(3, TokenRingVariant::broken_mutex);
  const auto plain = explore(a, validate(a, testing::plain()));
  const auto sym = explore(b, validate(b, testing::symmetric()));
  EXPECT_EQ(plain.verdict.kind, VerdictKind::safety_error);
  EXPECT_EQ(sym.verdict.kind, VerdictKind::safety_error);
  EXPECT_EQ(plain.verdict.message, sym.verdict.message);
}

TEST(Symmetry, SymmMustEnlargesTheQuotient) {
  TokenRing plain_sym(4), tracked(4, TokenRingVariant::correct, true);
  const auto a = explore(plain_sym, validate(plain_sym, testing::symmetric()));
  const auto b = explore(tracked, validate(tracked, testing::symmetric()));
  EXPECT_GT(b.states(), a.states());
  for (StateIndex i = 0; i < b.states(); ++i) {
    ASSERT_LT(tracked.c0now().get(b.store.state(i)), 4u);
  }
}

// Representative that is deliberately not idempotent: it toggles between
// two vertices.
class Flapping : public testing::GraphModel {
 public:
  Flapping() : GraphModel({{0, 1}, {0, 2}}) { caps.provide(Capability::symmetry); }
  void symmetry_representative(StateWords s) override {
    const unsigned v = vertex(s);
    if (v == 1 || v == 2) write(s, 3 - v);
  }

 private:
  void write(StateWords s, unsigned v) { s[0] = v; }
};

TEST(Symmetry, IdempotenceViolationsAreCountedNotFatal) {
  Flapping model;
  RunConfig cfg = testing::symmetric();
  cfg.debug_checks = true;
  const auto r = explore(model, validate(model, cfg));
  EXPECT_TRUE(r.verdict.ok());
  EXPECT_GT(r.idempotence_violations, 0u);

  Flapping quiet;
  const auto q = explore(quiet, validate(quiet, testing::symmetric()));
  EXPECT_EQ(q.idempotence_violations, 0u);
}

}  // namespace
}  // namespace emc
