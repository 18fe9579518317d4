#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "support.hpp"

using namespace wonderful;
using testing_support::calculus;
using testing_support::word;

namespace {

std::set<std::size_t> indices(const OrbitCalculus& calc, const std::vector<OrbitLabel>& labels) {
  std::set<std::size_t> out;
  for (const OrbitLabel& o : labels) out.insert(calc.index_of(o));
  return out;
}

}  // namespace

TEST(Oracle, MinimalOrbitExamples) {
  const OrbitCalculus a1 = calculus("A1");
  EXPECT_EQ(minimal_orbit(a1, SimpleSubset::full(1)), (OrbitLabel{SimpleSubset::full(1), 0, 0, 1}));
  EXPECT_EQ(minimal_orbit(a1, SimpleSubset()), (OrbitLabel{SimpleSubset(), 1, 1, 0}));
  const OrbitCalculus a2 = calculus("A2");
  const OrbitLabel m = minimal_orbit(a2, SimpleSubset::of({0}));
  EXPECT_EQ(a2.codim(m), 5);
  // No orbit of the stratum has larger codimension.
  for (const OrbitLabel& o : a2.enumerate_orbits(SimpleSubset::of({0}))) EXPECT_LE(a2.codim(o), a2.codim(m));
}

TEST(Oracle, MinimalOrbitIsBelowEverythingInItsStratum) {
  for (const std::string type : {"A2", "B2", "G2", "A3"}) {
    const OrbitCalculus calc = calculus(type);
    for (SimpleSubset J : calc.strata()) {
      const OrbitLabel m = minimal_orbit(calc, J);
      for (const OrbitLabel& o : calc.enumerate_orbits(J)) {
        EXPECT_TRUE(calc.closure_leq(m, o));
        for (Side side : {Side::Left, Side::Right})
          for (SimpleIndex a = 0; a < calc.rank(); ++a)
            if (o != m) {
              EXPECT_NE(calc.rank1_act(o, side, a), m);
            }
      }
    }
  }
}

TEST(Oracle, SubwordClosureExamples) {
  const OrbitCalculus a1 = calculus("A1");
  const OrbitLabel m = minimal_orbit(a1, SimpleSubset());
  EXPECT_EQ(subword_closure_same_stratum(a1, m), std::vector<OrbitLabel>{m});
  EXPECT_EQ(subword_closure_same_stratum(a1, {SimpleSubset::full(1), 0, 0, 0}).size(), 2u);
  EXPECT_EQ(subword_closure_same_stratum(a1, {SimpleSubset(), 0, 0, 0}).size(), 4u);
}

TEST(Oracle, MoveTraceReplays) {
  const OrbitCalculus calc = calculus("B2");
  for (const OrbitLabel& o : calc.enumerate_orbits())
    for (ExpressionChoice choice : {ExpressionChoice::ShortLex, ExpressionChoice::Alternate}) {
      const MoveTrace trace = move_trace(calc, o, choice);
      EXPECT_EQ(trace.start, minimal_orbit(calc, o.stratum));
      EXPECT_EQ(replay(calc, trace.start, trace.moves), o);
      EXPECT_EQ(static_cast<long>(trace.moves.size()), calc.codim(trace.start) - calc.codim(o));
    }
}

TEST(Oracle, SubwordClosureMatchesSameStratumCriterion) {
  for (const std::string type : {"A1", "A1xA1", "A2", "B2", "G2", "A3"}) {
    SCOPED_TRACE(type);
    const OrbitCalculus calc = calculus(type);
    for (SimpleSubset J : calc.strata()) {
      const auto labels = calc.enumerate_orbits(J);
      for (const OrbitLabel& target : labels) {
        std::set<std::size_t> expected;
        for (const OrbitLabel& o : labels)
          if (calc.closure_leq_same_stratum(o, target)) expected.insert(calc.index_of(o));
        EXPECT_EQ(indices(calc, subword_closure_same_stratum(calc, target)), expected) << calc.format(target);
      }
    }
  }
}

TEST(Oracle, ExpressionIndependence) {
  for (const std::string type : {"A2", "B2", "G2", "A1xA1"}) {
    SCOPED_TRACE(type);
    const OrbitCalculus calc = calculus(type);
    std::size_t distinct_words = 0;
    for (const OrbitLabel& o : calc.enumerate_orbits()) {
      const auto a = move_trace(calc, o, ExpressionChoice::ShortLex);
      const auto b = move_trace(calc, o, ExpressionChoice::Alternate);
      distinct_words += a.moves != b.moves;
      EXPECT_EQ(subword_closure_same_stratum(calc, o, ExpressionChoice::ShortLex),
                subword_closure_same_stratum(calc, o, ExpressionChoice::Alternate));
    }
    EXPECT_GT(distinct_words, 0u);
  }
}

TEST(Oracle, DownwardSaturation) {
  for (const std::string type : {"A2", "B2", "G2"}) {
    const OrbitCalculus calc = calculus(type);
    for (const OrbitLabel& o : calc.enumerate_orbits()) {
      const auto outer = indices(calc, subword_closure_same_stratum(calc, o));
      for (std::size_t inner_index : outer) {
        const auto inner = indices(calc, subword_closure_same_stratum(calc, calc.label_at(inner_index)));
        EXPECT_TRUE(std::includes(outer.begin(), outer.end(), inner.begin(), inner.end()));
      }
    }
  }
}

TEST(Oracle, OraclePosetMatchesFormula) {
  for (const std::string type : {"A0", "A1", "A1xA1", "A2", "B2", "G2", "A1xA1xA1", "A1xA2"}) {
    SCOPED_TRACE(type);
    const CheckResult r = check_poset_oracle(calculus(type));
    EXPECT_TRUE(r.passed()) << (r.failures.empty() ? "" : r.failures.front());
  }
  auto b2 = build_root_system(cartan_of_type("B2"));
  EXPECT_TRUE(check_poset_oracle(OrbitCalculus(b2, WeightFunction::from_simple_orbits(*b2, {{0, 2}}))).passed());
}

TEST(Oracle, ComparePosets) {
  const OrbitCalculus calc = calculus("A1");
  const ClosurePoset p = closure_poset(calc);
  EXPECT_TRUE(compare_posets(p, p).empty());
  ASSERT_FALSE(p.hasse.empty());
  const auto [i, j] = p.hasse.front();
  ClosurePoset cut = p;
  cut.below[j].reset(i);
  const PosetDiff diff = compare_posets(p, cut);
  EXPECT_EQ(diff.only_first, (std::vector<std::pair<std::size_t, std::size_t>>{{i, j}}));
  EXPECT_TRUE(diff.only_second.empty());
  EXPECT_THROW(compare_posets(p, closure_poset(calculus("A2"))), std::invalid_argument);
  EXPECT_FALSE(check_poset_oracle(calc, /*inject_fault=*/true).passed());
}

TEST(Oracle, SubwordBruhatExamples) {
  const CoxeterTable a2(build_root_system(cartan_of_type("A2")));
  EXPECT_TRUE(subword_bruhat_leq(a2, a2.from_word(word({1})), a2.from_word(word({1, 2}))));
  EXPECT_FALSE(subword_bruhat_leq(a2, a2.from_word(word({1})), a2.from_word(word({2}))));
  for (ElementId w = 0; w < a2.size(); ++w) EXPECT_TRUE(subword_bruhat_leq(a2, CoxeterTable::identity(), w));
}
