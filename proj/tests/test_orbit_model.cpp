#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "support.hpp"

using namespace wonderful;
using testing_support::calculus;
using testing_support::word;

namespace {

struct Labels {
  const OrbitCalculus& calc;
  ElementId w(std::initializer_list<int> letters) const { return calc.group().from_word(word(letters)); }
  OrbitLabel make(SimpleSubset I, std::initializer_list<int> sigma, std::initializer_list<int> tau,
                  std::initializer_list<int> rho) const {
    return {I, w(sigma), w(tau), w(rho)};
  }
};

std::string first_failure(const CheckResult& r) { return r.failures.empty() ? "" : r.failures.front(); }

}  // namespace

TEST(OrbitModel, EnumerationCounts) {
  EXPECT_EQ(calculus("A0").enumerate_orbits().size(), 1u);
  const OrbitCalculus a1 = calculus("A1");
  EXPECT_EQ(a1.enumerate_orbits().size(), 6u);
  EXPECT_EQ(a1.enumerate_orbits(SimpleSubset::full(1)).size(), 2u);
  EXPECT_EQ(a1.enumerate_orbits(SimpleSubset()).size(), 4u);
  EXPECT_EQ(calculus("A2").enumerate_orbits().size(), 78u);
}

TEST(OrbitModel, StratumSizesFollowTheCosetFormula) {
  for (const std::string& type : testing_support::small_types()) {
    SCOPED_TRACE(type);
    const OrbitCalculus calc = calculus(type);
    const std::size_t order = calc.group().size();
    std::size_t total = 0;
    for (SimpleSubset J : calc.strata()) {
      const std::size_t expected = order * order / calc.parabolic(J).size();
      const auto labels = calc.enumerate_orbits(J);
      EXPECT_EQ(labels.size(), expected);
      std::set<std::size_t> indices;
      for (const OrbitLabel& o : labels) indices.insert(calc.index_of(o));
      EXPECT_EQ(indices.size(), expected);
      total += expected;
    }
    EXPECT_EQ(calc.orbit_count(), total);
  }
}

TEST(OrbitModel, EnumerationOrderAndIndexing) {
  const OrbitCalculus calc = calculus("B2");
  const auto labels = calc.enumerate_orbits();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    EXPECT_EQ(calc.index_of(labels[i]), i);
    EXPECT_EQ(calc.label_at(i), labels[i]);
    EXPECT_TRUE(calc.is_valid(labels[i]));
  }
  for (std::size_t i = 1; i < labels.size(); ++i)
    EXPECT_FALSE(stratum_order_less(labels[i].stratum, labels[i - 1].stratum));
}

TEST(OrbitModel, OrbitCapIsEnforced) {
  Caps caps;
  caps.orbits = 10;
  const OrbitCalculus calc(build_root_system(cartan_of_type("A2")), caps);
  EXPECT_THROW(calc.enumerate_orbits(), CapExceeded);
  EXPECT_EQ(calc.enumerate_orbits(SimpleSubset::full(2)).size(), 6u);
}

TEST(OrbitModel, CanonicalizeExamples) {
  const OrbitCalculus calc = calculus("A2");
  const Labels L{calc};
  EXPECT_EQ(calc.canonicalize(SimpleSubset(), L.w({1, 2}), L.w({2})), L.make(SimpleSubset(), {1, 2}, {2}, {}));
  EXPECT_EQ(calc.canonicalize(SimpleSubset::of({0}), L.w({2, 1}), L.w({1})), L.make(SimpleSubset::of({0}), {2}, {}, {}));
  for (const OrbitLabel& o : calc.enumerate_orbits())
    EXPECT_EQ(calc.canonicalize(o.stratum, calc.group().multiply(o.sigma, o.rho), o.tau), o);
}

TEST(OrbitModel, CanonicalizeIsInvariantExhaustivelyInRankTwo) {
  for (const std::string type : {"A1xA1", "A2", "B2", "G2"}) {
    SCOPED_TRACE(type);
    const OrbitCalculus calc = calculus(type);
    const CoxeterTable& g = calc.group();
    for (SimpleSubset I : calc.strata())
      for (ElementId x = 0; x < g.size(); ++x)
        for (ElementId y = 0; y < g.size(); ++y) {
          const OrbitLabel o = calc.canonicalize(I, x, y);
          ASSERT_TRUE(calc.is_valid(o));
          for (ElementId v : calc.parabolic(I)) EXPECT_EQ(calc.canonicalize(I, g.multiply(x, v), g.multiply(y, v)), o);
        }
  }
}

TEST(OrbitModel, CanonicalizeIsInvariantOnSamplesInRankThree) {
  for (const std::string type : {"A3", "B3", "C3", "A1xA2"}) {
    SCOPED_TRACE(type);
    const CheckResult r = check_labels(calculus(type), testing_support::seed(), 3000);
    EXPECT_TRUE(r.passed()) << first_failure(r);
  }
}

TEST(OrbitModel, StratumOrder) {
  const SimpleSubset a = SimpleSubset::of({0});
  const SimpleSubset b = SimpleSubset::of({1});
  const SimpleSubset all = SimpleSubset::full(2);
  for (SimpleSubset J : all_subsets(2)) {
    EXPECT_TRUE(stratum_leq(SimpleSubset(), J));
    EXPECT_EQ(stratum_leq(all, J), J == all);
  }
  EXPECT_FALSE(stratum_leq(a, b));
}

TEST(OrbitModel, CodimExamples) {
  const OrbitCalculus a1 = calculus("A1");
  const Labels L1{a1};
  EXPECT_EQ(a1.codim(L1.make(SimpleSubset::full(1), {}, {}, {})), 0);
  EXPECT_EQ(a1.codim(L1.make(SimpleSubset(), {1}, {1}, {})), 2);
  const OrbitCalculus a2 = calculus("A2");
  const Labels L2{a2};
  EXPECT_EQ(a2.codim(L2.make(SimpleSubset::full(2), {}, {}, {1, 2})), 2);
}

TEST(OrbitModel, SplitDimensionExamples) {
  const OrbitCalculus a1 = calculus("A1");
  const Labels L{a1};
  const SimpleSubset all = SimpleSubset::full(1);
  EXPECT_EQ(a1.split_dimension(L.make(all, {}, {}, {})), 3);
  EXPECT_EQ(a1.split_dimension(L.make(SimpleSubset(), {1}, {1}, {})), 0);
  EXPECT_EQ(a1.split_dimension(L.make(all, {}, {}, {1})), 2);
}

TEST(OrbitModel, SplitDimensionMinusCodimIsConstantOnStrata) {
  for (const std::string& type : testing_support::small_types()) {
    const OrbitCalculus calc = calculus(type);
    for (SimpleSubset I : calc.strata()) {
      const long open = calc.split_dimension({I, 0, 0, 0});
      for (const OrbitLabel& o : calc.enumerate_orbits(I)) EXPECT_EQ(open - calc.split_dimension(o), calc.codim(o));
    }
  }
}

TEST(OrbitModel, SplitOnlyOperationsAreGuarded) {
  auto b2 = build_root_system(cartan_of_type("B2"));
  const OrbitCalculus weighted(b2, WeightFunction::from_simple_orbits(*b2, {{0, 2}}));
  EXPECT_FALSE(weighted.is_split_model());
  const OrbitLabel open{SimpleSubset::full(2), 0, 0, 0};
  EXPECT_THROW(weighted.split_dimension(open), std::domain_error);
  EXPECT_THROW(weighted.point_count_poly(open), std::domain_error);
  const OrbitCalculus nonreduced(build_root_system(cartan_of_type("B2"), {b2->cartan()[0][1] == -2 ? 0 : 1}));
  EXPECT_THROW(nonreduced.split_dimension(open), std::domain_error);
  // Codimension uses the weights: s_1 inverts one root of weight 2.
  const OrbitLabel sigma1{SimpleSubset(), weighted.group().from_word(word({1})), 0, 0};
  EXPECT_EQ(weighted.codim(sigma1), weighted.weighted_length(sigma1.sigma));
}

TEST(OrbitModel, Rank1ActExamples) {
  const OrbitCalculus a2 = calculus("A2");
  const Labels L{a2};
  EXPECT_EQ(a2.rank1_act(L.make(SimpleSubset(), {1, 2}, {}, {}), Side::Left, 0), L.make(SimpleSubset(), {2}, {}, {}));
  const SimpleSubset b = SimpleSubset::of({1});
  EXPECT_EQ(a2.rank1_act(L.make(b, {}, {}, {2}), Side::Left, 1), L.make(b, {}, {}, {}));
  for (SimpleSubset I : a2.strata())
    for (SimpleIndex alpha = 0; alpha < 2; ++alpha)
      for (Side side : {Side::Left, Side::Right}) {
        const OrbitLabel open{I, 0, 0, 0};
        EXPECT_EQ(a2.rank1_act(open, side, alpha), open);
      }
}

TEST(OrbitModel, StabilityExamples) {
  const OrbitCalculus a1 = calculus("A1");
  EXPECT_TRUE(a1.is_stable({SimpleSubset::full(1), 0, 0, 0}, Side::Left, 0));
  EXPECT_FALSE(a1.is_stable({SimpleSubset::full(1), 0, 0, 1}, Side::Left, 0));
  const OrbitCalculus a2 = calculus("A2");
  const Labels L{a2};
  EXPECT_TRUE(a2.is_stable(L.make(SimpleSubset(), {2}, {}, {}), Side::Left, 0));
}

TEST(OrbitModel, PredecessorExamples) {
  const OrbitCalculus a2 = calculus("A2");
  const Labels L{a2};
  EXPECT_EQ(a2.unique_predecessor(L.make(SimpleSubset(), {2}, {}, {}), Side::Left, 0),
            L.make(SimpleSubset(), {1, 2}, {}, {}));
  const OrbitCalculus a1 = calculus("A1");
  EXPECT_EQ(a1.unique_predecessor({SimpleSubset::full(1), 0, 0, 0}, Side::Left, 0),
            (OrbitLabel{SimpleSubset::full(1), 0, 0, 1}));
  try {
    a2.unique_predecessor(L.make(SimpleSubset(), {1}, {}, {}), Side::Left, 0);
    FAIL() << "expected UnstableLabel";
  } catch (const UnstableLabel& e) {
    EXPECT_NE(std::string(e.what()).find("descent"), std::string::npos) << e.what();
  }
}

TEST(OrbitModel, Rank1CalculusExhaustively) {
  for (const std::string& type : testing_support::small_types()) {
    SCOPED_TRACE(type);
    const CheckResult r = check_rank1(calculus(type));
    EXPECT_TRUE(r.passed()) << first_failure(r);
  }
  auto b2 = build_root_system(cartan_of_type("B2"));
  const CheckResult weighted = check_rank1(OrbitCalculus(b2, WeightFunction::from_simple_orbits(*b2, {{0, 2}})));
  EXPECT_TRUE(weighted.passed()) << first_failure(weighted);
}

TEST(OrbitModel, SameStratumExamples) {
  const OrbitCalculus a1 = calculus("A1");
  const SimpleSubset all = SimpleSubset::full(1);
  const OrbitLabel open{all, 0, 0, 0};
  const OrbitLabel lower{all, 0, 0, 1};
  EXPECT_TRUE(a1.closure_leq_same_stratum(lower, open));
  EXPECT_FALSE(a1.closure_leq_same_stratum(open, lower));
  EXPECT_TRUE(a1.closure_leq_same_stratum(lower, lower));
  EXPECT_THROW(a1.closure_leq_same_stratum(lower, {SimpleSubset(), 0, 0, 0}), std::invalid_argument);
  for (const OrbitLabel& o : calculus("G2").enumerate_orbits()) EXPECT_TRUE(calculus("G2").closure_leq_same_stratum(o, o));
}

TEST(OrbitModel, ClosureLeqExamples) {
  const OrbitCalculus a1 = calculus("A1");
  const SimpleSubset all = SimpleSubset::full(1);
  const OrbitLabel dense{all, 0, 0, 0};
  for (const OrbitLabel& o : a1.enumerate_orbits()) EXPECT_TRUE(a1.closure_leq(o, dense));
  const OrbitLabel lower{all, 0, 0, 1};
  const auto witness = a1.closure_witness({SimpleSubset(), 0, 1, 0}, lower);
  ASSERT_TRUE(witness.has_value());
  EXPECT_EQ(witness->u, 0u);
  EXPECT_EQ(witness->v, 1u);
  EXPECT_FALSE(a1.closure_leq({SimpleSubset(), 0, 0, 0}, lower));
  EXPECT_FALSE(a1.closure_leq(dense, lower));
}

TEST(OrbitModel, ClosureOrderProperties) {
  for (const std::string& type : testing_support::small_types()) {
    SCOPED_TRACE(type);
    const OrbitCalculus calc = calculus(type);
    const CheckResult axioms = check_partial_order(calc);
    EXPECT_TRUE(axioms.passed()) << first_failure(axioms);
    const CheckResult strata = check_stratum_order(calc);
    EXPECT_TRUE(strata.passed()) << first_failure(strata);
  }
}

TEST(OrbitModel, IntersectionComponentExamples) {
  const OrbitCalculus a1 = calculus("A1");
  const SimpleSubset all = SimpleSubset::full(1);
  EXPECT_EQ(a1.intersection_components({all, 0, 0, 0}, SimpleSubset()),
            (std::vector<OrbitLabel>{{SimpleSubset(), 0, 0, 0}}));
  const auto two = a1.intersection_components({all, 0, 0, 1}, SimpleSubset());
  const std::vector<OrbitLabel> expected{{SimpleSubset(), 1, 0, 0}, {SimpleSubset(), 0, 1, 0}};
  EXPECT_TRUE(std::is_permutation(two.begin(), two.end(), expected.begin(), expected.end()));
  EXPECT_TRUE(a1.intersection_components({SimpleSubset(), 0, 0, 0}, all).empty());
  const OrbitCalculus b2 = calculus("B2");
  for (const OrbitLabel& o : b2.enumerate_orbits())
    EXPECT_EQ(b2.intersection_components(o, o.stratum), std::vector<OrbitLabel>{o});
}

TEST(OrbitModel, IntersectionComponentProperties) {
  for (const std::string& type : testing_support::small_types()) {
    SCOPED_TRACE(type);
    const CheckResult r = check_components(calculus(type));
    EXPECT_TRUE(r.passed()) << first_failure(r);
  }
}

TEST(OrbitModel, PointCountExamples) {
  const OrbitCalculus a1 = calculus("A1");
  const IntPolynomial big = a1.point_count_poly({SimpleSubset::full(1), 0, 0, 0});
  EXPECT_EQ(big, IntPolynomial({0, 0, -1, 1}));
  EXPECT_EQ(big.evaluate(2), 4);
  EXPECT_EQ(a1.point_count_poly({SimpleSubset(), 1, 1, 0}), IntPolynomial::constant(1));
  IntPolynomial sum;
  for (const OrbitLabel& o : a1.enumerate_orbits()) sum += a1.point_count_poly(o);
  EXPECT_EQ(sum, IntPolynomial({1, 1, 1, 1}));
  EXPECT_EQ(sum.evaluate(2), 15);
}

// Over PGL_2 the compactification is projective 3-space. Over PGL_3 it is the
// space of complete collineations, strictly larger than P(M_3): the sum is not
// (q^9 - 1)/(q - 1), and its values are checked against the matrix model.
TEST(OrbitModel, PointCountSumsInTypeA) {
  const OrbitCalculus a2 = calculus("A2");
  IntPolynomial sum;
  for (const OrbitLabel& o : a2.enumerate_orbits()) sum += a2.point_count_poly(o);
  IntPolynomial projective_8;
  for (int k = 0; k <= 8; ++k) projective_8 += IntPolynomial::monomial(k);
  EXPECT_NE(sum, projective_8);
  EXPECT_EQ(sum.degree(), 8);
  EXPECT_EQ(sum.evaluate(1), 36);  // only the 36 closed-stratum labels survive at q = 1
  EXPECT_EQ(sum.evaluate(2), 1197);
  EXPECT_EQ(sum.evaluate(3), 16432);
}

TEST(OrbitModel, LabelTextFormat) {
  const OrbitCalculus a2 = calculus("A2");
  const Labels L{a2};
  const OrbitLabel o = L.make(SimpleSubset::of({1}), {2, 1}, {}, {2});
  EXPECT_EQ(a2.format(o), "I=[2];sigma=2.1;tau=e;rho=2");
  EXPECT_EQ(a2.parse("I=[2];sigma=2.1;tau=e;rho=2"), o);
  for (const OrbitLabel& x : a2.enumerate_orbits()) EXPECT_EQ(a2.parse(a2.format(x)), x);
}

TEST(OrbitModel, NonCanonicalLabelsSuggestTheCanonicalForm) {
  const OrbitCalculus a2 = calculus("A2");
  try {
    a2.parse("I=[1];sigma=2.1;tau=1;rho=e");
    FAIL();
  } catch (const LabelError& e) {
    EXPECT_EQ(e.suggestion, "I=[1];sigma=2;tau=e;rho=e");
  }
  try {
    a2.parse("I=[1];sigma=e;tau=e;rho=2");  // rho outside W_I
    FAIL();
  } catch (const LabelError& e) {
    EXPECT_FALSE(e.suggestion.empty());
  }
  try {
    a2.parse("I=[];sigma=2.1.2;tau=e;rho=e");  // not the ShortLex word
    FAIL();
  } catch (const LabelError& e) {
    EXPECT_EQ(e.suggestion, "I=[];sigma=1.2.1;tau=e;rho=e");
  }
  EXPECT_THROW(a2.parse("I=[3];sigma=e;tau=e;rho=e"), LabelError);
  EXPECT_THROW(a2.parse("sigma=e;I=[];tau=e;rho=e"), LabelError);
  EXPECT_THROW(a2.parse("I=[];sigma=e;tau=e"), LabelError);
  EXPECT_THROW(a2.parse("I=[];sigma=e;tau=e;rho=e;x=1"), LabelError);
}
