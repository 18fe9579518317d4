#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include <nlohmann/json.hpp>

#include "support.hpp"

using namespace wonderful;
using testing_support::calculus;

namespace {

// Covers by definition: i < j with nothing strictly between.
std::set<std::pair<std::size_t, std::size_t>> naive_covers(const std::vector<Bitset>& below) {
  std::set<std::pair<std::size_t, std::size_t>> covers;
  const std::size_t n = below.size();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      if (i == j || !below[j].test(i)) continue;
      bool between = false;
      for (std::size_t k = 0; k < n && !between; ++k)
        between = k != i && k != j && below[k].test(i) && below[j].test(k);
      if (!between) covers.emplace(i, j);
    }
  return covers;
}

}  // namespace

TEST(ClosurePoset, SerialAndParallelKernelsAgree) {
  for (const std::string type : {"A2", "B2", "G2", "A3", "B3"}) {
    SCOPED_TRACE(type);
    const OrbitCalculus calc = calculus(type);
    const auto serial = closure_relation(calc, Execution::Serial);
    const auto parallel = closure_relation(calc, Execution::Parallel);
    EXPECT_EQ(serial, parallel);
    EXPECT_EQ(transitive_reduction(serial, Execution::Serial), transitive_reduction(serial, Execution::Parallel));
  }
}

TEST(ClosurePoset, HasseIsTheTransitiveReduction) {
  for (const std::string type : {"A1", "A1xA1", "A2", "B2"}) {
    SCOPED_TRACE(type);
    const ClosurePoset p = closure_poset(calculus(type));
    const auto covers = naive_covers(p.below);
    const std::set<std::pair<std::size_t, std::size_t>> hasse(p.hasse.begin(), p.hasse.end());
    EXPECT_EQ(hasse, covers);
    // The reflexive-transitive closure of the Hasse diagram gives the order back.
    std::vector<Bitset> rebuilt(p.size(), Bitset(p.size()));
    for (const auto& [i, j] : p.hasse) rebuilt[j].set(i);
    transitive_closure(rebuilt);
    EXPECT_EQ(rebuilt, p.below);
  }
}

TEST(ClosurePoset, RankZeroIsASingleNode) {
  const ClosurePoset p = closure_poset(calculus("A0"));
  EXPECT_EQ(p.size(), 1u);
  EXPECT_TRUE(p.hasse.empty());
  EXPECT_TRUE(p.leq(0, 0));
}

TEST(ClosurePoset, A1HasUniqueTopAndBottom) {
  const OrbitCalculus calc = calculus("A1");
  const ClosurePoset p = closure_poset(calc);
  ASSERT_EQ(p.size(), 6u);
  std::vector<std::size_t> tops, bottoms;
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (p.below[j].count() == p.size()) tops.push_back(j);
    bool minimal = true;
    for (std::size_t i = 0; i < p.size(); ++i) minimal = minimal && (i == j || !p.leq(i, j));
    if (minimal) bottoms.push_back(j);
  }
  ASSERT_EQ(tops.size(), 1u);
  ASSERT_EQ(bottoms.size(), 1u);
  EXPECT_EQ(calc.format(p.labels[tops[0]]), "I=[1];sigma=e;tau=e;rho=e");
  EXPECT_EQ(calc.format(p.labels[bottoms[0]]), "I=[];sigma=1;tau=1;rho=e");
}

TEST(ClosurePoset, CoversRaiseDimensionByOne) {
  for (const std::string type : {"A1", "A2", "B2", "G2", "A3"}) {
    SCOPED_TRACE(type);
    const OrbitCalculus calc = calculus(type);
    const ClosurePoset p = closure_poset(calc);
    for (const auto& [i, j] : p.hasse)
      EXPECT_EQ(calc.split_dimension(p.labels[j]), calc.split_dimension(p.labels[i]) + 1)
          << calc.format(p.labels[i]) << " < " << calc.format(p.labels[j]);
  }
}

TEST(ClosurePoset, AxiomReportFindsViolations) {
  std::vector<Bitset> rel(3, Bitset(3));
  for (std::size_t i = 0; i < 3; ++i) rel[i].set(i);
  EXPECT_TRUE(check_partial_order(rel).ok());
  rel[1].set(0);
  rel[2].set(1);
  const AxiomReport not_transitive = check_partial_order(rel);
  EXPECT_FALSE(not_transitive.transitive);
  EXPECT_FALSE(not_transitive.violation.empty());
  rel[2].set(0);
  rel[0].set(2);
  EXPECT_FALSE(check_partial_order(rel).antisymmetric);
  rel[1].reset(1);
  EXPECT_FALSE(check_partial_order(rel).reflexive);
}

TEST(ClosurePoset, PosetCapIsEnforced) {
  Caps caps;
  caps.poset_orbits = 50;
  const OrbitCalculus calc(build_root_system(cartan_of_type("A2")), caps);
  EXPECT_THROW(closure_poset(calc), CapExceeded);
}

TEST(ClosurePoset, JsonExport) {
  const OrbitCalculus calc = calculus("A2");
  const ClosurePoset p = closure_poset(calc);
  const auto doc = nlohmann::json::parse(to_json(p, calc));
  ASSERT_EQ(doc["labels"].size(), 78u);
  EXPECT_EQ(doc["hasse"].size(), p.hasse.size());
  EXPECT_EQ(doc["dimension"].size(), 78u);
  for (const auto& edge : doc["hasse"]) {
    const auto i = edge[0].get<std::size_t>();
    const auto j = edge[1].get<std::size_t>();
    EXPECT_TRUE(p.leq(i, j));
    EXPECT_LT(doc["dimension"][i].get<long>(), doc["dimension"][j].get<long>());
  }
  for (std::size_t k = 0; k < p.size(); ++k) EXPECT_EQ(doc["labels"][k], calc.format(p.labels[k]));
}

TEST(ClosurePoset, DotExport) {
  const OrbitCalculus calc = calculus("A1");
  const std::string dot = to_dot(closure_poset(calc), calc);
  EXPECT_EQ(dot.rfind("digraph closure {", 0), 0u);
  EXPECT_NE(dot.find("rankdir=BT"), std::string::npos);
  EXPECT_NE(dot.find("\"I=[1];sigma=e;tau=e;rho=e\""), std::string::npos);
  EXPECT_NE(dot.find("rank=same"), std::string::npos);
  EXPECT_EQ(std::count(dot.begin(), dot.end(), '>'), static_cast<long>(closure_poset(calc).hasse.size()));
}

TEST(ClosurePoset, CsvSummary) {
  EXPECT_EQ(to_csv(calculus("A1")), "stratum,count,min_dim,max_dim\n\"[]\",4,0,2\n\"[1]\",2,2,3\n");
  auto b2 = build_root_system(cartan_of_type("B2"));
  const OrbitCalculus weighted(b2, WeightFunction::from_simple_orbits(*b2, {{0, 2}}));
  EXPECT_EQ(to_csv(weighted).rfind("stratum,count,min_codim,max_codim\n", 0), 0u);
}
