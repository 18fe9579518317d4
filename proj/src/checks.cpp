#include "wonderful/checks.hpp"

#include <random>
#include <unordered_map>

namespace wonderful {

namespace {

constexpr std::size_t kKeptFailures = 20;

std::string pair_text(const OrbitCalculus& calc, const OrbitLabel& a, const OrbitLabel& b) {
  return calc.format(a) + " vs " + calc.format(b);
}

}  // namespace

void CheckResult::fail(std::string message) {
  ++failed;
  if (failures.size() < kKeptFailures) failures.push_back(std::move(message));
}

void CheckResult::absorb(const CheckResult& other) {
  cases += other.cases;
  failed += other.failed;
  for (const std::string& f : other.failures)
    if (failures.size() < kKeptFailures) failures.push_back(other.name + ": " + f);
}

CheckResult check_poset_oracle(const OrbitCalculus& calc, bool inject_fault) {
  CheckResult result{"poset-oracle"};
  ClosurePoset formula = closure_poset(calc);
  if (inject_fault) {
    for (std::size_t j = 0; j < formula.size(); ++j) {
      Bitset strict = formula.below[j];
      strict.reset(j);
      if (strict.any()) {
        formula.below[j].reset(strict.find_first());
        break;
      }
    }
  }
  for (ExpressionChoice choice : {ExpressionChoice::ShortLex, ExpressionChoice::Alternate}) {
    const ClosurePoset oracle = oracle_poset(calc, choice);
    const PosetDiff diff = compare_posets(formula, oracle);
    result.cases += formula.size() * formula.size();
    const char* tag = choice == ExpressionChoice::ShortLex ? "shortlex" : "alternate";
    for (const auto& [i, j] : diff.only_first)
      result.fail(std::string(tag) + ": formula only " + calc.format(formula.labels[i]) + " <= " +
                  calc.format(formula.labels[j]));
    for (const auto& [i, j] : diff.only_second)
      result.fail(std::string(tag) + ": oracle only " + calc.format(formula.labels[i]) + " <= " +
                  calc.format(formula.labels[j]));
  }
  return result;
}

CheckResult check_partial_order(const OrbitCalculus& calc) {
  CheckResult result{"partial-order"};
  const std::vector<Bitset> below = closure_relation(calc);
  result.cases = below.size() * below.size();
  const AxiomReport report = check_partial_order(below);
  if (!report.ok()) result.fail(report.violation);
  return result;
}

CheckResult check_stratum_order(const OrbitCalculus& calc) {
  CheckResult result{"stratum-order"};
  const CoxeterTable& g = calc.group();
  const std::vector<OrbitLabel> labels = calc.enumerate_orbits();
  const std::vector<Bitset> below = closure_relation(calc);
  const SimpleSubset all = calc.all_simple();
  for (std::size_t j = 0; j < labels.size(); ++j)
    for (std::size_t i = 0; i < labels.size(); ++i) {
      const OrbitLabel& a = labels[i];
      const OrbitLabel& b = labels[j];
      const bool leq = below[j].test(i);
      ++result.cases;
      if (leq && !a.stratum.is_subset_of(b.stratum)) result.fail("stratum not contained: " + pair_text(calc, a, b));
      if (a.stratum == b.stratum && leq != calc.closure_leq_same_stratum(a, b))
        result.fail("same-stratum criterion disagrees: " + pair_text(calc, a, b));
      if (a.stratum == all && b.stratum == all && a.sigma == 0 && a.tau == 0 && b.sigma == 0 && b.tau == 0 &&
          leq != g.bruhat_leq(b.rho, a.rho))
        result.fail("dense stratum is not the reversed Bruhat order: " + pair_text(calc, a, b));
      if (calc.is_split_model() && leq && i != j && calc.split_dimension(a) >= calc.split_dimension(b))
        result.fail("dimension does not grow: " + pair_text(calc, a, b));
    }
  return result;
}

CheckResult check_components(const OrbitCalculus& calc) {
  CheckResult result{"components"};
  const CoxeterTable& g = calc.group();
  for (const OrbitLabel& o : calc.enumerate_orbits()) {
    for (SimpleSubset I : calc.strata()) {
      ++result.cases;
      const std::vector<OrbitLabel> parts = calc.intersection_components(o, I);
      if (!I.is_subset_of(o.stratum)) {
        if (!parts.empty()) result.fail("components outside the closure for " + calc.format(o));
        continue;
      }
      if (I == o.stratum && (parts.size() != 1 || parts.front() != o))
        result.fail("own stratum does not give the orbit back: " + calc.format(o));
      if (parts.empty()) result.fail("no components of " + calc.format(o) + " in " + to_string(I));
      for (const OrbitLabel& c : parts) {
        if (c.stratum != I || !calc.is_valid(c)) result.fail("invalid component of " + calc.format(o));
        if (calc.codim(c) != calc.codim(o))
          result.fail("improper component " + calc.format(c) + " of " + calc.format(o));
        if (!calc.closure_leq(c, o)) result.fail("component not below: " + pair_text(calc, c, o));
      }
    }
    // l(sigma rho) = l(sigma rho v) + l(v) exactly when l(rho) = l(rho v) + l(v).
    const ElementId x = g.multiply(o.sigma, o.rho);
    for (ElementId v : calc.parabolic(o.stratum)) {
      const bool outer = g.length(x) == g.length(g.multiply(x, v)) + g.length(v);
      const bool inner = g.length(o.rho) == g.length(g.multiply(o.rho, v)) + g.length(v);
      if (outer != inner) result.fail("length conditions differ for " + calc.format(o) + " at v=" + g.word_string(v));
    }
  }
  return result;
}

CheckResult check_bruhat_subword(const CoxeterTable& table) {
  CheckResult result{"bruhat-subword"};
  for (ElementId w = 0; w < table.size(); ++w) {
    const std::vector<bool> lower = subword_products(table, w);
    for (ElementId u = 0; u < table.size(); ++u) {
      ++result.cases;
      if (table.bruhat_leq(u, w) != lower[u])
        result.fail("bruhat_leq(" + table.word_string(u) + ", " + table.word_string(w) + ") disagrees with subwords");
    }
  }
  return result;
}

CheckResult check_cosets(const CoxeterTable& table) {
  CheckResult result{"cosets"};
  using Kind = ParabolicCase::Kind;
  for (SimpleSubset J : all_subsets(table.rank())) {
    std::size_t reps = 0, parabolic = 0;
    for (ElementId w = 0; w < table.size(); ++w) {
      ++result.cases;
      reps += table.is_min_coset_rep(w, J);
      parabolic += table.in_parabolic(w, J);
      const auto [min_rep, par] = table.coset_decompose(w, J);
      if (table.multiply(min_rep, par) != w || table.length(min_rep) + table.length(par) != table.length(w) ||
          !table.is_min_coset_rep(min_rep, J) || !table.in_parabolic(par, J))
        result.fail("coset decomposition of " + table.word_string(w) + " by " + to_string(J));
      if (!table.is_min_coset_rep(w, J)) continue;
      for (ElementId x = 0; x < table.size(); ++x)
        if (table.in_parabolic(x, J) && table.length(table.multiply(w, x)) != table.length(w) + table.length(x))
          result.fail("length not additive on " + table.word_string(w) + " * " + table.word_string(x));
      for (SimpleIndex alpha = 0; alpha < table.rank(); ++alpha) {
        const ParabolicCase c = table.trichotomy(w, J, alpha);
        const ElementId moved = table.left(alpha, w);
        const bool longer = table.length(moved) > table.length(w);
        bool ok = false;
        switch (c.kind) {
          case Kind::Exchange:
            ok = J.contains(c.beta) && moved == table.right(w, c.beta) && longer;
            break;
          case Kind::DescentInWJ:
            ok = table.is_min_coset_rep(moved, J) && !longer;
            break;
          case Kind::AscentInWJ:
            ok = table.is_min_coset_rep(moved, J) && longer;
            break;
        }
        if (!ok) result.fail("trichotomy of " + table.word_string(w) + " at " + std::to_string(alpha + 1));
      }
    }
    if (reps * parabolic != table.size()) result.fail("|W^J| |W_J| != |W| for " + to_string(J));
  }
  return result;
}

CheckResult check_weighted_length(const OrbitCalculus& calc) {
  CheckResult result{"weighted-length"};
  const CoxeterTable& g = calc.group();
  const bool unit = calc.weights().is_unit() && calc.roots().is_reduced();
  for (ElementId u = 0; u < g.size(); ++u) {
    if (unit && calc.weighted_length(u) != g.length(u)) result.fail("d != l at " + g.word_string(u));
    for (ElementId v = 0; v < g.size(); ++v) {
      ++result.cases;
      const ElementId uv = g.multiply(u, v);
      if (g.length(uv) == g.length(u) + g.length(v) &&
          calc.weighted_length(uv) != calc.weighted_length(u) + calc.weighted_length(v))
        result.fail("d not additive on " + g.word_string(u) + " * " + g.word_string(v));
    }
  }
  return result;
}

CheckResult check_rank1(const OrbitCalculus& calc) {
  using Kind = ParabolicCase::Kind;
  CheckResult result{"rank1"};
  const CoxeterTable& g = calc.group();
  const std::vector<OrbitLabel> labels = calc.enumerate_orbits();
  for (Side side : {Side::Left, Side::Right})
    for (SimpleIndex alpha = 0; alpha < calc.rank(); ++alpha) {
      std::unordered_map<std::size_t, std::size_t> preimage;
      const std::string move = " (" + to_string(side) + " " + std::to_string(alpha + 1) + ")";
      for (std::size_t k = 0; k < labels.size(); ++k) {
        const OrbitLabel& o = labels[k];
        ++result.cases;
        const OrbitLabel image = calc.rank1_act(o, side, alpha);
        const bool stable = calc.is_stable(o, side, alpha);
        if (!calc.is_valid(image)) result.fail("invalid image of " + calc.format(o) + move);
        if (stable != (image == o)) result.fail("stability disagrees with fixed points at " + calc.format(o) + move);
        if (stable) {
          try {
            const OrbitLabel before = calc.unique_predecessor(o, side, alpha);
            if (before == o || calc.rank1_act(before, side, alpha) != o || calc.is_stable(before, side, alpha))
              result.fail("predecessor does not map back to " + calc.format(o) + move);
          } catch (const UnstableLabel& e) {
            result.fail(std::string("no predecessor for stable ") + calc.format(o) + move + ": " + e.what());
          }
          continue;
        }
        const auto [it, inserted] = preimage.emplace(calc.index_of(image), k);
        if (!inserted) result.fail("not cancellative: " + pair_text(calc, labels[it->second], o) + move);
        try {
          if (calc.unique_predecessor(image, side, alpha) != o)
            result.fail("predecessor of the image is not " + calc.format(o) + move);
        } catch (const UnstableLabel& e) {
          result.fail(std::string("image unstable: ") + e.what());
        }
        bool threw = false;
        try {
          calc.unique_predecessor(o, side, alpha);
        } catch (const UnstableLabel&) {
          threw = true;
        }
        if (!threw) result.fail("unstable label accepted by unique_predecessor: " + calc.format(o) + move);
        const ParabolicCase c = g.trichotomy(side == Side::Left ? o.sigma : o.tau, o.stratum, alpha);
        const SimpleIndex used = c.kind == Kind::Exchange ? c.beta : alpha;
        const long drop = calc.weighted_length(g.left(used, CoxeterTable::identity()));
        if (calc.codim(o) - calc.codim(image) != drop) result.fail("codim drop is not d(s) at " + calc.format(o) + move);
        if (calc.is_split_model() && calc.split_dimension(image) <= calc.split_dimension(o))
          result.fail("dimension does not grow at " + calc.format(o) + move);
      }
    }
  return result;
}

CheckResult check_labels(const OrbitCalculus& calc, std::uint64_t seed, std::size_t samples) {
  CheckResult result{"labels"};
  const CoxeterTable& g = calc.group();
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  for (std::size_t k = 0; k < samples; ++k) {
    ++result.cases;
    const SimpleSubset I = calc.strata()[pick(calc.strata().size())];
    const auto x = static_cast<ElementId>(pick(g.size()));
    const auto y = static_cast<ElementId>(pick(g.size()));
    const ElementId v = calc.parabolic(I)[pick(calc.parabolic(I).size())];
    const OrbitLabel o = calc.canonicalize(I, x, y);
    if (!calc.is_valid(o)) result.fail("canonicalize produced an invalid label");
    if (calc.canonicalize(I, g.multiply(x, v), g.multiply(y, v)) != o)
      result.fail("canonicalize depends on the W_I representative: " + calc.format(o));
    if (calc.canonicalize(I, g.multiply(o.sigma, o.rho), o.tau) != o)
      result.fail("canonicalize is not idempotent at " + calc.format(o));
    const std::size_t index = calc.index_of(o);
    if (calc.label_at(index) != o) result.fail("index round trip fails at " + calc.format(o));
    if (calc.parse(calc.format(o)) != o) result.fail("text round trip fails at " + calc.format(o));
  }
  return result;
}

CheckResult check_matrix_model(int n, int q) {
  CheckResult result{"matrix-" + std::to_string(n) + "-" + std::to_string(q)};
  const OrbitCalculus calc = type_a_calculus(n);
  const MatrixModel model(n, q);
  const OrbitPartition parallel = orbit_partition(model, Execution::Parallel);
  const OrbitPartition serial = orbit_partition(model, Execution::Serial);
  result.cases = model.size();
  if (parallel.orbits != serial.orbits) result.fail("parallel and serial orbit partitions differ");
  if (parallel.orbits.size() != calc.orbit_count())
    result.fail(std::to_string(parallel.orbits.size()) + " orbits for " + std::to_string(calc.orbit_count()) +
                " labels");
  const LabelMatching matching = label_matching(calc, model, parallel);
  for (const auto& group : matching.collisions) {
    std::string names;
    for (std::size_t l : group) names += (names.empty() ? "" : ", ") + calc.format(matching.labels[l]);
    result.fail("labels share an orbit: " + names);
  }
  for (std::size_t o : matching.unmatched_orbits) result.fail("orbit " + std::to_string(o) + " has no label");
  for (std::size_t l : matching.size_mismatches)
    result.fail("orbit size differs from the point count of " + calc.format(matching.labels[l]));
  std::int64_t expected_points = 0;
  for (const OrbitLabel& o : matching.labels) expected_points += calc.point_count_poly(o).evaluate(q);
  if (expected_points != static_cast<std::int64_t>(model.size()))
    result.fail(std::to_string(model.size()) + " points, point-count polynomials give " +
                std::to_string(expected_points));
  const CellReport cells = verify_group_cells(calc, model, parallel);
  for (const std::string& p : cells.problems) result.fail(p);
  return result;
}

}  // namespace wonderful
