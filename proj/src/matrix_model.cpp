#include "wonderful/matrix_model.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace wonderful {

namespace {

int binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<int>(r);
}

FqMatrix transvection(int n, int i, int j) {
  FqMatrix m = FqMatrix::identity(n);
  m.at(i, j) = 1;
  return m;
}

FqMatrix torus_generator(const PrimeField& F, int n, int i) {
  FqMatrix m = FqMatrix::identity(n);
  m.at(i, i) = F.primitive_root();
  return m;
}

}  // namespace

MatrixModel::MatrixModel(int n, int q, MatrixSpace space, std::size_t point_cap)
    : n_(n), field_(q), space_(space) {
  if (n < 2 || n > 5) throw std::invalid_argument("matrix model supports 2 <= n <= 5");
  if (space == MatrixSpace::ProjectiveMatrices) {
    degrees_ = {1};
  } else {
    for (int k = 1; k < n; ++k) degrees_.push_back(k);
  }
  for (int k : degrees_) {
    dims_.push_back(binomial(n, k));
    entries_ += static_cast<std::size_t>(dims_.back()) * dims_.back();
  }
  if (static_cast<double>(entries_) * std::log2(static_cast<double>(q)) >= 63.0)
    throw std::invalid_argument("points of this model do not fit a 64-bit code");

  const FqMatrix one = FqMatrix::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) borel_.emplace_back(transvection(n, i, j), one);
  for (int i = 0; i < n; ++i)
    if (field_.primitive_root() != 1) borel_.emplace_back(torus_generator(field_, n, i), one);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) borel_.emplace_back(one, transvection(n, i, j));
  for (int i = 0; i < n; ++i)
    if (field_.primitive_root() != 1) borel_.emplace_back(one, torus_generator(field_, n, i));
  for (const auto& [g, h] : borel_) borel_actions_.push_back(prepare(g, h));

  enumerate(point_cap);
}

MatrixModel::Action MatrixModel::prepare(const FqMatrix& g, const FqMatrix& h) const {
  Action a;
  const FqMatrix h_inv = inverse(field_, h);
  for (int k : degrees_) {
    a.left.push_back(exterior_power(field_, g, k));
    a.right.push_back(exterior_power(field_, h_inv, k));
  }
  return a;
}

ProjPoint MatrixModel::apply(const Action& a, const ProjPoint& p) const {
  ProjPoint out;
  for (std::size_t c = 0; c < degrees_.size(); ++c) {
    FqMatrix m = multiply(field_, multiply(field_, a.left[c], p.components[c]), a.right[c]);
    normalize_projective(field_, m.entries);
    out.components.push_back(std::move(m));
  }
  return out;
}

ProjPoint MatrixModel::act(const FqMatrix& g, const FqMatrix& h, const ProjPoint& p) const {
  return apply(prepare(g, h), p);
}

ProjPoint MatrixModel::embed(const FqMatrix& m) const {
  ProjPoint p;
  for (int k : degrees_) {
    FqMatrix c = exterior_power(field_, m, k);
    normalize_projective(field_, c.entries);
    p.components.push_back(std::move(c));
  }
  return p;
}

std::uint64_t MatrixModel::encode(const ProjPoint& p) const {
  std::uint64_t code = 0;
  for (const FqMatrix& m : p.components)
    for (int x : m.entries) code = code * static_cast<std::uint64_t>(q()) + static_cast<std::uint64_t>(x);
  return code;
}

ProjPoint MatrixModel::decode(std::uint64_t code) const {
  std::vector<int> flat(entries_);
  for (std::size_t k = entries_; k-- > 0;) {
    flat[k] = static_cast<int>(code % static_cast<std::uint64_t>(q()));
    code /= static_cast<std::uint64_t>(q());
  }
  ProjPoint p;
  std::size_t pos = 0;
  for (int d : dims_) {
    FqMatrix m = FqMatrix::zero(d);
    std::copy(flat.begin() + pos, flat.begin() + pos + m.entries.size(), m.entries.begin());
    pos += m.entries.size();
    p.components.push_back(std::move(m));
  }
  return p;
}

std::size_t MatrixModel::find(const ProjPoint& p) const {
  const std::uint64_t code = encode(p);
  const auto it = std::lower_bound(points_.begin(), points_.end(), code);
  return it != points_.end() && *it == code ? static_cast<std::size_t>(it - points_.begin()) : points_.size();
}

std::size_t MatrixModel::successor(std::size_t gen, std::size_t index) const {
  const std::size_t next = find(apply(borel_actions_[gen], point(index)));
  if (next == points_.size()) throw std::logic_error("Borel action left the point set");
  return next;
}

ProjPoint MatrixModel::base_point(SimpleSubset I, BasePointConvention convention) const {
  // Diagonal exponents of a cocharacter; component k keeps the k-subsets of least total exponent.
  std::vector<int> exponent(n_, 0);
  if (convention == BasePointConvention::TrailingBlock) {
    for (int i = n_ - 2; i >= 0; --i) exponent[i] = exponent[i + 1] + (I.contains(i) ? 0 : 1);
  } else {
    for (int i = 1; i < n_; ++i) exponent[i] = exponent[i - 1] + (I.contains(i - 1) ? 0 : 1);
  }
  ProjPoint p;
  for (int k : degrees_) {
    const std::vector<std::uint32_t> subsets = k_subsets(n_, k);
    std::vector<int> weight;
    for (std::uint32_t s : subsets) {
      int total = 0;
      for (int i = 0; i < n_; ++i)
        if (s >> i & 1u) total += exponent[i];
      weight.push_back(total);
    }
    const int least = *std::min_element(weight.begin(), weight.end());
    FqMatrix m = FqMatrix::zero(static_cast<int>(subsets.size()));
    for (std::size_t s = 0; s < subsets.size(); ++s)
      if (weight[s] == least) m.at(static_cast<int>(s), static_cast<int>(s)) = 1;
    normalize_projective(field_, m.entries);
    p.components.push_back(std::move(m));
  }
  return p;
}

FqMatrix MatrixModel::permutation(const WeylElement& w) const {
  FqMatrix p = FqMatrix::identity(n_);
  for (SimpleIndex i : w.word()) {
    if (i < 0 || i + 1 >= n_) throw std::invalid_argument("generator outside type A_" + std::to_string(n_ - 1));
    FqMatrix s = FqMatrix::identity(n_);
    s.at(i, i) = 0;
    s.at(i + 1, i + 1) = 0;
    s.at(i, i + 1) = 1;
    s.at(i + 1, i) = 1;
    p = multiply(field_, p, s);
  }
  return p;
}

ProjPoint MatrixModel::representative(const OrbitCalculus& calc, const OrbitLabel& o,
                                      BasePointConvention convention) const {
  const CoxeterTable& g = calc.group();
  const FqMatrix left = permutation(g.element(g.multiply(o.sigma, o.rho)));
  const FqMatrix right = permutation(g.element(o.tau));
  return act(left, right, base_point(o.stratum, convention));
}

void MatrixModel::enumerate(std::size_t cap) {
  if (space_ == MatrixSpace::ProjectiveMatrices) {
    const std::uint64_t total = static_cast<std::uint64_t>(std::llround(std::pow(q(), static_cast<double>(entries_))));
    if ((total - 1) / static_cast<std::uint64_t>(q() - 1) > cap)
      throw CapExceeded("P(M_" + std::to_string(n_) + ") over F_" + std::to_string(q()) + " exceeds the point cap");
    for (std::uint64_t code = 1; code < total; ++code) {
      // Normalized iff the leading nonzero base-q digit is 1.
      std::uint64_t lead = code;
      while (lead >= static_cast<std::uint64_t>(q())) lead /= static_cast<std::uint64_t>(q());
      if (lead == 1) points_.push_back(code);
    }
    return;
  }

  // G(F_q) x G(F_q)-saturation of the base points.
  std::vector<Action> generators;
  const FqMatrix one = FqMatrix::identity(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (i != j) {
        generators.push_back(prepare(transvection(n_, i, j), one));
        generators.push_back(prepare(one, transvection(n_, i, j)));
      }
  if (field_.primitive_root() != 1) {
    generators.push_back(prepare(torus_generator(field_, n_, 0), one));
    generators.push_back(prepare(one, torus_generator(field_, n_, 0)));
  }
  std::deque<ProjPoint> queue;
  std::unordered_set<std::uint64_t> known;
  for (SimpleSubset I : all_subsets(n_ - 1)) {
    ProjPoint b = base_point(I);
    if (known.insert(encode(b)).second) queue.push_back(std::move(b));
  }
  while (!queue.empty()) {
    ProjPoint p = std::move(queue.front());
    queue.pop_front();
    for (const Action& a : generators) {
      ProjPoint next = apply(a, p);
      if (known.insert(encode(next)).second) {
        if (known.size() > cap)
          throw CapExceeded("compactification of PGL_" + std::to_string(n_) + " over F_" + std::to_string(q()) +
                            " exceeds the point cap");
        queue.push_back(std::move(next));
      }
    }
  }
  points_.assign(known.begin(), known.end());
  std::sort(points_.begin(), points_.end());
}

OrbitPartition orbit_partition(const MatrixModel& model, Execution mode) {
  const std::size_t n = model.size();
  const std::size_t gens = model.borel_generators().size();
  OrbitPartition part;
  part.orbit_of.assign(n, UINT32_MAX);

  if (mode == Execution::Serial) {
    // Breadth-first saturation from the smallest unassigned point.
    for (std::size_t start = 0; start < n; ++start) {
      if (part.orbit_of[start] != UINT32_MAX) continue;
      const auto id = static_cast<std::uint32_t>(part.orbits.size());
      std::vector<std::uint32_t> members{static_cast<std::uint32_t>(start)};
      part.orbit_of[start] = id;
      for (std::size_t head = 0; head < members.size(); ++head)
        for (std::size_t g = 0; g < gens; ++g) {
          const std::size_t next = model.successor(g, members[head]);
          if (part.orbit_of[next] == UINT32_MAX) {
            part.orbit_of[next] = id;
            members.push_back(static_cast<std::uint32_t>(next));
          }
        }
      std::sort(members.begin(), members.end());
      part.orbits.push_back(std::move(members));
    }
    return part;
  }

  // Successor table in parallel, then union-find.
  std::vector<std::uint32_t> succ(n * gens);
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < count; ++i)
    for (std::size_t g = 0; g < gens; ++g)
      succ[static_cast<std::size_t>(i) * gens + g] = static_cast<std::uint32_t>(model.successor(g, i));

  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  auto root = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t g = 0; g < gens; ++g) {
      const std::uint32_t a = root(static_cast<std::uint32_t>(i));
      const std::uint32_t b = root(succ[i * gens + g]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t r = root(static_cast<std::uint32_t>(i));
    if (r == i) {
      part.orbit_of[i] = static_cast<std::uint32_t>(part.orbits.size());
      part.orbits.emplace_back();
    }
    part.orbit_of[i] = part.orbit_of[r];
    part.orbits[part.orbit_of[i]].push_back(static_cast<std::uint32_t>(i));
  }
  return part;
}

OrbitCalculus type_a_calculus(int n) {
  return OrbitCalculus(build_root_system(cartan_of_type("A" + std::to_string(n - 1))));
}

LabelMatching label_matching(const OrbitCalculus& calc, const MatrixModel& model, const OrbitPartition& partition,
                             BasePointConvention convention) {
  if (calc.rank() != model.n() - 1) throw std::invalid_argument("orbit calculus is not of type A_{n-1}");
  LabelMatching m;
  m.labels = calc.enumerate_orbits();
  std::vector<std::vector<std::size_t>> by_orbit(partition.orbits.size());
  for (std::size_t l = 0; l < m.labels.size(); ++l) {
    const std::size_t point = model.find(model.representative(calc, m.labels[l], convention));
    if (point == model.size())
      throw std::logic_error("representative of " + calc.format(m.labels[l]) + " is not a point of the model");
    const std::size_t orbit = partition.orbit_of[point];
    m.orbit_of_label.push_back(orbit);
    by_orbit[orbit].push_back(l);
    const std::int64_t expected = calc.point_count_poly(m.labels[l]).evaluate(model.q());
    if (static_cast<std::int64_t>(partition.orbits[orbit].size()) != expected) m.size_mismatches.push_back(l);
  }
  for (std::size_t o = 0; o < by_orbit.size(); ++o) {
    if (by_orbit[o].empty()) m.unmatched_orbits.push_back(o);
    if (by_orbit[o].size() > 1) m.collisions.push_back(by_orbit[o]);
  }
  return m;
}

CellReport verify_group_cells(const OrbitCalculus& calc, const MatrixModel& model, const OrbitPartition& partition) {
  CellReport report;
  const CoxeterTable& g = calc.group();
  const SimpleSubset all = calc.all_simple();
  const long n_pos = static_cast<long>(calc.roots().num_positive());
  std::vector<bool> cell_seen(partition.orbits.size(), false);
  for (ElementId rho : calc.parabolic(all)) {
    const OrbitLabel label{all, CoxeterTable::identity(), CoxeterTable::identity(), rho};
    const std::size_t point = model.find(model.representative(calc, label));
    const std::size_t orbit = partition.orbit_of[point];
    const std::int64_t expected =
        static_cast<std::int64_t>(std::llround(std::pow(model.q(), 2 * n_pos - g.length(rho)) *
                                               std::pow(model.q() - 1, model.n() - 1)));
    if (cell_seen[orbit]) report.problems.push_back("cell of " + calc.format(label) + " repeats an orbit");
    cell_seen[orbit] = true;
    if (static_cast<std::int64_t>(partition.orbits[orbit].size()) != expected)
      report.problems.push_back("cell of " + calc.format(label) + " has " +
                                std::to_string(partition.orbits[orbit].size()) + " points, expected " +
                                std::to_string(expected));
  }
  for (std::size_t o = 0; o < partition.orbits.size(); ++o) {
    const FqMatrix first = model.point(partition.orbits[o].front()).components.front();
    const bool invertible = determinant(model.field(), first) != 0;
    for (std::uint32_t p : partition.orbits[o])
      if ((determinant(model.field(), model.point(p).components.front()) != 0) != invertible)
        report.problems.push_back("orbit " + std::to_string(o) + " mixes invertible and singular points");
    if (!invertible) continue;
    ++report.group_orbits;
    report.group_points += partition.orbits[o].size();
    if (!cell_seen[o]) report.problems.push_back("orbit " + std::to_string(o) + " of invertible points has no label");
  }
  if (report.group_orbits != calc.group().size())
    report.problems.push_back(std::to_string(report.group_orbits) + " invertible orbits, expected " +
                              std::to_string(calc.group().size()));
  return report;
}

}  // namespace wonderful
