#include "wonderful/closure_poset.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

namespace wonderful {

namespace {

void check_poset_cap(const OrbitCalculus& calc) {
  if (calc.orbit_count() > calc.caps().poset_orbits)
    throw CapExceeded("closure poset needs " + std::to_string(calc.orbit_count()) + " labels (cap " +
                      std::to_string(calc.caps().poset_orbits) + ")");
}

// Column j of the relation: every i with labels[i] <= labels[j].
Bitset relation_column(const OrbitCalculus& calc, const std::vector<OrbitLabel>& labels, std::size_t j) {
  Bitset column(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i].stratum.is_subset_of(labels[j].stratum) && calc.closure_leq(labels[i], labels[j]))
      column.set(i);
  return column;
}

}  // namespace

std::vector<Bitset> closure_relation(const OrbitCalculus& calc, Execution mode) {
  check_poset_cap(calc);
  const std::vector<OrbitLabel> labels = calc.enumerate_orbits();
  const auto n = static_cast<std::ptrdiff_t>(labels.size());
  std::vector<Bitset> below(labels.size());
  if (mode == Execution::Serial) {
    for (std::ptrdiff_t j = 0; j < n; ++j) below[j] = relation_column(calc, labels, j);
  } else {
#pragma omp parallel for schedule(dynamic, 8)
    for (std::ptrdiff_t j = 0; j < n; ++j) below[j] = relation_column(calc, labels, j);
  }
  return below;
}

ClosurePoset closure_poset(const OrbitCalculus& calc, Execution mode) {
  std::vector<Bitset> below = closure_relation(calc, mode);
  ClosurePoset poset;
  poset.labels = calc.enumerate_orbits();
  poset.hasse = transitive_reduction(below, mode);
  poset.below = std::move(below);
  return poset;
}

ClosurePoset make_poset(std::vector<OrbitLabel> labels, std::vector<Bitset> below) {
  if (labels.size() != below.size()) throw std::invalid_argument("relation size does not match label count");
  ClosurePoset poset;
  poset.hasse = transitive_reduction(below);
  poset.labels = std::move(labels);
  poset.below = std::move(below);
  return poset;
}

std::vector<std::pair<std::size_t, std::size_t>> transitive_reduction(const std::vector<Bitset>& below,
                                                                      Execution mode) {
  const auto n = static_cast<std::ptrdiff_t>(below.size());
  std::vector<Bitset> covers(below.size());
  auto reduce = [&](std::ptrdiff_t j) {
    Bitset strict = below[j];
    strict.reset(j);
    Bitset implied(below.size());
    for (auto k = strict.find_first(); k != Bitset::npos; k = strict.find_next(k)) {
      Bitset under = below[k];
      under.reset(k);
      implied |= under;
    }
    covers[j] = strict - implied;
  };
  if (mode == Execution::Serial) {
    for (std::ptrdiff_t j = 0; j < n; ++j) reduce(j);
  } else {
#pragma omp parallel for schedule(dynamic, 8)
    for (std::ptrdiff_t j = 0; j < n; ++j) reduce(j);
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::ptrdiff_t j = 0; j < n; ++j)
    for (auto i = covers[j].find_first(); i != Bitset::npos; i = covers[j].find_next(i)) edges.emplace_back(i, j);
  std::sort(edges.begin(), edges.end());
  return edges;
}

void transitive_closure(std::vector<Bitset>& below) {
  const std::size_t n = below.size();
  for (std::size_t j = 0; j < n; ++j) below[j].set(j);
  // Warshall over columns: if k <= j then everything below k is below j.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j)
      if (j != k && below[j].test(k)) below[j] |= below[k];
}

AxiomReport check_partial_order(const std::vector<Bitset>& below) {
  AxiomReport report;
  const std::size_t n = below.size();
  for (std::size_t i = 0; i < n && report.reflexive; ++i)
    if (!below[i].test(i)) {
      report.reflexive = false;
      report.violation = "not reflexive at " + std::to_string(i);
    }
  for (std::size_t j = 0; j < n && report.antisymmetric; ++j)
    for (auto i = below[j].find_first(); i != Bitset::npos; i = below[j].find_next(i))
      if (i != j && below[i].test(j)) {
        report.antisymmetric = false;
        if (report.violation.empty())
          report.violation = "not antisymmetric: " + std::to_string(i) + " <-> " + std::to_string(j);
        break;
      }
  for (std::size_t j = 0; j < n && report.transitive; ++j)
    for (auto k = below[j].find_first(); k != Bitset::npos; k = below[j].find_next(k))
      if (!below[k].is_subset_of(below[j])) {
        report.transitive = false;
        if (report.violation.empty())
          report.violation = "not transitive through " + std::to_string(k) + " below " + std::to_string(j);
        break;
      }
  return report;
}

std::string to_dot(const ClosurePoset& poset, const OrbitCalculus& calc) {
  std::ostringstream out;
  out << "digraph closure {\n  rankdir=BT;\n  node [shape=box, fontsize=10];\n";
  for (std::size_t i = 0; i < poset.size(); ++i)
    out << "  n" << i << " [label=\"" << calc.format(poset.labels[i]) << "\"];\n";
  if (calc.is_split_model()) {
    std::map<long, std::vector<std::size_t>> layers;
    for (std::size_t i = 0; i < poset.size(); ++i) layers[calc.split_dimension(poset.labels[i])].push_back(i);
    for (const auto& [dim, nodes] : layers) {
      out << "  { rank=same;";
      for (std::size_t i : nodes) out << " n" << i << ";";
      out << " }  // dimension " << dim << "\n";
    }
  }
  for (const auto& [i, j] : poset.hasse) out << "  n" << i << " -> n" << j << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_json(const ClosurePoset& poset, const OrbitCalculus& calc) {
  nlohmann::json doc;
  doc["labels"] = nlohmann::json::array();
  for (const OrbitLabel& o : poset.labels) doc["labels"].push_back(calc.format(o));
  doc["hasse"] = nlohmann::json::array();
  for (const auto& [i, j] : poset.hasse) doc["hasse"].push_back({i, j});
  if (calc.is_split_model()) {
    doc["dimension"] = nlohmann::json::array();
    for (const OrbitLabel& o : poset.labels) doc["dimension"].push_back(calc.split_dimension(o));
  }
  return doc.dump(2) + "\n";
}

std::string to_csv(const OrbitCalculus& calc) {
  std::ostringstream out;
  const bool split = calc.is_split_model();
  out << (split ? "stratum,count,min_dim,max_dim\n" : "stratum,count,min_codim,max_codim\n");
  for (SimpleSubset J : calc.strata()) {
    long lo = std::numeric_limits<long>::max();
    long hi = std::numeric_limits<long>::min();
    for (const OrbitLabel& o : calc.enumerate_orbits(J)) {
      const long value = split ? calc.split_dimension(o) : calc.codim(o);
      lo = std::min(lo, value);
      hi = std::max(hi, value);
    }
    out << '"' << to_string(J) << "\"," << calc.stratum_size(J) << ',' << lo << ',' << hi << '\n';
  }
  return out.str();
}

}  // namespace wonderful
