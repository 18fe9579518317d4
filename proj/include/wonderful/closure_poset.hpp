#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "wonderful/orbit_model.hpp"

namespace wonderful {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

/// A finite poset on orbit labels. below[j] has bit i set iff labels[i] <= labels[j].
struct ClosurePoset {
  std::vector<OrbitLabel> labels;
  std::vector<Bitset> below;
  /// Covering pairs (i, j): labels[i] is covered by labels[j]. Sorted.
  std::vector<std::pair<std::size_t, std::size_t>> hasse;

  std::size_t size() const { return labels.size(); }
  bool leq(std::size_t i, std::size_t j) const { return below[j].test(i); }
};

enum class Execution { Serial, Parallel };

/// Relation matrix of closure_leq over every label of `calc`.
std::vector<Bitset> closure_relation(const OrbitCalculus& calc, Execution mode = Execution::Parallel);

/// Full closure poset: labels in enumeration order, closure_leq, Hasse diagram.
ClosurePoset closure_poset(const OrbitCalculus& calc, Execution mode = Execution::Parallel);

/// Builds a poset from an explicit relation; the Hasse diagram is the transitive
/// reduction of `below`.
ClosurePoset make_poset(std::vector<OrbitLabel> labels, std::vector<Bitset> below);

/// Covering pairs of a transitive, reflexive relation.
std::vector<std::pair<std::size_t, std::size_t>> transitive_reduction(const std::vector<Bitset>& below,
                                                                      Execution mode = Execution::Parallel);

/// In-place reflexive transitive closure.
void transitive_closure(std::vector<Bitset>& below);

struct AxiomReport {
  bool reflexive = true;
  bool antisymmetric = true;
  bool transitive = true;
  /// Description of the first violation found, empty when all hold.
  std::string violation;

  bool ok() const { return reflexive && antisymmetric && transitive; }
};

AxiomReport check_partial_order(const std::vector<Bitset>& below);

/// Graphviz digraph, edges from covered to covering label. When the split model
/// applies, nodes sharing split_dimension are placed on one rank.
std::string to_dot(const ClosurePoset& poset, const OrbitCalculus& calc);
/// {"labels": [...], "hasse": [[i, j], ...]} plus "dimension" for the split model.
std::string to_json(const ClosurePoset& poset, const OrbitCalculus& calc);
/// Per-stratum summary: stratum,count,min_dim,max_dim.
std::string to_csv(const OrbitCalculus& calc);

}  // namespace wonderful
