#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wonderful/matrix_model.hpp"
#include "wonderful/oracle.hpp"

namespace wonderful {

/// Outcome of one exhaustive or sampled property check.
struct CheckResult {
  explicit CheckResult(std::string name = {}) : name(std::move(name)) {}

  std::string name;
  std::size_t cases = 0;
  /// First few failure descriptions; `failed` counts all of them.
  std::vector<std::string> failures;
  std::size_t failed = 0;

  bool passed() const { return failed == 0; }
  void fail(std::string message);
  void absorb(const CheckResult& other);
};

/// closure_poset against oracle_poset for both expression choices. With
/// `inject_fault`, one strict relation is removed from the formula side first.
CheckResult check_poset_oracle(const OrbitCalculus& calc, bool inject_fault = false);
/// Reflexivity, antisymmetry and transitivity of closure_leq on all labels.
CheckResult check_partial_order(const OrbitCalculus& calc);
/// Same-stratum agreement, group-level Bruhat recovery on the dense stratum,
/// and strict growth of split_dimension along the order.
CheckResult check_stratum_order(const OrbitCalculus& calc);
/// Properness and membership of intersection components.
CheckResult check_components(const OrbitCalculus& calc);
/// bruhat_leq against the subword definition on every pair.
CheckResult check_bruhat_subword(const CoxeterTable& table);
/// Coset decompositions, trichotomy and length additivity on every (w, J).
CheckResult check_cosets(const CoxeterTable& table);
/// d = l for unit weights on reduced systems, additivity on length-additive pairs.
CheckResult check_weighted_length(const OrbitCalculus& calc);
/// Stability, injectivity, predecessor inverse and codimension drop for every move.
CheckResult check_rank1(const OrbitCalculus& calc);
/// Random canonicalize invariance, idempotence, index and text round trips.
CheckResult check_labels(const OrbitCalculus& calc, std::uint64_t seed, std::size_t samples = 2000);
/// Orbit partition, label bijection, orbit sizes and group cells for PGL_n over F_q.
CheckResult check_matrix_model(int n, int q);

}  // namespace wonderful
