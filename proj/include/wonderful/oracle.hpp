#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "wonderful/closure_poset.hpp"

namespace wonderful {

struct MoveStep {
  Side side;
  SimpleIndex alpha;

  friend bool operator==(const MoveStep&, const MoveStep&) = default;
};

struct MoveTrace {
  OrbitLabel start;
  std::vector<MoveStep> moves;  // applied front to back
  OrbitLabel end;
};

OrbitLabel replay(const OrbitCalculus& calc, const OrbitLabel& start, const std::vector<MoveStep>& moves);

/// Closed orbit inside stratum J: canonicalize(J, w0, w0 w0_J).
OrbitLabel minimal_orbit(const OrbitCalculus& calc, SimpleSubset J);

/// Which reduced expressions drive the move sequence.
enum class ExpressionChoice {
  /// ShortLex words, left moves before right moves.
  ShortLex,
  /// Lexicographically largest reduced words, right moves before left moves.
  Alternate,
};

/// Move sequence carrying minimal_orbit(target.stratum) to target.
MoveTrace move_trace(const OrbitCalculus& calc, const OrbitLabel& target,
                     ExpressionChoice choice = ExpressionChoice::ShortLex);

/// Labels obtained by applying every subsequence of move_trace(target) to the
/// minimal orbit of the stratum. Sorted by enumeration index.
std::vector<OrbitLabel> subword_closure_same_stratum(const OrbitCalculus& calc, const OrbitLabel& target,
                                                     ExpressionChoice choice = ExpressionChoice::ShortLex);

/// Closure poset generated by subword closures inside strata and by
/// intersection components along maximal proper sub-strata, transitively closed.
/// Uses neither closure_leq nor closure_leq_same_stratum.
ClosurePoset oracle_poset(const OrbitCalculus& calc, ExpressionChoice choice = ExpressionChoice::ShortLex);

struct PosetDiff {
  /// (i, j) with labels[i] <= labels[j] in the first poset only.
  std::vector<std::pair<std::size_t, std::size_t>> only_first;
  std::vector<std::pair<std::size_t, std::size_t>> only_second;

  bool empty() const { return only_first.empty() && only_second.empty(); }
};

/// Throws std::invalid_argument when the label lists differ.
PosetDiff compare_posets(const ClosurePoset& first, const ClosurePoset& second);

/// Every product of a subword of the canonical word of w; indexed by ElementId.
std::vector<bool> subword_products(const CoxeterTable& table, ElementId w);
/// Bruhat order from the subword definition, by exhaustive search.
bool subword_bruhat_leq(const CoxeterTable& table, ElementId u, ElementId w);

}  // namespace wonderful
