#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wonderful/coxeter_table.hpp"
#include "wonderful/polynomial.hpp"
#include "wonderful/weights.hpp"

namespace wonderful {

/// Name of one P x P^- orbit: stratum I, sigma and tau in W^I, rho in W_I.
/// The orbit is (P x P^-) . (sigma rho, tau) . b_I.
struct OrbitLabel {
  SimpleSubset stratum;
  ElementId sigma = 0;
  ElementId tau = 0;
  ElementId rho = 0;

  friend bool operator==(const OrbitLabel&, const OrbitLabel&) = default;
};

enum class Side { Left, Right };

std::string to_string(Side side);

/// Elements realising closure_leq: sigma1 rho1 u >= sigma2 rho2 v and tau1 >= tau2 v u^{-1}.
struct ClosureWitness {
  ElementId u = 0;
  ElementId v = 0;
};

/// Thrown for a label string that does not parse, or parses to a non-canonical
/// label; `suggestion` then holds the canonical form of the same orbit.
class LabelError : public std::invalid_argument {
 public:
  LabelError(const std::string& what, std::string suggestion = {})
      : std::invalid_argument(what), suggestion(std::move(suggestion)) {}
  std::string suggestion;
};

/// Thrown by unique_predecessor when the label is not stable.
class UnstableLabel : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Caps {
  std::size_t group = default_group_cap();
  /// Bound on the number of labels materialised by enumerate_orbits.
  std::size_t orbits = 10'000'000;
  /// Bound on the number of labels for the quadratic-size closure posets.
  std::size_t poset_orbits = 20'000;
};

/// Orbit calculus of the wonderful compactification for one relative root
/// system and weight function. Immutable after construction.
class OrbitCalculus {
 public:
  explicit OrbitCalculus(std::shared_ptr<const RootSystem> roots, Caps caps = {});
  OrbitCalculus(std::shared_ptr<const RootSystem> roots, WeightFunction weights, Caps caps = {});

  const CoxeterTable& group() const { return table_; }
  const RootSystem& roots() const { return table_.roots(); }
  const WeightFunction& weights() const { return weights_; }
  const Caps& caps() const { return caps_; }
  int rank() const { return table_.rank(); }
  SimpleSubset all_simple() const { return SimpleSubset::full(rank()); }

  /// W_J and W^J in ShortLex order.
  const std::vector<ElementId>& parabolic(SimpleSubset J) const { return parabolic_[J.mask()]; }
  const std::vector<ElementId>& min_coset_reps(SimpleSubset J) const { return min_reps_[J.mask()]; }

  /// Strata in output order.
  const std::vector<SimpleSubset>& strata() const { return strata_; }
  std::size_t stratum_size(SimpleSubset J) const;
  std::size_t orbit_count() const { return total_; }

  /// All labels with stratum J, or all labels when J is empty; ordered by
  /// stratum, then ShortLex on sigma, tau, rho.
  std::vector<OrbitLabel> enumerate_orbits(std::optional<SimpleSubset> J = std::nullopt) const;

  /// Position of a valid label in the full enumeration order, and back.
  std::size_t index_of(const OrbitLabel& o) const;
  OrbitLabel label_at(std::size_t index) const;

  bool is_valid(const OrbitLabel& o) const;

  /// Label of the orbit through (x, y) . b_I; (x, y) and (x v, y v) with v in W_I
  /// name the same orbit.
  OrbitLabel canonicalize(SimpleSubset I, ElementId x, ElementId y) const;

  long weighted_length(ElementId w) const { return d_[w]; }
  /// Codimension in the stratum closure: d(sigma) + d(tau) + d(rho).
  long codim(const OrbitLabel& o) const;
  /// Split model only: 2N - l(sigma rho) - l(tau) + |I|.
  long split_dimension(const OrbitLabel& o) const;
  /// Split model only: q^(2N - l(sigma rho) - l(tau)) (q - 1)^|I|.
  IntPolynomial point_count_poly(const OrbitLabel& o) const;
  /// True when the unit-weight, reduced (split) model applies.
  bool is_split_model() const;

  /// Closure of the orbit under P_alpha x P^- (Left) or P x P_alpha^- (Right).
  OrbitLabel rank1_act(const OrbitLabel& o, Side side, SimpleIndex alpha) const;
  bool is_stable(const OrbitLabel& o, Side side, SimpleIndex alpha) const;
  /// The unique O0 != O with rank1_act(O0) = O. Throws UnstableLabel.
  OrbitLabel unique_predecessor(const OrbitLabel& o, Side side, SimpleIndex alpha) const;

  /// Same-stratum closure order: exists u in W_J with sigma1 rho1 u >= sigma2 rho2
  /// and tau1 >= tau2 u^{-1}. Throws std::invalid_argument if strata differ.
  bool closure_leq_same_stratum(const OrbitLabel& a, const OrbitLabel& b) const;
  /// Whether the orbit a lies in the closure of b.
  bool closure_leq(const OrbitLabel& a, const OrbitLabel& b) const { return closure_witness(a, b).has_value(); }
  std::optional<ClosureWitness> closure_witness(const OrbitLabel& a, const OrbitLabel& b) const;

  /// Irreducible components of the closure of o met with the closure of X_I.
  std::vector<OrbitLabel> intersection_components(const OrbitLabel& o, SimpleSubset I) const;

  /// `I=[2];sigma=1.2;tau=e;rho=2` with 1-based generators.
  std::string format(const OrbitLabel& o) const;
  /// Inverse of format; throws LabelError for malformed or non-canonical input.
  OrbitLabel parse(std::string_view text) const;

 private:
  void require_split_model(const char* what) const;

  CoxeterTable table_;
  WeightFunction weights_;
  Caps caps_;
  std::vector<long> d_;
  std::vector<std::vector<ElementId>> parabolic_;
  std::vector<std::vector<ElementId>> min_reps_;
  std::vector<std::vector<std::int32_t>> parabolic_pos_;
  std::vector<std::vector<std::int32_t>> min_rep_pos_;
  std::vector<SimpleSubset> strata_;
  std::vector<std::size_t> offset_;  // by mask
  std::size_t total_ = 0;
};

}  // namespace wonderful
