#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "wonderful/subset.hpp"

namespace wonderful {

using IntMatrix = std::vector<std::vector<int>>;
/// Coefficients of a root over the simple roots.
using RootVector = std::vector<int>;
/// Index into the list of all 2N roots of the underlying reduced system:
/// [0, N) are the positive roots (simple roots first), N + i is -root(i).
using RootIndex = std::uint16_t;

class RootSystemError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Finite root system built from a Cartan matrix a_ij = <alpha_i^vee, alpha_j>.
///
/// The Weyl group only ever sees the underlying reduced system. Simple roots
/// marked as non-reduced get their whole W-orbit doubled (BC-type support);
/// the doubles are bookkeeping visible through positive_roots() and doubled().
class RootSystem {
  struct Token {};

 public:
  RootSystem(Token, IntMatrix cartan, const std::set<SimpleIndex>& nonreduced_marks);
  RootSystem(const RootSystem&) = delete;
  RootSystem& operator=(const RootSystem&) = delete;

  /// Throws RootSystemError when the matrix is not a Cartan matrix of finite
  /// type, or a marked simple root cannot carry a double.
  static std::shared_ptr<const RootSystem> build(IntMatrix cartan,
                                                 const std::set<SimpleIndex>& nonreduced_marks = {});

  int rank() const { return rank_; }
  const IntMatrix& cartan() const { return cartan_; }
  SimpleSubset simple_roots() const { return SimpleSubset::full(rank_); }

  /// N = number of positive roots of the reduced system = |Phi+_nd|.
  std::size_t num_positive() const { return reduced_positive_.size(); }
  std::size_t num_roots() const { return 2 * reduced_positive_.size(); }

  /// Phi+, including doubled roots when the system is non-reduced.
  const std::vector<RootVector>& positive_roots() const { return positive_roots_; }
  /// Phi+_nd, indexed by RootIndex in [0, N).
  const std::vector<RootVector>& nondivisible_positive() const { return reduced_positive_; }
  /// Non-divisible positive root -> its double, for the doubled roots only.
  const std::map<RootIndex, RootVector>& doubled() const { return doubled_; }
  bool is_reduced() const { return doubled_.empty(); }

  RootVector root(RootIndex r) const;
  bool is_positive(RootIndex r) const { return r < num_positive(); }
  bool is_simple(RootIndex r) const { return r < rank_; }
  RootIndex negate(RootIndex r) const {
    auto n = static_cast<RootIndex>(num_positive());
    return r < n ? static_cast<RootIndex>(r + n) : static_cast<RootIndex>(r - n);
  }
  /// Index of s_i(root r).
  RootIndex reflect(SimpleIndex i, RootIndex r) const { return reflect_[i][r]; }
  std::optional<RootIndex> find(const RootVector& v) const;

  /// W-orbit of a root; every orbit contains a simple root.
  int root_orbit(RootIndex r) const { return orbit_[r]; }
  int num_root_orbits() const { return num_orbits_; }

 private:
  int rank_;
  IntMatrix cartan_;
  std::vector<RootVector> reduced_positive_;
  std::vector<RootVector> positive_roots_;
  std::map<RootIndex, RootVector> doubled_;
  std::vector<std::vector<RootIndex>> reflect_;
  std::map<RootVector, RootIndex> lookup_;
  std::vector<int> orbit_;
  int num_orbits_ = 0;
};

inline std::shared_ptr<const RootSystem> build_root_system(
    IntMatrix cartan, const std::set<SimpleIndex>& nonreduced_marks = {}) {
  return RootSystem::build(std::move(cartan), nonreduced_marks);
}

/// Cartan matrix of a named type: An, Bn, Cn, Dn, E6-E8, F4, G2, A0 (rank 0),
/// and products joined by 'x' such as "A1xA1". Throws RootSystemError.
IntMatrix cartan_of_type(const std::string& name);

}  // namespace wonderful
