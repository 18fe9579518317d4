#pragma once

#include <map>
#include <vector>

#include "wonderful/root_system.hpp"

namespace wonderful {

/// Positive integer weights on the non-divisible positive roots, constant on
/// W-orbits. They stand in for dim U_(alpha); unit weights model the split case.
class WeightFunction {
 public:
  /// Unit weights.
  explicit WeightFunction(const RootSystem& roots);
  /// One weight per non-divisible positive root (indexed by RootIndex).
  /// Throws std::invalid_argument if a weight is not positive or the
  /// assignment is not W-invariant.
  WeightFunction(const RootSystem& roots, std::vector<int> per_root);

  /// Weights keyed by simple index; the weight is spread over the W-orbit of
  /// that simple root. Orbits without an entry get weight 1.
  static WeightFunction from_simple_orbits(const RootSystem& roots, const std::map<SimpleIndex, int>& by_simple);

  int operator()(RootIndex positive_root) const { return weights_[positive_root]; }
  const std::vector<int>& values() const { return weights_; }
  bool is_unit() const;

 private:
  std::vector<int> weights_;
};

}  // namespace wonderful
