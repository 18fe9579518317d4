#include "wonderful/weights.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace wonderful {

WeightFunction::WeightFunction(const RootSystem& roots) : weights_(roots.num_positive(), 1) {}

WeightFunction::WeightFunction(const RootSystem& roots, std::vector<int> per_root) : weights_(std::move(per_root)) {
  if (weights_.size() != roots.num_positive())
    throw std::invalid_argument("weight vector has " + std::to_string(weights_.size()) + " entries, expected " +
                                std::to_string(roots.num_positive()));
  std::map<int, int> by_orbit;
  for (std::size_t r = 0; r < weights_.size(); ++r) {
    if (weights_[r] <= 0) throw std::invalid_argument("weights must be positive integers");
    auto [it, fresh] = by_orbit.emplace(roots.root_orbit(static_cast<RootIndex>(r)), weights_[r]);
    if (!fresh && it->second != weights_[r])
      throw std::invalid_argument("weights are not constant on W-orbits of roots");
  }
}

WeightFunction WeightFunction::from_simple_orbits(const RootSystem& roots,
                                                  const std::map<SimpleIndex, int>& by_simple) {
  std::map<int, int> by_orbit;
  for (const auto& [i, w] : by_simple) {
    if (i < 0 || i >= roots.rank())
      throw std::invalid_argument("weight key " + std::to_string(i + 1) + " is not a simple index");
    auto [it, fresh] = by_orbit.emplace(roots.root_orbit(static_cast<RootIndex>(i)), w);
    if (!fresh && it->second != w)
      throw std::invalid_argument("conflicting weights for simple roots in one W-orbit");
  }
  std::vector<int> per_root(roots.num_positive(), 1);
  for (std::size_t r = 0; r < per_root.size(); ++r) {
    auto it = by_orbit.find(roots.root_orbit(static_cast<RootIndex>(r)));
    if (it != by_orbit.end()) per_root[r] = it->second;
  }
  return WeightFunction(roots, std::move(per_root));
}

bool WeightFunction::is_unit() const {
  return std::all_of(weights_.begin(), weights_.end(), [](int w) { return w == 1; });
}

}  // namespace wonderful
