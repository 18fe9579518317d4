#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "wonderful/checks.hpp"
#include "wonderful/group_spec.hpp"

namespace testing_support {

/// Seed for randomized checks: ORBITS_SEED when set, otherwise fixed.
inline std::uint64_t seed() {
  if (const char* env = std::getenv("ORBITS_SEED")) return std::strtoull(env, nullptr, 10);
  return 12345;
}

inline wonderful::OrbitCalculus calculus(const std::string& type) {
  return wonderful::OrbitCalculus(wonderful::build_root_system(wonderful::cartan_of_type(type)));
}

inline std::vector<wonderful::SimpleIndex> word(std::initializer_list<int> one_based) {
  std::vector<wonderful::SimpleIndex> w;
  for (int i : one_based) w.push_back(i - 1);
  return w;
}

/// Every type of rank at most three, plus G2.
inline const std::vector<std::string>& small_types() {
  static const std::vector<std::string> types = {"A1", "A1xA1", "A2", "B2", "G2", "A1xA1xA1",
                                                 "A1xA2", "A1xB2", "A3", "B3", "C3"};
  return types;
}

}  // namespace testing_support
