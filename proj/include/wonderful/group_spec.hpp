#pragma once

#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>

#include "wonderful/orbit_model.hpp"

namespace wonderful {

class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A group description as accepted on the command line.
struct GroupSpec {
  std::string name;  // type name, or "custom" for an explicit Cartan matrix
  IntMatrix cartan;
  std::set<SimpleIndex> nonreduced;  // 0-based
  /// Weight of the W-orbit of each listed simple root (0-based); others default to 1.
  std::map<SimpleIndex, int> weights;
};

/// Named type such as "B3" or "A1xG2".
GroupSpec group_spec_from_type(const std::string& type);
/// {"type": "A2"} or {"cartan": [[...]], "nonreduced": [1-based], "weights": {"1-based index": w}}.
GroupSpec parse_group_spec(const std::string& json_text);
/// Merges a JSON object {"1-based index": w} into spec.weights.
void apply_weight_overrides(GroupSpec& spec, const std::string& json_text);

std::shared_ptr<const RootSystem> build_roots(const GroupSpec& spec);
WeightFunction build_weights(const RootSystem& roots, const GroupSpec& spec);
OrbitCalculus make_calculus(const GroupSpec& spec, Caps caps = {});

}  // namespace wonderful
