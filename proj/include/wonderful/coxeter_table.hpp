#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "wonderful/weyl_group.hpp"

namespace wonderful {

/// Dense id of an element of an enumerated Weyl group; ids follow ShortLex order, 0 is e.
using ElementId = std::uint32_t;

/// Fully enumerated Weyl group with multiplication tables and a precomputed
/// Bruhat order. This is the fast path used by the orbit calculus; every
/// operation here has a reference counterpart on WeylElement.
class CoxeterTable {
 public:
  explicit CoxeterTable(std::shared_ptr<const RootSystem> roots, std::size_t cap = default_group_cap());

  const RootSystem& roots() const { return *roots_; }
  const std::shared_ptr<const RootSystem>& roots_ptr() const { return roots_; }
  int rank() const { return roots_->rank(); }
  std::size_t size() const { return elements_.size(); }

  const WeylElement& element(ElementId w) const { return elements_[w]; }
  ElementId id_of(const WeylElement& w) const;
  ElementId from_word(std::span<const SimpleIndex> word) const;

  static constexpr ElementId identity() { return 0; }
  ElementId longest() const { return static_cast<ElementId>(elements_.size() - 1); }
  ElementId longest(SimpleSubset J) const;

  int length(ElementId w) const { return length_[w]; }
  ElementId left(SimpleIndex i, ElementId w) const { return left_[i][w]; }
  ElementId right(ElementId w, SimpleIndex i) const { return right_[i][w]; }
  ElementId inverse(ElementId w) const { return inverse_[w]; }
  ElementId multiply(ElementId u, ElementId v) const;

  std::uint32_t left_descents(ElementId w) const { return left_descents_[w]; }
  std::uint32_t right_descents(ElementId w) const { return right_descents_[w]; }
  /// Set of generators occurring in any reduced word.
  std::uint32_t support(ElementId w) const { return support_[w]; }

  bool in_parabolic(ElementId w, SimpleSubset J) const { return (support_[w] & ~J.mask()) == 0; }
  bool is_min_coset_rep(ElementId w, SimpleSubset J) const { return (right_descents_[w] & J.mask()) == 0; }

  bool bruhat_leq(ElementId u, ElementId w) const;

  struct Decomposition {
    ElementId min_rep;
    ElementId parabolic;
  };
  Decomposition coset_decompose(ElementId w, SimpleSubset J) const;

  ParabolicCase trichotomy(ElementId sigma, SimpleSubset J, SimpleIndex alpha) const;

  std::string word_string(ElementId w) const { return elements_[w].to_string(); }

 private:
  std::shared_ptr<const RootSystem> roots_;
  std::vector<WeylElement> elements_;
  std::unordered_map<WeylElement, ElementId> index_;
  std::vector<int> length_;
  std::vector<std::vector<ElementId>> left_;
  std::vector<std::vector<ElementId>> right_;
  std::vector<ElementId> inverse_;
  std::vector<std::uint32_t> left_descents_;
  std::vector<std::uint32_t> right_descents_;
  std::vector<std::uint32_t> support_;
  std::vector<ElementId> product_;  // dense |W| x |W| table for small groups
  std::vector<boost::dynamic_bitset<std::uint64_t>> lower_;  // Bruhat lower intervals for small groups
};

}  // namespace wonderful
