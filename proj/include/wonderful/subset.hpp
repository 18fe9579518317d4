#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace wonderful {

/// 0-based index of a simple root / simple reflection.
using SimpleIndex = int;

/// Subset of the simple roots, stored as a bitmask (rank at most 32).
class SimpleSubset {
 public:
  constexpr SimpleSubset() = default;

  static constexpr SimpleSubset from_mask(std::uint32_t mask) {
    SimpleSubset s;
    s.bits_ = mask;
    return s;
  }
  static constexpr SimpleSubset full(int rank) {
    return from_mask(rank >= 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << rank) - 1));
  }
  static SimpleSubset of(std::initializer_list<SimpleIndex> indices);
  static SimpleSubset of(const std::vector<SimpleIndex>& indices);

  constexpr bool contains(SimpleIndex i) const { return (bits_ >> i) & 1u; }
  constexpr SimpleSubset with(SimpleIndex i) const { return from_mask(bits_ | (1u << i)); }
  constexpr SimpleSubset without(SimpleIndex i) const { return from_mask(bits_ & ~(1u << i)); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool is_subset_of(SimpleSubset other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects_mask(std::uint32_t mask) const { return (bits_ & mask) != 0; }
  constexpr std::uint32_t mask() const { return bits_; }

  std::vector<SimpleIndex> elements() const;

  friend constexpr bool operator==(SimpleSubset, SimpleSubset) = default;
  friend constexpr auto operator<=>(SimpleSubset, SimpleSubset) = default;

 private:
  std::uint32_t bits_ = 0;
};

/// "[1,3]" with 1-based indices; "[]" for the empty set.
std::string to_string(SimpleSubset s);

/// Parses the bracketed 1-based form produced by to_string. Throws std::invalid_argument.
SimpleSubset parse_subset(const std::string& text, int rank);

/// Stratum order used for all deterministic output: by cardinality, then
/// lexicographically on the sorted element list.
bool stratum_order_less(SimpleSubset a, SimpleSubset b);

/// All subsets of {0..rank-1} in stratum order.
std::vector<SimpleSubset> all_subsets(int rank);

/// X_I lies in the closure of X_J exactly when I is contained in J.
inline bool stratum_leq(SimpleSubset I, SimpleSubset J) { return I.is_subset_of(J); }

}  // namespace wonderful
