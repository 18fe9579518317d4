#pragma once

#include <cstdint>
#include <vector>

namespace wonderful {

/// Arithmetic in F_p for a small prime p.
class PrimeField {
 public:
  explicit PrimeField(int p);

  int order() const { return p_; }
  int add(int a, int b) const { return (a + b) % p_; }
  int sub(int a, int b) const { return (a - b + p_) % p_; }
  int mul(int a, int b) const { return a * b % p_; }
  int neg(int a) const { return (p_ - a) % p_; }
  /// Throws std::domain_error for 0.
  int inv(int a) const;
  /// A generator of the multiplicative group.
  int primitive_root() const { return generator_; }

 private:
  int p_;
  int generator_ = 1;
  std::vector<int> inverse_;
};

/// Dense square matrix over a prime field, entries in [0, p).
struct FqMatrix {
  int n = 0;
  std::vector<int> entries;  // row-major

  static FqMatrix zero(int n) { return {n, std::vector<int>(static_cast<std::size_t>(n) * n, 0)}; }
  static FqMatrix identity(int n);

  int& at(int i, int j) { return entries[static_cast<std::size_t>(i) * n + j]; }
  int at(int i, int j) const { return entries[static_cast<std::size_t>(i) * n + j]; }

  friend bool operator==(const FqMatrix&, const FqMatrix&) = default;
};

FqMatrix multiply(const PrimeField& F, const FqMatrix& a, const FqMatrix& b);
int determinant(const PrimeField& F, FqMatrix m);
/// Throws std::domain_error for a singular matrix.
FqMatrix inverse(const PrimeField& F, const FqMatrix& m);
/// Scales so the first nonzero entry in row-major order is 1; zero stays zero.
void normalize_projective(const PrimeField& F, std::vector<int>& entries);

/// k-element subsets of {0..n-1} in lexicographic order, as bit masks.
std::vector<std::uint32_t> k_subsets(int n, int k);

/// k-th exterior power: entry (S, T) is the minor on rows S and columns T.
FqMatrix exterior_power(const PrimeField& F, const FqMatrix& m, int k);

}  // namespace wonderful
