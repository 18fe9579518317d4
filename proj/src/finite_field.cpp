#include "wonderful/finite_field.hpp"

#include <stdexcept>
#include <string>

namespace wonderful {

PrimeField::PrimeField(int p) : p_(p), inverse_(static_cast<std::size_t>(p > 0 ? p : 0), 0) {
  if (p < 2 || p > 251) throw std::invalid_argument("field order must be a prime in [2, 251]");
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument(std::to_string(p) + " is not prime");
  for (int a = 1; a < p; ++a)
    for (int b = 1; b < p; ++b)
      if (a * b % p == 1) inverse_[a] = b;
  for (int g = 1; g < p; ++g) {
    int x = 1, period = 0;
    do {
      x = x * g % p;
      ++period;
    } while (x != 1);
    if (period == p - 1) {
      generator_ = g;
      break;
    }
  }
}

int PrimeField::inv(int a) const {
  if (a % p_ == 0) throw std::domain_error("division by zero in F_" + std::to_string(p_));
  return inverse_[a % p_];
}

FqMatrix FqMatrix::identity(int n) {
  FqMatrix m = zero(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

FqMatrix multiply(const PrimeField& F, const FqMatrix& a, const FqMatrix& b) {
  FqMatrix c = FqMatrix::zero(a.n);
  for (int i = 0; i < a.n; ++i)
    for (int k = 0; k < a.n; ++k) {
      const int x = a.at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < a.n; ++j) c.at(i, j) = (c.at(i, j) + x * b.at(k, j)) % F.order();
    }
  return c;
}

int determinant(const PrimeField& F, FqMatrix m) {
  int det = 1;
  for (int col = 0; col < m.n; ++col) {
    int pivot = col;
    while (pivot < m.n && m.at(pivot, col) == 0) ++pivot;
    if (pivot == m.n) return 0;
    if (pivot != col) {
      for (int j = 0; j < m.n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
      det = F.neg(det);
    }
    det = F.mul(det, m.at(col, col));
    const int scale = F.inv(m.at(col, col));
    for (int i = col + 1; i < m.n; ++i) {
      const int factor = F.mul(m.at(i, col), scale);
      if (factor == 0) continue;
      for (int j = col; j < m.n; ++j) m.at(i, j) = F.sub(m.at(i, j), F.mul(factor, m.at(col, j)));
    }
  }
  return det;
}

FqMatrix inverse(const PrimeField& F, const FqMatrix& m) {
  FqMatrix a = m;
  FqMatrix inv = FqMatrix::identity(m.n);
  for (int col = 0; col < m.n; ++col) {
    int pivot = col;
    while (pivot < m.n && a.at(pivot, col) == 0) ++pivot;
    if (pivot == m.n) throw std::domain_error("matrix is singular");
    for (int j = 0; j < m.n; ++j) {
      std::swap(a.at(pivot, j), a.at(col, j));
      std::swap(inv.at(pivot, j), inv.at(col, j));
    }
    const int scale = F.inv(a.at(col, col));
    for (int j = 0; j < m.n; ++j) {
      a.at(col, j) = F.mul(a.at(col, j), scale);
      inv.at(col, j) = F.mul(inv.at(col, j), scale);
    }
    for (int i = 0; i < m.n; ++i) {
      const int factor = a.at(i, col);
      if (i == col || factor == 0) continue;
      for (int j = 0; j < m.n; ++j) {
        a.at(i, j) = F.sub(a.at(i, j), F.mul(factor, a.at(col, j)));
        inv.at(i, j) = F.sub(inv.at(i, j), F.mul(factor, inv.at(col, j)));
      }
    }
  }
  return inv;
}

void normalize_projective(const PrimeField& F, std::vector<int>& entries) {
  for (int x : entries)
    if (x != 0) {
      const int scale = F.inv(x);
      for (int& y : entries) y = F.mul(y, scale);
      return;
    }
}

std::vector<std::uint32_t> k_subsets(int n, int k) {
  std::vector<std::uint32_t> out;
  // Lexicographic on sorted index tuples.
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::uint32_t mask = 0;
    for (int i : idx) mask |= 1u << i;
    out.push_back(mask);
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == n - k + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
  return out;
}

FqMatrix exterior_power(const PrimeField& F, const FqMatrix& m, int k) {
  const std::vector<std::uint32_t> subsets = k_subsets(m.n, k);
  const int size = static_cast<int>(subsets.size());
  FqMatrix out = FqMatrix::zero(size);
  for (int s = 0; s < size; ++s)
    for (int t = 0; t < size; ++t) {
      FqMatrix minor = FqMatrix::zero(k);
      int r = 0;
      for (int i = 0; i < m.n; ++i) {
        if (!(subsets[s] >> i & 1u)) continue;
        int c = 0;
        for (int j = 0; j < m.n; ++j)
          if (subsets[t] >> j & 1u) minor.at(r, c++) = m.at(i, j);
        ++r;
      }
      out.at(s, t) = determinant(F, minor);
    }
  return out;
}

}  // namespace wonderful
