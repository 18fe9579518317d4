#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wonderful {

/// Polynomial in q with integer coefficients; coefficient k multiplies q^k.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<std::int64_t> coefficients);
  static IntPolynomial constant(std::int64_t c) { return IntPolynomial({c}); }
  static IntPolynomial monomial(int degree, std::int64_t c = 1);

  const std::vector<std::int64_t>& coefficients() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t evaluate(std::int64_t q) const;

  IntPolynomial& operator+=(const IntPolynomial& other);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// e.g. "q^3 + q^2 - 1"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void trim();
  std::vector<std::int64_t> coeffs_;
};

IntPolynomial pow(const IntPolynomial& base, int exponent);

}  // namespace wonderful
