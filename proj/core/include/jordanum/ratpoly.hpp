#pragma once

#include <string>
#include <utility>
#include <vector>

#include "jordanum/rational.hpp"

namespace jordanum {

// Dense univariate polynomial over Q, lowest degree first. The zero
// polynomial has no coefficients; otherwise the leading one is nonzero.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);

  static RatPoly monomial(const Rational& c, std::size_t degree);
  static RatPoly x_pow_minus_one(std::size_t n);  // x^n - 1

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t k) const;
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& x) const;

  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const Rational& c, RatPoly p);
  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Euclidean division; throws ZeroInverse when dividing by zero.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);

struct ExtendedGcd {
  RatPoly gcd;  // monic
  RatPoly s;    // s*a + t*b = gcd
  RatPoly t;
};
ExtendedGcd extended_gcd(const RatPoly& a, const RatPoly& b);

// Phi_M, the M-th cyclotomic polynomial (M >= 1).
RatPoly cyclotomic_polynomial(long M);

}  // namespace jordanum
