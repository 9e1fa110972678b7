#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jordanum/number_theory.hpp"
#include "jordanum/rational.hpp"

namespace jordanum {

// An element of Q(zeta_M), stored in the power basis 1, zeta_M, ...,
// zeta_M^{phi(M)-1} as the unique representative modulo Phi_M. Values are
// immutable once built; binary operations on different levels lift both
// operands to the lcm of the levels.
class CycElt {
 public:
  CycElt();  // zero, level 1
  CycElt(const Rational& r);  // NOLINT(google-explicit-constructor)
  CycElt(long n);             // NOLINT(google-explicit-constructor)

  // zeta_M^k
  static CycElt zeta(i64 level, i64 k = 1);
  // Coefficients in the power basis; shorter vectors are zero-padded.
  static CycElt from_coeffs(i64 level, std::vector<Rational> coeffs);
  // sum_k c_k zeta_M^{e_k}, exponents taken mod M.
  static CycElt from_terms(i64 level, const std::vector<std::pair<i64, Rational>>& terms);

  i64 level() const { return level_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  // Throws OutOfRange if the value is not rational.
  Rational to_rational() const;

  // Same value at level M (level() must divide M).
  CycElt lifted(i64 M) const;

  CycElt operator-() const;
  CycElt& operator+=(const CycElt& o);
  CycElt& operator-=(const CycElt& o);
  CycElt& operator*=(const CycElt& o);
  CycElt& operator/=(const CycElt& o);
  friend CycElt operator+(CycElt a, const CycElt& b) { return a += b; }
  friend CycElt operator-(CycElt a, const CycElt& b) { return a -= b; }
  friend CycElt operator*(CycElt a, const CycElt& b) { return a *= b; }
  friend CycElt operator/(CycElt a, const CycElt& b) { return a /= b; }
  friend bool operator==(const CycElt& a, const CycElt& b);
  friend bool operator!=(const CycElt& a, const CycElt& b) { return !(a == b); }

  // Byte-comparable form, unique per (level, value).
  std::string key() const;
  // Human-readable polynomial in z<M>, e.g. "1/2 + 1/2*z5 - z5^3".
  std::string to_string() const;

 private:
  CycElt(i64 level, std::vector<Rational> coeffs);
  i64 level_;
  std::vector<Rational> coeffs_;
};

// Multiplicative inverse via the extended gcd with Phi_M. Throws ZeroInverse.
CycElt inverse(const CycElt& a);

CycElt pow(const CycElt& a, i64 e);

// The automorphism zeta_M -> zeta_M^h. Throws NotCoprime unless gcd(h, M) = 1.
CycElt galois_apply(i64 h, const CycElt& a);

// Complex conjugate under the standard embedding zeta_M = exp(2 pi i / M).
CycElt conjugate(const CycElt& a);

// Rewrites a at level d (d | level(a)) when a lies in Q(zeta_d).
std::optional<CycElt> descend(const CycElt& a, i64 d);

// The same value at the smallest level whose cyclotomic field contains it.
CycElt normalize_level(const CycElt& a);

// A fixed square root of a nonzero rational, built from quadratic Gauss
// sums and returned at its minimal level. Throws ZeroRadicand for 0.
CycElt sqrt_rational(const Rational& r);

// Lifts every element to the lcm of their levels.
std::vector<CycElt> common_level(std::vector<CycElt> xs);

}  // namespace jordanum
