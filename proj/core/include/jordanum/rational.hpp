#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace jordanum {

// Arbitrary-precision rationals. gmpxx keeps every arithmetic result in
// lowest terms with a positive denominator.
using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(std::int64_t num, std::int64_t den = 1);
Rational make_rational(const Integer& num, const Integer& den);

std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

// Parses "7", "-3", "5/9". Throws Error(ParseError) on malformed input and
// Error(ZeroInput) on a zero denominator.
Rational parse_rational(const std::string& text);

struct SquarefreeDecomposition {
  std::int64_t squarefree;  // sign carried here
  Rational cofactor;        // r = squarefree * cofactor^2
};

// r = s * q^2 with s a squarefree integer. Throws ZeroInput for r = 0 and
// OutOfRange if the radicand cannot be factored by trial division.
SquarefreeDecomposition squarefree_part(const Rational& r);

}  // namespace jordanum
