#include <random>

#include "doctest.h"
#include "jordanum/error.hpp"
#include "jordanum/number_theory.hpp"
#include "jordanum/rational.hpp"
#include "jordanum/ratpoly.hpp"

using namespace jordanum;

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == RatPoly({Rational(-1), Rational(1)}));
  CHECK(cyclotomic_polynomial(6) == RatPoly({Rational(1), Rational(-1), Rational(1)}));
  CHECK(cyclotomic_polynomial(8) == RatPoly({Rational(1), Rational(0), Rational(0), Rational(0), Rational(1)}));
  for (long M = 1; M <= 60; ++M) {
    const RatPoly p = cyclotomic_polynomial(M);
    CHECK(p.degree() == euler_phi(M));
    CHECK(p.leading() == 1);
    for (const auto& c : p.coeffs()) CHECK(c.get_den() == 1);
  }
}

TEST_CASE("product of cyclotomic polynomials over divisors is x^n - 1") {
  for (long n = 1; n <= 30; ++n) {
    RatPoly prod({Rational(1)});
    for (i64 d : divisors(n)) prod = prod * cyclotomic_polynomial(d);
    CHECK(prod == RatPoly::x_pow_minus_one(static_cast<std::size_t>(n)));
  }
}

TEST_CASE("polynomial division and gcd") {
  const RatPoly a({Rational(-1), Rational(0), Rational(0), Rational(1)});  // x^3 - 1
  const RatPoly b({Rational(-1), Rational(1)});
  auto [q, r] = divmod(a, b);
  CHECK(r.is_zero());
  CHECK(q == RatPoly({Rational(1), Rational(1), Rational(1)}));
  auto g = extended_gcd(cyclotomic_polynomial(3), cyclotomic_polynomial(4));
  CHECK(g.gcd == RatPoly({Rational(1)}));
  CHECK(g.s * cyclotomic_polynomial(3) + g.t * cyclotomic_polynomial(4) == g.gcd);
}

TEST_CASE("kronecker symbol") {
  CHECK(kronecker_symbol(1, 9) == 1);
  CHECK(kronecker_symbol(1, 20) == 1);
  CHECK(kronecker_symbol(2, 7) == 1);
  CHECK(kronecker_symbol(-3, 5) == -1);
  CHECK(kronecker_symbol(6, 9) == 0);
}

TEST_CASE("kronecker symbol matches quadratic residues for odd primes below 500") {
  for (i64 p = 3; p < 500; ++p) {
    if (!is_prime(p)) continue;
    std::vector<bool> square(static_cast<std::size_t>(p), false);
    for (i64 x = 1; x < p; ++x) square[static_cast<std::size_t>(x * x % p)] = true;
    for (i64 a = 0; a < p; ++a) {
      const int expect = a == 0 ? 0 : (square[static_cast<std::size_t>(a)] ? 1 : -1);
      CHECK(kronecker_symbol(a, p) == expect);
    }
  }
}

TEST_CASE("kronecker symbol is multiplicative") {
  for (i64 a = -20; a <= 20; ++a)
    for (i64 b = -20; b <= 20; ++b)
      for (i64 n = 1; n <= 30; n += 7) CHECK(kronecker_symbol(a * b, n) == kronecker_symbol(a, n) * kronecker_symbol(b, n));
  for (i64 a = -10; a <= 10; ++a)
    for (i64 n = 1; n <= 15; ++n)
      for (i64 m = 1; m <= 15; m += 4) CHECK(kronecker_symbol(a, n * m) == kronecker_symbol(a, n) * kronecker_symbol(a, m));
}

TEST_CASE("squarefree part") {
  auto d = squarefree_part(Rational(8));
  CHECK(d.squarefree == 2);
  CHECK(d.cofactor == 2);
  d = squarefree_part(Rational(-12));
  CHECK(d.squarefree == -3);
  CHECK(d.cofactor == 2);
  d = squarefree_part(Rational(5, 9));
  CHECK(d.squarefree == 5);
  CHECK(d.cofactor == Rational(1, 3));
  CHECK_THROWS_AS(squarefree_part(Rational(0)), Error);
  std::mt19937_64 rng(7);
  for (int k = 0; k < 200; ++k) {
    const Rational r = make_rational(static_cast<long>(rng() % 2000) - 1000, static_cast<long>(rng() % 50) + 1);
    if (r == 0) continue;
    const auto s = squarefree_part(r);
    CHECK(Rational(s.squarefree) * s.cofactor * s.cofactor == r);
  }
}

TEST_CASE("rationals are canonical") {
  CHECK(make_rational(6, -4) == Rational(-3, 2));
  CHECK(make_rational(6, -4).get_den() == 2);
  CHECK(parse_rational("-10/4") == Rational(-5, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
}

TEST_CASE("number theory helpers") {
  CHECK(euler_phi(15) == 8);
  CHECK(mobius(30) == -1);
  CHECK(mobius(12) == 0);
  CHECK(multiplicative_order(2, 7) == 3);
  CHECK(inverse_mod(3, 7) == 5);
  CHECK(units(8) == std::vector<i64>{1, 3, 5, 7});
  CHECK(generated_subgroup({4}, 15) == std::vector<i64>{1, 4});
  CHECK(preimage({1, 4}, 5, 15) == std::vector<i64>{1, 4, 11, 14});
  CHECK(is_multiplicatively_closed({1, 4}, 5));
  CHECK_FALSE(is_multiplicatively_closed({1, 2}, 5));
}
