#include <random>

#include "doctest.h"
#include "jordanum/cyclotomic.hpp"
#include "jordanum/error.hpp"
#include "oracles.hpp"

using namespace jordanum;

namespace {

CycElt random_elt(std::mt19937_64& rng, i64 level) {
  std::vector<Rational> c(static_cast<std::size_t>(euler_phi(level)));
  for (auto& x : c) x = make_rational(static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 3) + 1);
  return CycElt::from_coeffs(level, c);
}

}  // namespace

TEST_CASE("multiplication examples") {
  const CycElt z3 = CycElt::zeta(3);
  CHECK(z3 * z3 == CycElt(-1L) - z3);
  CHECK(CycElt::zeta(4) * CycElt::zeta(4) == CycElt(-1L));
  CHECK(pow(z3 - z3 * z3, 2) == CycElt(-3L));
}

TEST_CASE("inverse examples") {
  CHECK(inverse(CycElt::zeta(4)) == -CycElt::zeta(4));
  CHECK(inverse(CycElt(1L) + CycElt::zeta(3)) == -CycElt::zeta(3));
  CHECK(inverse(CycElt(2L)) == CycElt(Rational(1, 2)));
  CHECK_THROWS_AS(inverse(CycElt(0L)), Error);
}

TEST_CASE("galois action examples") {
  const CycElt z5 = CycElt::zeta(5);
  CHECK(galois_apply(2, z5) == z5 * z5);
  CHECK(galois_apply(-1, z5 + inverse(z5)) == z5 + inverse(z5));
  const CycElt z3 = CycElt::zeta(3);
  CHECK(galois_apply(2, z3 - z3 * z3) == -(z3 - z3 * z3));
  CHECK_THROWS_AS(galois_apply(5, z5), Error);
}

TEST_CASE("ring axioms on random elements") {
  std::mt19937_64 rng(11);
  const i64 levels[] = {1, 3, 4, 5, 7, 8, 12, 15, 20, 24, 36, 60};
  for (int k = 0; k < 60; ++k) {
    const i64 la = levels[rng() % 12], lb = levels[rng() % 12], lc = levels[rng() % 12];
    const CycElt a = random_elt(rng, la), b = random_elt(rng, lb), c = random_elt(rng, lc);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * CycElt(1L) == a);
    if (!a.is_zero()) CHECK(a * inverse(a) == CycElt(1L));
  }
}

TEST_CASE("multiplication agrees with the polynomial division oracle") {
  std::mt19937_64 rng(5);
  for (i64 M : {3, 5, 8, 9, 12, 15, 16, 21, 28, 45, 60}) {
    for (int k = 0; k < 5; ++k) {
      const CycElt a = random_elt(rng, M), b = random_elt(rng, M);
      CHECK(a * b == oracle::multiply_by_division(a, b));
    }
  }
}

TEST_CASE("cyclotomic polynomial vanishes at zeta") {
  for (i64 M = 1; M <= 60; ++M) {
    const RatPoly phi = cyclotomic_polynomial(M);
    CycElt acc(0L);
    for (std::size_t k = 0; k < phi.coeffs().size(); ++k)
      acc += CycElt(phi.coeffs()[k]) * CycElt::zeta(M, static_cast<i64>(k));
    CHECK(acc.is_zero());
  }
}

TEST_CASE("lift then descend round trip") {
  std::mt19937_64 rng(3);
  for (i64 M : {3, 4, 5, 12}) {
    for (i64 k : {2, 3, 5}) {
      const CycElt a = random_elt(rng, M);
      const auto back = descend(a.lifted(M * k), M);
      REQUIRE(back.has_value());
      CHECK(back->coeffs() == a.coeffs());
      CHECK(back->level() == M);
    }
  }
  CHECK_FALSE(descend(CycElt::zeta(5), 1).has_value());
}

TEST_CASE("galois action is a homomorphism in h") {
  std::mt19937_64 rng(9);
  const i64 M = 24;
  const CycElt a = random_elt(rng, M);
  for (i64 h : units(M))
    for (i64 g : units(M)) CHECK(galois_apply(h, galois_apply(g, a)) == galois_apply(h * g % M, a));
}

TEST_CASE("square roots of rationals") {
  for (long r : {-1L, 2L, -2L, 3L, -3L, 5L, -7L, 10L, -15L, 12L}) {
    const CycElt s = sqrt_rational(Rational(r));
    CHECK(s * s == CycElt(r));
  }
  CHECK(sqrt_rational(Rational(9, 4)) == CycElt(Rational(3, 2)));
  CHECK(sqrt_rational(Rational(-7)).level() == 7);
  CHECK(sqrt_rational(Rational(5)).level() == 5);
  CHECK_THROWS_AS(sqrt_rational(Rational(0)), Error);
}

TEST_CASE("normalize_level finds the smallest level") {
  CHECK(normalize_level(CycElt::zeta(12, 4)).level() == 3);
  CHECK(normalize_level(CycElt::zeta(12, 6)).level() == 1);
  CHECK(normalize_level(CycElt::zeta(10)).level() == 5);
}

TEST_CASE("keys separate values and levels") {
  CHECK(CycElt::zeta(3).key() != CycElt::zeta(3).lifted(6).key());
  CHECK(CycElt::zeta(3) == CycElt::zeta(3).lifted(6));
}
