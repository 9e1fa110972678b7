#include <numeric>

#include "doctest.h"
#include "jordanum/error.hpp"
#include "jordanum/field_oracle.hpp"
#include "oracles.hpp"

using namespace jordanum;

namespace {

FieldDescriptor Q() { return FieldDescriptor::rationals(); }
FieldDescriptor ab(i64 m, std::vector<i64> H) { return FieldDescriptor::abelian(m, std::move(H)); }
FieldDescriptor sq(long r) { return adjoin_sqrt(Q(), Rational(r)); }

CycElt real_period(i64 r) { return CycElt::zeta(r) + CycElt::zeta(r, r - 1); }

bool is_root_of_unity(const CycElt& x) {
  const CycElt y = normalize_level(x);
  const i64 M = std::lcm(y.level(), i64{2});
  return pow(y, M) == CycElt(1L);
}

}  // namespace

TEST_CASE("has_sqrt examples") {
  CHECK(has_sqrt(ab(5, {1}), Rational(5)));
  CHECK(has_sqrt(ab(7, {1}), Rational(-7)));
  CHECK_FALSE(has_sqrt(sq(-5), Rational(2)));
  CHECK(has_sqrt(Q(), Rational(4)));
  CHECK(has_sqrt(FieldDescriptor::reals(), Rational(3)));
  CHECK_FALSE(has_sqrt(FieldDescriptor::reals(), Rational(-3)));
  CHECK(has_sqrt(FieldDescriptor::complexes(), Rational(-3)));
  CHECK(has_sqrt(FieldDescriptor::function_field(sq(5)), Rational(5)));
  CHECK_THROWS_AS(has_sqrt(Q(), Rational(0)), Error);
}

TEST_CASE("has_zeta examples") {
  CHECK(has_zeta(sq(-3), 3));
  CHECK_FALSE(has_zeta(sq(5), 3));
  CHECK(has_zeta(FieldDescriptor::complexes(), 97));
  CHECK(has_zeta(Q(), 2));
  CHECK(has_zeta(FieldDescriptor::reals(), 1));
  CHECK_FALSE(has_zeta(FieldDescriptor::reals(), 4));
}

TEST_CASE("sum of two squares examples") {
  CHECK(minus_one_sum_two_squares(ab(4, {1})));
  CHECK(minus_one_sum_two_squares(ab(3, {1})));
  CHECK_FALSE(minus_one_sum_two_squares(sq(-7)));
  CHECK_FALSE(minus_one_sum_two_squares(sq(-15)));
  CHECK(minus_one_sum_two_squares(sq(-5)));
  CHECK(minus_one_sum_two_squares(sq(-2)));
  CHECK_FALSE(minus_one_sum_two_squares(Q()));
  CHECK_FALSE(minus_one_sum_two_squares(FieldDescriptor::reals()));
  CHECK(minus_one_sum_two_squares(FieldDescriptor::complexes()));
  CHECK_FALSE(minus_one_sum_two_squares(ab(7, {1})));
  CHECK(minus_one_sum_two_squares(ab(5, {1})));
  CHECK_FALSE(minus_one_sum_two_squares(FieldDescriptor::function_field(sq(-7))));
  const CycElt w = CycElt::zeta(3);
  CHECK(pow(w, 4) + w * w == CycElt(-1L));
}

TEST_CASE("no small witness for -1 as a sum of two squares in Q(sqrt(-7))") {
  const CycElt r = sqrt_rational(Rational(-7));
  std::vector<CycElt> xs;
  for (long p = -4; p <= 4; ++p)
    for (long q = -4; q <= 4; ++q)
      for (long d = 1; d <= 2; ++d) xs.push_back(CycElt(make_rational(p, d)) + CycElt(make_rational(q, d)) * r);
  bool found = false;
  std::vector<CycElt> squares;
  for (const auto& x : xs) squares.push_back(x * x);
  for (std::size_t a = 0; a < squares.size() && !found; ++a)
    for (std::size_t b = a; b < squares.size() && !found; ++b)
      if (squares[a] + squares[b] == CycElt(-1L)) found = true;
  CHECK_FALSE(found);
}

TEST_CASE("decomposition data at two") {
  const auto d = decomposition_at_two(sq(-7));
  CHECK(d.prime == 2);
  CHECK(d.local_degree == 1);
  CHECK(decomposition_at_two(sq(-5)).local_degree == 2);
  CHECK(decomposition_at_two(ab(3, {1})).local_degree == 2);
  CHECK(decomposition_at_two(Q()).local_degree == 1);
  CHECK_THROWS_AS(decomposition_at_two(FieldDescriptor::reals()), Error);
  std::uint64_t state = 23;
  for (int k = 0; k < 100; ++k) {
    const auto K = oracle::random_abelian(state, 120);
    const auto D = decomposition_at_two(K);
    CHECK(static_cast<i64>(D.group.size()) % D.local_degree == 0);
    CHECK(D.local_degree == oracle::local_degree_at_two(K));
  }
}

TEST_CASE("2 zeta^2 examples") {
  CHECK(exists_2zeta2_root_of_unity(sq(2)));
  CHECK(exists_2zeta2_root_of_unity(ab(4, {1})));
  CHECK_FALSE(exists_2zeta2_root_of_unity(ab(3, {1})));
  CHECK_FALSE(exists_2zeta2_root_of_unity(Q()));
  CHECK(exists_2zeta2_root_of_unity(sq(-2)));
  CHECK(exists_2zeta2_root_of_unity(FieldDescriptor::reals()));
  CHECK(exists_2zeta2_root_of_unity(FieldDescriptor::complexes()));
  const auto z = two_zeta_squared_witness(ab(4, {1}));
  REQUIRE(z.has_value());
  CHECK(*z == (CycElt(1L) + CycElt::zeta(4)) * CycElt(make_rational(1, 2)));
  CHECK_FALSE(two_zeta_squared_witness(ab(3, {1})).has_value());
}

TEST_CASE("2 zeta^2 witnesses are genuine") {
  std::uint64_t state = 31;
  for (int k = 0; k < 60; ++k) {
    const auto K = oracle::random_abelian(state, 60);
    const auto z = two_zeta_squared_witness(K);
    CHECK(z.has_value() == exists_2zeta2_root_of_unity(K));
    if (!z) continue;
    CHECK(element_in_field(*z, K));
    CHECK(is_root_of_unity(CycElt(2L) * *z * *z));
  }
}

TEST_CASE("has_real_cyclotomic examples") {
  CHECK(has_real_cyclotomic(Q(), 3));
  CHECK(has_real_cyclotomic(Q(), 4));
  CHECK(has_real_cyclotomic(Q(), 6));
  CHECK_FALSE(has_real_cyclotomic(Q(), 5));
  CHECK(has_real_cyclotomic(sq(5), 5));
  CHECK(has_real_cyclotomic(sq(2), 8));
  CHECK(has_real_cyclotomic(FieldDescriptor::reals(), 11));
  CHECK_THROWS_AS(has_real_cyclotomic(Q(), 2), Error);
}

TEST_CASE("property_vector examples") {
  CHECK(property_vector(Q()) == PropertyVector{});
  PropertyVector qi5;
  qi5.sum_two_squares = qi5.has_sqrt5 = qi5.has_2zeta2_rou = true;
  CHECK(property_vector(compositum(ab(4, {1}), sq(5))) == qi5);
  PropertyVector rr;
  rr.has_sqrt5 = rr.has_sqrt2 = rr.has_2zeta2_rou = true;
  CHECK(property_vector(FieldDescriptor::reals()) == rr);
  CHECK(property_vector(FieldDescriptor::function_field(sq(5))) == property_vector(sq(5)));
  CHECK(property_vector(FieldDescriptor::complexes()).realizable());
}

TEST_CASE("fast and element paths agree on random descriptors") {
  std::uint64_t state = 101;
  int disagreements = 0;
  for (int k = 0; k < 200; ++k) {
    const auto K = oracle::random_abelian(state, 120);
    const auto p = property_vector(K);
    const bool same = p == oracle::property_vector(K);
    if (!same) ++disagreements;
    CHECK_MESSAGE(same, K.to_string());
    CHECK(p.realizable());
    for (i64 r = 3; r <= 12; ++r) CHECK(has_real_cyclotomic(K, r) == oracle::fixed_by_field(real_period(r), K));
    for (i64 n : {3L, 4L, 5L, 8L, 12L}) CHECK(has_zeta(K, n) == oracle::has_zeta(K, n));
  }
  CHECK(disagreements == 0);
}

TEST_CASE("predicates are monotone along subfields") {
  std::uint64_t state = 77;
  for (int k = 0; k < 80; ++k) {
    const auto K = oracle::random_abelian(state, 40);
    const auto L = compositum(K, oracle::random_abelian(state, 24));
    const auto a = property_vector(K), b = property_vector(L);
    CHECK((!a.sum_two_squares || b.sum_two_squares));
    CHECK((!a.has_sqrt5 || b.has_sqrt5));
    CHECK((!a.has_omega || b.has_omega));
    CHECK((!a.has_sqrt_minus7 || b.has_sqrt_minus7));
    CHECK((!a.has_2zeta2_rou || b.has_2zeta2_rou));
    CHECK((!a.has_sqrt2 || b.has_sqrt2));
    CHECK((!a.has_sqrt_minus2 || b.has_sqrt_minus2));
    for (i64 r = 3; r <= 9; ++r) CHECK((!has_real_cyclotomic(K, r) || has_real_cyclotomic(L, r)));
  }
}

TEST_CASE("cyclic elements of odd prime order") {
  auto w = pgl3_has_cyclic_of_order(Q(), 3);
  REQUIRE(w.exists);
  CHECK(w.t == 1);
  CHECK(w.i == 2);
  CHECK(w.j == 3);
  CHECK(w.lambda->is_zero());
  CHECK(w.eta->is_zero());
  CHECK_FALSE(pgl3_has_cyclic_of_order(Q(), 5).exists);
  CHECK(pgl3_has_cyclic_of_order(sq(5), 5).exists);
  w = pgl3_has_cyclic_of_order(sq(-7), 7);
  REQUIRE(w.exists);
  CHECK(w.i == 2);
  CHECK(w.j == 4);
  CHECK(*w.lambda == (CycElt(-1L) + sqrt_rational(Rational(-7))) * CycElt(make_rational(1, 2)));
  CHECK_FALSE(pgl3_has_cyclic_of_order(ab(4, {1}), 7).exists);
  CHECK_THROWS_AS(pgl3_has_cyclic_of_order(Q(), 9), Error);
  CHECK_THROWS_AS(pgl3_has_cyclic_of_order(Q(), 2), Error);
}

TEST_CASE("cyclic witnesses are conjugate pairs and exist with roots of unity") {
  std::uint64_t state = 57;
  for (int k = 0; k < 60; ++k) {
    const auto K = oracle::random_abelian(state, 60);
    for (i64 n : {3L, 5L, 7L, 11L, 13L}) {
      const auto w = pgl3_has_cyclic_of_order(K, n);
      if (has_zeta(K, n)) CHECK(w.exists);
      if (!w.exists) continue;
      CHECK(galois_apply(-1, *w.lambda) == *w.eta);
      CHECK(galois_apply(-1, *w.eta) == *w.lambda);
      CHECK(element_in_field(*w.lambda, K));
      CHECK(element_in_field(*w.eta, K));
    }
  }
}
