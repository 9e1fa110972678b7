#include "doctest.h"
#include "jordanum/error.hpp"
#include "jordanum/matrix.hpp"
#include "jordanum/permutation.hpp"

using namespace jordanum;
using M = ExactMatrix;

TEST_CASE("determinant, adjugate and inverse") {
  const M a{{1L, 2L}, {3L, 4L}};
  CHECK(a.det() == CycElt(-2L));
  CHECK(a * a.inverse() == M::identity_matrix(2));
  const CycElt w = CycElt::zeta(3);
  const M b{{1L, w, 0L}, {0L, 2L, w * w}, {1L, 0L, 1L}};
  CHECK(b * b.inverse() == M::identity_matrix(3));
  CHECK(b * b.adjugate() == M::scalar(3, b.det()));
  CHECK_THROWS_AS((M{{1L, 2L}, {2L, 4L}}).inverse(), Error);
}

TEST_CASE("mixed levels are lifted to a common level") {
  const M s = M::diagonal({CycElt(1L), CycElt::zeta(3), CycElt::zeta(3, 2)});
  const M t{{0L, 1L, 0L}, {0L, 0L, 1L}, {1L, 0L, 0L}};
  CHECK((s * t).level() == 3);
  CHECK(matrix_order(t) == 3);
  CHECK(matrix_order(s) == 3);
  CHECK(matrix_order(M{{1L, 1L}, {0L, 1L}}, 50) == 0);
}

TEST_CASE("characteristic polynomial") {
  const M a{{2L, 1L}, {0L, 3L}};
  const auto c = charpoly(a);
  CHECK(c[0] == CycElt(6L));
  CHECK(c[1] == CycElt(-5L));
  CHECK(c[2] == CycElt(1L));
  const M t{{0L, 1L, 0L}, {0L, 0L, 1L}, {1L, 0L, 0L}};
  const auto ct = charpoly(t);
  CHECK(ct[0] == CycElt(-1L));
  CHECK(ct[1] == CycElt(0L));
  CHECK(ct[2] == CycElt(0L));
}

TEST_CASE("projective canonical form is scalar invariant") {
  const CycElt w = CycElt::zeta(3);
  const M a{{0L, 2L, 1L}, {w, 1L, 0L}, {0L, 0L, 3L}};
  CHECK(ProjMatrix(a) == ProjMatrix(a * w));
  CHECK(ProjMatrix(a) == ProjMatrix(a * CycElt(Rational(-7, 3))));
  CHECK(ProjMatrix(a).matrix()(0, 1) == CycElt(1L));
  CHECK(ProjMatrix(M::scalar(3, w)).is_identity());
  const ProjMatrix p(a);
  CHECK((p * p.inverse()).is_identity());
}

TEST_CASE("permutations") {
  const auto c = Permutation::from_cycles(4, {{1, 2, 3, 4}});
  const auto t = Permutation::from_cycles(4, {{1, 2}});
  CHECK((c * c * c * c) == c.identity());
  CHECK(c.inverse() * c == c.identity());
  CHECK_FALSE(c.is_even());
  CHECK((c * t).is_even());
  CHECK(symmetric_generators(5).size() >= 2);
}
