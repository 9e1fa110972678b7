#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jordanum/cyclotomic.hpp"
#include "jordanum/field.hpp"

namespace jordanum {

struct DecompositionData {
  i64 prime = 2;
  std::vector<i64> group;  // D_2 inside (Z/m)^x
  i64 local_degree = 1;
};

// Decomposition data at 2 of an abelian field; throws NotRepresentable
// otherwise.
DecompositionData decomposition_at_two(const FieldDescriptor& K);

bool has_sqrt(const FieldDescriptor& K, const Rational& r);
bool has_zeta(const FieldDescriptor& K, i64 n);
bool minus_one_sum_two_squares(const FieldDescriptor& K);

// Some zeta in K with 2 zeta^2 a root of unity, chosen as nu / sqrt(2) with nu
// the first root of unity zeta_M^j (M = lcm(m, 8), j = 0, 1, ...) that
// works. nullopt when none exists. For RR, CC: 1/sqrt(2).
std::optional<CycElt> two_zeta_squared_witness(const FieldDescriptor& K);
bool exists_2zeta2_root_of_unity(const FieldDescriptor& K);

// K contains zeta_r + zeta_r^-1 (r >= 3).
bool has_real_cyclotomic(const FieldDescriptor& K, i64 r);

struct PropertyVector {
  bool sum_two_squares = false;
  bool has_sqrt5 = false;
  bool has_omega = false;
  bool has_sqrt_minus7 = false;
  bool has_2zeta2_rou = false;
  bool has_sqrt2 = false;
  bool has_sqrt_minus2 = false;

  friend bool operator==(const PropertyVector&, const PropertyVector&) = default;
  // omega => s2, sqrt(-2) => s2, sqrt(+-2) => 2zeta2.
  bool realizable() const;
  std::string to_string() const;
};

PropertyVector property_vector(const FieldDescriptor& K);

struct CyclicWitness {
  bool exists = false;
  i64 t = 0, i = 0, j = 0;
  std::optional<CycElt> lambda;
  std::optional<CycElt> eta;
};

// PGL_3(K) has an element of odd prime order n iff some alpha = zeta_n^t and
// 1 < i < j <= n with 1 + i + j = 0 mod n give both
//   lambda = alpha + alpha^i + alpha^j  and  eta = conj(lambda)
// in K. Returns the lexicographically first (t, i, j). Throws NotOddPrime.
CyclicWitness pgl3_has_cyclic_of_order(const FieldDescriptor& K, i64 n);

}  // namespace jordanum
