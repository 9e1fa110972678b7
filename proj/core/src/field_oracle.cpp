#include "jordanum/field_oracle.hpp"

#include <algorithm>

#include "jordanum/error.hpp"

namespace jordanum {

namespace {

int eps8(i64 h) {
  const i64 r = residue(h, 8);
  return (r == 1 || r == 7) ? 1 : -1;
}

}  // namespace

DecompositionData decomposition_at_two(const FieldDescriptor& K) {
  if (!K.is_abelian()) throw Error(Errc::NotRepresentable, "decomposition data needs an abelian field");
  const i64 m = K.conductor();
  i64 m0 = m;
  while (m0 % 2 == 0) m0 /= 2;
  const auto powers_of_two = generated_subgroup({residue(2, m0)}, m0);
  DecompositionData d;
  std::size_t in_h = 0;
  for (i64 h : units(m))
    if (std::binary_search(powers_of_two.begin(), powers_of_two.end(), residue(h, m0))) {
      d.group.push_back(h);
      if (std::binary_search(K.subgroup().begin(), K.subgroup().end(), h)) ++in_h;
    }
  d.local_degree = static_cast<i64>(d.group.size() / in_h);
  return d;
}

bool has_sqrt(const FieldDescriptor& K, const Rational& r) {
  if (r == 0) throw Error(Errc::ZeroRadicand, "sqrt(0) queried");
  switch (K.kind()) {
    case FieldDescriptor::Kind::Complexes: return true;
    case FieldDescriptor::Kind::Reals: return r > 0;
    case FieldDescriptor::Kind::FunctionField: return has_sqrt(K.constants(), r);
    case FieldDescriptor::Kind::Abelian: return is_subfield(quadratic_field(r), K);
  }
  return false;
}

bool has_zeta(const FieldDescriptor& K, i64 n) {
  if (n < 1) throw Error(Errc::BadParameters, "zeta order must be positive");
  switch (K.kind()) {
    case FieldDescriptor::Kind::Complexes: return true;
    case FieldDescriptor::Kind::Reals: return n <= 2;
    case FieldDescriptor::Kind::FunctionField: return has_zeta(K.constants(), n);
    case FieldDescriptor::Kind::Abelian: return is_subfield(cyclotomic_field(n), K);
  }
  return false;
}

bool minus_one_sum_two_squares(const FieldDescriptor& K) {
  switch (K.kind()) {
    case FieldDescriptor::Kind::Complexes: return true;
    case FieldDescriptor::Kind::Reals: return false;
    case FieldDescriptor::Kind::FunctionField: return minus_one_sum_two_squares(K.constants());
    case FieldDescriptor::Kind::Abelian: break;
  }
  if (K.is_real()) return false;
  return decomposition_at_two(K).local_degree % 2 == 0;
}

std::optional<CycElt> two_zeta_squared_witness(const FieldDescriptor& K) {
  const CycElt inv_sqrt2 = inverse(sqrt_rational(2));
  switch (K.kind()) {
    case FieldDescriptor::Kind::Complexes:
    case FieldDescriptor::Kind::Reals: return inv_sqrt2;
    case FieldDescriptor::Kind::FunctionField: return two_zeta_squared_witness(K.constants());
    case FieldDescriptor::Kind::Abelian: break;
  }
  const i64 m = K.conductor();
  const i64 M = lcm(m, 8);
  const auto gens = subgroup_generators(preimage(K.subgroup(), m, M), M);
  // zeta_M^j / sqrt(2) is fixed by sigma_h iff zeta_M^(j(h-1)) = eps8(h)
  for (i64 j = 0; j < M; ++j) {
    bool fixed = true;
    for (i64 h : gens) {
      const i64 e = residue(j * (h - 1), M) % M;
      if (e != (eps8(h) == 1 ? 0 : M / 2)) {
        fixed = false;
        break;
      }
    }
    if (fixed) return normalize_level(CycElt::zeta(M, j) * inv_sqrt2);
  }
  return std::nullopt;
}

bool exists_2zeta2_root_of_unity(const FieldDescriptor& K) { return two_zeta_squared_witness(K).has_value(); }

bool has_real_cyclotomic(const FieldDescriptor& K, i64 r) {
  if (r < 3) throw Error(Errc::OutOfRange, "real cyclotomic subfield needs r >= 3");
  switch (K.kind()) {
    case FieldDescriptor::Kind::Complexes:
    case FieldDescriptor::Kind::Reals: return true;
    case FieldDescriptor::Kind::FunctionField: return has_real_cyclotomic(K.constants(), r);
    case FieldDescriptor::Kind::Abelian: break;
  }
  return is_subfield(FieldDescriptor::abelian(r, {1, r - 1}), K);
}

bool PropertyVector::realizable() const {
  if (has_omega && !sum_two_squares) return false;
  if (has_sqrt_minus2 && !sum_two_squares) return false;
  if ((has_sqrt2 || has_sqrt_minus2) && !has_2zeta2_rou) return false;
  return true;
}

std::string PropertyVector::to_string() const {
  auto b = [](bool x) { return x ? "1" : "0"; };
  return std::string("s2=") + b(sum_two_squares) + " sqrt5=" + b(has_sqrt5) + " omega=" + b(has_omega) +
         " sqrt-7=" + b(has_sqrt_minus7) + " 2zeta2=" + b(has_2zeta2_rou) + " sqrt2=" + b(has_sqrt2) +
         " sqrt-2=" + b(has_sqrt_minus2);
}

PropertyVector property_vector(const FieldDescriptor& K) {
  PropertyVector p;
  p.sum_two_squares = minus_one_sum_two_squares(K);
  p.has_sqrt5 = has_sqrt(K, 5);
  p.has_omega = has_zeta(K, 3);
  p.has_sqrt_minus7 = has_sqrt(K, -7);
  p.has_2zeta2_rou = exists_2zeta2_root_of_unity(K);
  p.has_sqrt2 = has_sqrt(K, 2);
  p.has_sqrt_minus2 = has_sqrt(K, -2);
  return p;
}

CyclicWitness pgl3_has_cyclic_of_order(const FieldDescriptor& K, i64 n) {
  if (n < 3 || !is_prime(n)) throw Error(Errc::NotOddPrime, std::to_string(n) + " is not an odd prime");
  for (i64 t = 1; t < n; ++t)
    for (i64 i = 2; i <= n; ++i)
      for (i64 j = i + 1; j <= n; ++j) {
        if ((1 + i + j) % n != 0) continue;
        const Rational one(1);
        CycElt lambda = CycElt::from_terms(n, {{t, one}, {t * i, one}, {t * j, one}});
        if (!element_in_field(lambda, K)) continue;
        CycElt eta = CycElt::from_terms(n, {{-t, one}, {-t * i, one}, {-t * j, one}});
        if (!element_in_field(eta, K)) continue;
        CyclicWitness w;
        w.exists = true;
        w.t = t;
        w.i = i;
        w.j = j;
        w.lambda = normalize_level(lambda);
        w.eta = normalize_level(eta);
        return w;
      }
  return {};
}

}  // namespace jordanum
