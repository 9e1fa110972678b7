#include "jordanum/constructions.hpp"

#include "jordanum/error.hpp"
#include "jordanum/field_oracle.hpp"
#include "jordanum/sum_of_squares.hpp"

namespace jordanum {

namespace {

using M = ExactMatrix;

const CycElt kHalf(Rational(1, 2));

CycElt power(const CycElt& a, i64 e) { return e >= 0 ? pow(a, e) : pow(inverse(a), -e); }

M embed3(const M& g) {
  const CycElt z(0L);
  return M{{g(0, 0), g(0, 1), z}, {g(1, 0), g(1, 1), z}, {z, z, CycElt(1L)}};
}

void require_two_squares(const CycElt& a, const CycElt& b) {
  if (a * a + b * b != CycElt(-1L)) throw Error(Errc::BadParameters, "need a^2 + b^2 = -1");
}

// Smallest abelian field containing xs: the fixed field of their stabilizer.
FieldDescriptor field_of(const std::vector<CycElt>& xs) {
  i64 level = 1;
  for (const auto& x : xs) level = lcm(level, normalize_level(x).level());
  std::vector<i64> H;
  for (i64 h : units(level)) {
    bool fixed = true;
    for (const auto& x : xs) fixed = fixed && galois_apply(h, x.lifted(level)) == x.lifted(level);
    if (fixed) H.push_back(h);
  }
  return FieldDescriptor::abelian(level, H);
}

M icosahedral_pair(const CycElt& a, const CycElt& b, int which) {
  const CycElt tau = (CycElt(1L) + sqrt_rational(Rational(5))) * kHalf;
  const M I{{a, b}, {b, -a}}, J{{0L, 1L}, {-1L, 0L}}, K = I * J, E = M::identity_matrix(2);
  if (which == 0) return (E + I + J + K) * kHalf;
  return (E * tau + I * (tau - CycElt(1L)) + J) * kHalf;
}

M s3_rotation() { return M{{0L, 1L}, {-1L, -1L}}; }
M s3_reflection() { return M{{0L, 1L}, {1L, 0L}}; }

M hessian_T() { return M{{0L, 1L, 0L}, {0L, 0L, 1L}, {1L, 0L, 0L}}; }
M hessian_S() {
  const CycElt w = CycElt::zeta(3);
  return M::diagonal({CycElt(1L), w, w * w});
}
M hessian_V() {
  const CycElt w = CycElt::zeta(3), w2 = w * w;
  return M{{1L, 1L, 1L}, {1L, w, w2}, {1L, w2, w}} * inverse(sqrt_rational(Rational(-3)));
}

std::array<M, 3> klein_generators() {
  auto z = [](i64 k) { return CycElt::zeta(7, k); };
  const CycElt scale = inverse(sqrt_rational(Rational(-7)));
  const i64 e[3] = {1, 4, 2};
  std::vector<CycElt> r(9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i * 3 + j] = (z(e[(i + j) % 3]) - z(-e[(i + j) % 3])) * scale;
  return {M::diagonal({z(1), z(2), z(4)}), hessian_T(), M(3, r)};
}

M galois_matrix(i64 h, const M& g) {
  std::vector<CycElt> e;
  for (const auto& x : g.entries()) e.push_back(galois_apply(h, x.lifted(g.level())));
  return M(g.dim(), e);
}

M permutation_matrix(const std::array<int, 3>& p) {
  std::vector<CycElt> e(9, CycElt(0L));
  for (int i = 0; i < 3; ++i) e[static_cast<std::size_t>(i * 3 + p[static_cast<std::size_t>(i)])] = CycElt(1L);
  return M(3, e);
}

WitnessRecipe recipe(std::string name, AmbientGroup ambient, FieldDescriptor field, std::vector<M> gens,
                     bool projective, std::optional<i64> order, i64 jordan) {
  return WitnessRecipe{std::move(name), ambient, std::move(field), std::move(gens), projective, order, jordan, false};
}

std::optional<std::pair<CycElt, CycElt>> dic3_parameters(const FieldDescriptor& K) {
  // p^2 + pq + q^2 = -1 iff (2p + q)^2 + 3q^2 = -4; take 2p + q = u sqrt(-d).
  const i64 bound = 4 * std::max<i64>(K.conductor(), 1);
  for (i64 d = 1; d <= bound; ++d) {
    if (squarefree_part(Rational(d)).squarefree != d || !has_sqrt(K, Rational(-d))) continue;
    for (long den = 1; den <= 12; ++den)
      for (long num = 0; num <= 24; ++num) {
        const Rational q = make_rational(num, den);
        const Rational u2 = (3 * q * q + 4) / Rational(d);
        const auto sf = squarefree_part(u2);
        if (sf.squarefree != 1) continue;
        const CycElt s = sqrt_rational(u2) * sqrt_rational(Rational(-d));
        const CycElt p = (s - CycElt(q)) * kHalf;
        return std::make_pair(p, CycElt(q));
      }
  }
  return std::nullopt;
}

}  // namespace

ClosedGroup<ProjMatrix> project_to_pgl(const ClosedGroup<ExactMatrix>& g, std::size_t cap) {
  std::vector<ProjMatrix> gens;
  for (Index k : g.generators) gens.emplace_back(g.elements[k]);
  return close(gens, cap);
}

FiniteGroup recipe_group(const WitnessRecipe& r, std::size_t cap) {
  if (r.projective) {
    std::vector<ProjMatrix> gens;
    for (const auto& g : r.generators) gens.emplace_back(g);
    return close(gens, cap).group;
  }
  return close(r.generators, cap).group;
}

RecipeCheck verify_recipe(const WitnessRecipe& r, std::size_t cap) {
  RecipeCheck c;
  c.fields_ok = true;
  for (const auto& g : r.generators)
    for (const auto& x : g.entries())
      if (!element_in_field(x, r.field_required)) c.fields_ok = false;
  const FiniteGroup g = recipe_group(r, cap);
  c.closure_order = static_cast<i64>(g.order());
  c.bruteforce_jordan = jordan_bruteforce(g);
  c.fingerprint = fingerprint(g);
  const bool order_ok = !r.expected_order || *r.expected_order == c.closure_order;
  const bool jordan_ok =
      r.jordan_bound_only ? c.bruteforce_jordan <= r.expected_jordan : c.bruteforce_jordan == r.expected_jordan;
  c.matched = c.fields_ok && order_ok && jordan_ok;
  return c;
}

PlatonicTriple pgl2_platonic(const CycElt& a, const CycElt& b) {
  require_two_squares(a, b);
  const CycElt one(1L);
  M A{{-a, b}, {b, a}};
  M B = M{{-one + a + b, -one + a - b}, {one + a - b, -one - a - b}} * kHalf;
  M C{{-a + one, b}, {b, a + one}};
  return {A, B, C};
}

std::array<M, 2> gl2_s4_lift(const CycElt& a, const CycElt& b, const CycElt& zeta) {
  const auto t = pgl2_platonic(a, b);
  const CycElt d = CycElt(2L) * zeta * zeta;
  if (d.is_zero()) throw Error(Errc::BadParameters, "zeta must be nonzero");
  const i64 M_ = normalize_level(d).level();
  bool root = false;
  for (i64 k = 0; k < 2 * M_ && !root; ++k) root = d == CycElt::zeta(2 * M_, k);
  if (!root) throw Error(Errc::BadParameters, "2 zeta^2 is not a root of unity");
  return {t.B, t.C * zeta};
}

ExactMatrix lift_to_unimodular(const ExactMatrix& A, i64 r) {
  const i64 n = static_cast<i64>(A.dim());
  if (r < 1 || gcd(r, n) != 1) throw Error(Errc::NotCoprime, "r must be positive and coprime to the dimension");
  const M Ar = pow(A, r);
  if (!Ar.is_scalar()) throw Error(Errc::NotProjectivelyCyclic, "A^r is not scalar");
  const CycElt a = Ar(0, 0);
  const i64 u = r == 1 ? 0 : inverse_mod(residue(n, r), r);
  const i64 v = (1 - u * n) / r;
  return A * inverse(power(A.det(), u) * power(a, v));
}

std::vector<WitnessRecipe> hessian_tower() {
  const FieldDescriptor K = cyclotomic_field(3);
  const M S = hessian_S(), T = hessian_T(), V = hessian_V();
  const M U = M::diagonal({CycElt(1L), CycElt(1L), CycElt::zeta(3)});
  return {
      recipe("Hessian E", AmbientGroup::PGL3, K, {S, T, V}, true, 36, 4),
      recipe("Hessian F", AmbientGroup::PGL3, K, {S, T, V, U * V * U.inverse()}, true, 72, 8),
      recipe("Hessian G", AmbientGroup::PGL3, K, {S, T, V, U}, true, 216, 24),
  };
}

std::vector<WitnessRecipe> hessian_tower_sl3() {
  const FieldDescriptor K = cyclotomic_field(9);
  const CycElt eps = CycElt::zeta(9, 2);
  const M S = hessian_S(), T = hessian_T(), V = hessian_V();
  const M U = M::diagonal({eps, eps, eps * CycElt::zeta(3)});
  return {
      recipe("Hessian E in SL3", AmbientGroup::PGL3, K, {S, T, V}, false, 108, 36),
      recipe("Hessian F in SL3", AmbientGroup::PGL3, K, {S, T, V, U * V * U.inverse()}, false, 216, 72),
      recipe("Hessian G in SL3", AmbientGroup::PGL3, K, {S, T, V, U}, false, 648, 216),
  };
}

namespace {
std::pair<M, M> a5_xy() {
  const CycElt s5 = sqrt_rational(Rational(5));
  const CycElt sig = (CycElt(1L) - s5) * kHalf, tau = (CycElt(1L) + s5) * kHalf;
  const CycElt one(1L);
  M x{{-sig, -tau, -one}, {-tau, -one, -sig}, {one, sig, tau}};
  M y{{one, sig, tau}, {sig, tau, one}, {tau, one, sig}};
  return {x, y};
}
}  // namespace

WitnessRecipe pgl3_a5() {
  auto [x, y] = a5_xy();
  return recipe("A5", AmbientGroup::PGL3, quadratic_field(Rational(5)), {x, y}, true, 60, 60);
}

WitnessRecipe pgl3_a6() {
  auto [x, y] = a5_xy();
  const CycElt w = CycElt::zeta(3);
  const M z{{1L, 0L, 0L}, {0L, 0L, w}, {0L, w * w, 0L}};
  const M b = y * pow(z * x, 4);
  return recipe("A6", AmbientGroup::PGL3, compositum(quadratic_field(Rational(5)), cyclotomic_field(3)), {y, b}, true,
                360, 360);
}

WitnessRecipe pgl3_klein() {
  auto g = klein_generators();
  return recipe("PSL2(F7)", AmbientGroup::PGL3, cyclotomic_field(7), {g[0], g[1], g[2]}, true, 168, 168);
}

WitnessRecipe pgl3_klein_descended() {
  // sigma: zeta_7 -> zeta_7^2 generates Gal(Q(zeta_7)/Q(sqrt(-7))). Find a
  // permutation Q with sigma(g) = Q g Q^-1, then B = Y + sigma(Y) Q + sigma^2(Y) Q^2
  // satisfies sigma(B) = B Q^-1, so B g B^-1 is fixed by sigma.
  const auto g = klein_generators();
  std::optional<M> Q;
  std::array<int, 3> p{0, 1, 2};
  do {
    const M P = permutation_matrix(p);
    bool ok = true;
    for (const auto& x : g) ok = ok && galois_matrix(2, x) == P * x * P.inverse();
    if (ok && (P * P * P).is_identity()) Q = P;
  } while (!Q && std::next_permutation(p.begin(), p.end()));
  if (!Q) throw Error(Errc::NoWitness, "internal: no permutation intertwines the Galois action");
  const FieldDescriptor K = quadratic_field(Rational(-7));
  for (i64 k = 1; k < 7; ++k) {
    const CycElt z = CycElt::zeta(7, k);
    const M Y{{z, 2L, 0L}, {3L, z * z * z, 1L}, {1L, -1L, z + CycElt(5L)}};
    const M Y1 = galois_matrix(2, Y), Y2 = galois_matrix(2, Y1);
    const M B = Y + Y1 * *Q + Y2 * *Q * *Q;
    if (B.det().is_zero()) continue;
    const M Bi = B.inverse();
    std::vector<M> gens;
    for (const auto& x : g) gens.push_back(ProjMatrix(B * x * Bi).matrix());
    return recipe("PSL2(F7)", AmbientGroup::PGL3, K, gens, true, 168, 168);
  }
  throw Error(Errc::NoWitness, "internal: descent matrix is singular");
}

WitnessRecipe pgl3_s4_permutation_rep() {
  const M t{{-1L, 1L, 0L}, {0L, 1L, 0L}, {0L, 0L, 1L}};
  const M c{{0L, 0L, -1L}, {1L, 0L, -1L}, {0L, 1L, -1L}};
  return recipe("S4 permutation representation", AmbientGroup::PGL3, FieldDescriptor::rationals(), {t, c}, true, 24,
                6);
}

std::vector<WitnessRecipe> imprimitive_recipes(const CycElt& a, const CycElt& b, const CycElt& c) {
  const CycElt abc = a * b * c;
  if (abc.is_zero()) throw Error(Errc::BadParameters, "R_{a,b,c} needs abc != 0");
  const bool linear = abc == CycElt(-1L);
  const CycElt z(0L);
  const M R{{a, z, z}, {z, z, b}, {z, c, z}};
  const FieldDescriptor K = compositum(cyclotomic_field(3), field_of({a, b, c}));
  auto C = recipe("imprimitive type C", AmbientGroup::PGL3, K, {hessian_S(), hessian_T()}, !linear,
                  linear ? 27 : 9, 3);
  auto D = recipe("imprimitive type D", AmbientGroup::PGL3, K, {hessian_S(), hessian_T(), R}, !linear,
                  std::nullopt, 6);
  C.jordan_bound_only = D.jordan_bound_only = true;
  return {C, D};
}

WitnessRecipe dicyclic(i64 n) {
  if (n < 2) throw Error(Errc::BadParameters, "dicyclic needs n >= 2");
  const CycElt z = CycElt::zeta(2 * n);
  return recipe("dicyclic(" + std::to_string(n) + ")", AmbientGroup::SL2, cyclotomic_field(2 * n),
                {M::diagonal({z, inverse(z)}), M{{0L, 1L}, {-1L, 0L}}}, false, 4 * n, 2);
}

WitnessRecipe binary_icosahedral(const CycElt& a, const CycElt& b) {
  require_two_squares(a, b);
  const FieldDescriptor K = compositum(quadratic_field(Rational(5)), field_of({a, b}));
  return recipe("binary icosahedral", AmbientGroup::SL2, K, {icosahedral_pair(a, b, 0), icosahedral_pair(a, b, 1)},
                false, 120, 60);
}

WitnessRecipe binary_icosahedral() { return binary_icosahedral(CycElt::zeta(4), CycElt(0L)); }

std::vector<WitnessRecipe> sl2_central_extensions(i64 n) {
  if (n < 3) throw Error(Errc::BadParameters, "n must be at least 3");
  return {dicyclic(n), binary_icosahedral()};
}

ExactMatrix cyclic_witness_matrix(const CycElt& lambda, const CycElt& eta) {
  const CycElt one(1L), z(0L);
  return M{{lambda + one, one, -lambda - eta - CycElt(2L)}, {one, z, z}, {one, z, -one}};
}

namespace {

FieldDescriptor ambient_constants(const FieldDescriptor& K) {
  return K.kind() == FieldDescriptor::Kind::FunctionField ? K.constants() : K;
}

bool contains(const FieldDescriptor& K, const FieldDescriptor& L) {
  switch (K.kind()) {
    case FieldDescriptor::Kind::Complexes: return true;
    case FieldDescriptor::Kind::Reals: return L.is_real();
    default: return is_subfield(L, K);
  }
}

WitnessRecipe gl2_family(const FieldDescriptor& K, AmbientGroup amb, i64 value) {
  const bool pgl = amb == AmbientGroup::PGL2;
  if (value == 2) {
    if (amb != AmbientGroup::SL2)
      return recipe(pgl ? "D3" : "S3", amb, FieldDescriptor::rationals(), {s3_rotation(), s3_reflection()}, pgl, 6, 2);
    if (K.is_real())
      throw Error(Errc::NoWitness,
                  "finite subgroups of SL2 over a real field are cyclic, so no subgroup has Jordan constant 2");
    auto pq = dic3_parameters(K);
    if (!pq) throw Error(Errc::NoWitness, "no p, q in " + K.to_string() + " with p^2 + pq + q^2 = -1 found");
    const M a6{{1L, -1L}, {1L, 0L}};
    const M b = s3_reflection() * (M::identity_matrix(2) * pq->first + a6 * pq->second);
    return recipe("dicyclic(3)", amb, field_of({pq->first, pq->second}), {a6, b}, false, 12, 2);
  }
  const auto [a, b] = sum_two_squares_witness(K);
  const FieldDescriptor ab = field_of({a, b});
  if (value == 60) {
    auto r = binary_icosahedral(a, b);
    r.ambient = amb;
    if (pgl) {
      r.name = "A5";
      r.projective = true;
      r.expected_order = 60;
    }
    return r;
  }
  const auto t = pgl2_platonic(a, b);
  if (value == 12) return recipe("binary tetrahedral", amb, ab, {t.A, t.B}, false, 24, 12);
  if (value == 6 && pgl) return recipe("S4", amb, ab, {t.B, t.C}, true, 24, 6);
  if (value == 24) {
    CycElt zeta;
    if (amb == AmbientGroup::SL2) {
      if (!has_sqrt(K, Rational(2)))
        throw Error(Errc::NoWitness, "a lift of C with determinant 1 needs sqrt(2) in " + K.to_string());
      zeta = inverse(sqrt_rational(Rational(2)));
    } else if (K.kind() == FieldDescriptor::Kind::Complexes) {
      zeta = inverse(sqrt_rational(Rational(2)));
    } else {
      auto z = two_zeta_squared_witness(K);
      if (!z) throw Error(Errc::NoWitness, "no zeta with 2 zeta^2 a root of unity in " + K.to_string());
      zeta = *z;
    }
    const auto g = gl2_s4_lift(a, b, zeta);
    const i64 order = amb == AmbientGroup::SL2 ? 48 : 0;
    auto r = recipe(amb == AmbientGroup::SL2 ? "binary octahedral" : "GL2 lift of S4", amb,
                    compositum(ab, field_of({zeta})), {g[0], g[1]}, false, std::nullopt, 24);
    if (order) r.expected_order = order;
    return r;
  }
  throw Error(Errc::NoWitness, "no witness for value " + std::to_string(value));
}

WitnessRecipe pgl3_family(const FieldDescriptor& K, const JordanAnswer& ans) {
  switch (ans.value) {
    case 360: return pgl3_a6();
    case 168: return pgl3_klein_descended();
    case 60: return pgl3_a5();
    case 6: return pgl3_s4_permutation_rep();
    default: break;
  }
  if (ans.branch == "PGL3:(iv)(a)") return hessian_tower()[2];
  const i64 gl2_value = ans.value == 24 ? 24 : 12;
  auto r = gl2_family(K, AmbientGroup::GL2, gl2_value);
  for (auto& g : r.generators) g = embed3(g);
  r.ambient = AmbientGroup::PGL3;
  r.projective = true;
  return r;
}

}  // namespace

WitnessRecipe witness_for_field(const FieldDescriptor& field, AmbientGroup ambient) {
  const FieldDescriptor K = ambient_constants(field);
  const JordanAnswer ans = jordan(ambient, property_vector(field));
  WitnessRecipe r = ambient == AmbientGroup::PGL3 ? pgl3_family(K, ans) : gl2_family(K, ambient, ans.value);
  if (r.expected_jordan != ans.value)
    throw Error(Errc::NoWitness, "recipe " + r.name + " does not match the value " + std::to_string(ans.value));
  if (!contains(K, r.field_required))
    throw Error(Errc::NoWitness, "recipe field " + r.field_required.to_string() + " is not inside " + K.to_string());
  return r;
}

}  // namespace jordanum
