#include "jordanum/sum_of_squares.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>

#include "jordanum/error.hpp"
#include "jordanum/field_oracle.hpp"

namespace jordanum {

namespace {

using Real = long double;
using Complex = std::complex<Real>;

bool is_witness(const CycElt& a, const CycElt& b) { return a * a + b * b == CycElt(-1L); }

TwoSquares make(CycElt a, CycElt b, std::string method) {
  if (!is_witness(a, b)) throw Error(Errc::NoWitnessFound, "internal: " + method + " produced a bad pair");
  return TwoSquares{normalize_level(a), normalize_level(b), std::move(method)};
}

// (p^2 + q^2)(r^2 + s^2) = (pr - qs)^2 + (ps + qr)^2
std::pair<CycElt, CycElt> brahmagupta(const std::pair<CycElt, CycElt>& x, const std::pair<CycElt, CycElt>& y) {
  return {x.first * y.first - x.second * y.second, x.first * y.second + x.second * y.first};
}

std::optional<TwoSquares> via_quadratic_subfield(const FieldDescriptor& K) {
  const i64 bound = 4 * K.conductor();
  for (i64 d = 1; d <= bound; ++d) {
    if (d % 8 == 7 || squarefree_part(Rational(d)).squarefree != d) continue;
    if (!has_sqrt(K, Rational(-d))) continue;
    // d = t^2 + x^2 + y^2 with x > 0
    for (i64 x = static_cast<i64>(std::sqrt(static_cast<double>(d))) + 1; x >= 1; --x)
      for (i64 y = 0; y <= x; ++y) {
        const i64 rest = d - x * x - y * y;
        if (rest < 0) continue;
        const i64 t = static_cast<i64>(std::llround(std::sqrt(static_cast<double>(rest))));
        if (t * t != rest) continue;
        const Rational n2(x * x + y * y);
        const Rational u = Rational(x) / n2, z = Rational(y) / n2;
        const CycElt root = sqrt_rational(Rational(-d));
        CycElt a = root * CycElt(u) + CycElt(Rational(-t) * z);
        CycElt b = CycElt(Rational(t) * u) + root * CycElt(z);
        return make(a, b, "quadratic subfield Q(sqrt(-" + std::to_string(d) + "))");
      }
  }
  return std::nullopt;
}

std::optional<std::pair<CycElt, CycElt>> cyclotomic_product(i64 n) {
  // prod_{j<k} (1 + alpha^(2^j)) = -alpha^-1 when 2^k = -1 mod n
  i64 k = 0, p = 1;
  do {
    p = residue(p * 2, n);
    ++k;
    if (k > n) return std::nullopt;
  } while (p != n - 1);
  const CycElt alpha = CycElt::zeta(n);
  const CycElt root = CycElt::zeta(n, (n + 1) / 2);  // root^2 = alpha
  std::pair<CycElt, CycElt> acc{CycElt(1L), CycElt(0L)};
  CycElt gamma = root;
  for (i64 j = 0; j < k; ++j) {
    acc = brahmagupta(acc, {CycElt(1L), gamma});
    gamma = gamma * gamma;
  }
  return std::make_pair(root * acc.first, root * acc.second);
}

std::optional<TwoSquares> via_roots_of_unity(const FieldDescriptor& K) {
  for (i64 n : divisors(K.conductor())) {
    if (n < 3 || n % 2 == 0 || !has_zeta(K, n)) continue;
    if (auto ab = cyclotomic_product(n)) return make(ab->first, ab->second, "zeta_" + std::to_string(n) + " product");
  }
  return std::nullopt;
}

Complex evaluate(const CycElt& a, i64 e) {
  const i64 M = a.level();
  Complex s = 0;
  for (std::size_t k = 0; k < a.coeffs().size(); ++k) {
    if (a.coeffs()[k] == 0) continue;
    const Real ang = 2 * std::numbers::pi_v<Real> * static_cast<Real>(residue(e * static_cast<i64>(k), M)) /
                     static_cast<Real>(M);
    s += static_cast<Real>(a.coeffs()[k].get_d()) * Complex(std::cos(ang), std::sin(ang));
  }
  return s;
}

std::optional<Rational> reconstruct(Real x, long max_den) {
  Rational best;
  Real best_err = 1;
  for (long den = 1; den <= max_den; ++den) {
    const Real num = std::round(x * den);
    const Real err = std::fabs(x - num / den);
    if (err < best_err) {
      best_err = err;
      best = make_rational(static_cast<long>(num), den);
    }
    if (err < 1e-9L * std::max<Real>(1, std::fabs(x))) return best;
  }
  return std::nullopt;
}

// Solves E c = v by Gaussian elimination with partial pivoting.
std::vector<Real> solve(std::vector<std::vector<Real>> E, std::vector<Real> v) {
  const std::size_t n = v.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::fabs(E[r][c]) > std::fabs(E[p][c])) p = r;
    std::swap(E[p], E[c]);
    std::swap(v[p], v[c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      const Real f = E[r][c] / E[c][c];
      for (std::size_t k = c; k < n; ++k) E[r][k] -= f * E[c][k];
      v[r] -= f * v[c];
    }
  }
  std::vector<Real> x(n);
  for (std::size_t c = n; c-- > 0;) {
    Real s = v[c];
    for (std::size_t k = c + 1; k < n; ++k) s -= E[c][k] * x[k];
    x[c] = s / E[c][c];
  }
  return x;
}

// K = K+(theta) with theta^2 = -beta, beta totally positive in K+. Looks for
// p, q in K+ with p^2 + q^2 = beta, so that (p/theta)^2 + (q/theta)^2 = -1.
std::optional<TwoSquares> via_real_subfield_search(const FieldDescriptor& K) {
  const i64 m = K.conductor();
  std::vector<i64> Hplus = K.subgroup();
  for (i64 h : K.subgroup()) Hplus.push_back(residue(-h, m));
  Hplus = generated_subgroup(Hplus, m);

  std::vector<i64> embeddings;
  std::vector<bool> covered(static_cast<std::size_t>(m), false);
  for (i64 u : units(m)) {
    if (covered[static_cast<std::size_t>(u)]) continue;
    embeddings.push_back(u);
    for (i64 h : Hplus) covered[static_cast<std::size_t>(residue(u * h, m))] = true;
  }
  const std::size_t n = embeddings.size();
  if (n > 8) return std::nullopt;

  // primitive element gamma of K+ with distinct real embeddings
  std::optional<CycElt> gamma;
  std::vector<Real> gvals(n);
  for (i64 j = 1; j < m && !gamma; ++j) {
    std::vector<std::pair<i64, Rational>> terms;
    for (i64 h : Hplus) terms.emplace_back(j * h, Rational(1));
    CycElt g = CycElt::from_terms(m, terms);
    for (std::size_t k = 0; k < n; ++k) gvals[k] = evaluate(g, embeddings[k]).real();
    bool distinct = true;
    for (std::size_t a = 0; a < n && distinct; ++a)
      for (std::size_t b = 0; b < a; ++b)
        if (std::fabs(gvals[a] - gvals[b]) < 1e-6L) distinct = false;
    if (distinct) gamma = g;
  }
  if (!gamma) return std::nullopt;

  std::optional<CycElt> theta;
  for (i64 j = 1; j < m && !theta; ++j) {
    std::vector<std::pair<i64, Rational>> terms;
    for (i64 h : K.subgroup()) terms.emplace_back(j * h, Rational(1));
    CycElt g = CycElt::from_terms(m, terms);
    CycElt t = g - conjugate(g);
    if (!t.is_zero()) theta = t;
  }
  if (!theta) return std::nullopt;
  const CycElt beta = -(*theta * *theta);

  std::vector<CycElt> basis{CycElt(1L).lifted(m)};
  for (std::size_t k = 1; k < n; ++k) basis.push_back(basis.back() * *gamma);
  std::vector<std::vector<Real>> E(n, std::vector<Real>(n));
  std::vector<Real> beta_vals(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t p = 0; p < n; ++p) E[k][p] = std::pow(gvals[k], static_cast<Real>(p));
    beta_vals[k] = evaluate(beta, embeddings[k]).real();
  }

  const std::vector<Rational> values = {Rational(0), Rational(1), Rational(-1), Rational(1, 2),
                                        Rational(-1, 2), Rational(2), Rational(-2)};
  const std::size_t nv = n <= 5 ? values.size() : 3;
  std::vector<std::vector<std::size_t>> tuples;
  std::vector<std::size_t> cur(n, 0);
  for (;;) {
    tuples.push_back(cur);
    std::size_t k = 0;
    while (k < n && ++cur[k] == nv) cur[k++] = 0;
    if (k == n) break;
  }
  auto weight = [](const std::vector<std::size_t>& t) {
    std::size_t w = 0;
    for (auto x : t) w += x;
    return w;
  };
  std::stable_sort(tuples.begin(), tuples.end(),
                   [&](const auto& a, const auto& b) { return weight(a) < weight(b); });

  for (const auto& tup : tuples) {
    CycElt p = CycElt(0L).lifted(m);
    std::vector<Real> pvals(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
      if (tup[k] == 0) continue;
      p += basis[k] * CycElt(values[tup[k]]);
      for (std::size_t e = 0; e < n; ++e) pvals[e] += static_cast<Real>(values[tup[k]].get_d()) * E[e][k];
    }
    std::vector<Real> roots(n);
    bool positive = true;
    for (std::size_t e = 0; e < n; ++e) {
      const Real r = beta_vals[e] - pvals[e] * pvals[e];
      if (r <= 1e-12L) {
        positive = false;
        break;
      }
      roots[e] = std::sqrt(r);
    }
    if (!positive) continue;
    const CycElt target = beta - p * p;
    for (std::size_t signs = 0; signs < (std::size_t{1} << (n - 1)); ++signs) {
      std::vector<Real> v = roots;
      for (std::size_t e = 1; e < n; ++e)
        if (signs >> (e - 1) & 1) v[e] = -v[e];
      const auto c = solve(E, v);
      CycElt q = CycElt(0L).lifted(m);
      bool ok = true;
      for (std::size_t k = 0; k < n && ok; ++k) {
        auto r = reconstruct(c[k], 256);
        if (!r) ok = false;
        else if (*r != 0) q += basis[k] * CycElt(*r);
      }
      if (!ok || q * q != target) continue;
      const CycElt inv_theta = inverse(*theta);
      return make(p * inv_theta, q * inv_theta, "real subfield search");
    }
  }
  return std::nullopt;
}

std::optional<TwoSquares> direct_tiers(const FieldDescriptor& K) {
  if (has_zeta(K, 4)) return make(CycElt::zeta(4), CycElt(0L), "i");
  if (has_zeta(K, 3)) {
    const CycElt w = CycElt::zeta(3);
    return make(w * w, w, "omega");
  }
  if (auto r = via_quadratic_subfield(K)) return r;
  if (auto r = via_roots_of_unity(K)) return r;
  return std::nullopt;
}

// Witness in L = fixed field of the 2-part of H, then a norm down to K(i).
std::optional<TwoSquares> via_odd_descent(const FieldDescriptor& K) {
  const i64 m = K.conductor();
  std::vector<i64> syl;
  for (i64 h : K.subgroup()) {
    i64 o = multiplicative_order(h, m);
    if ((o & (o - 1)) == 0) syl.push_back(h);
  }
  if (syl.size() == K.subgroup().size()) return std::nullopt;
  const FieldDescriptor L = FieldDescriptor::abelian(m, syl);
  std::optional<TwoSquares> inner = direct_tiers(L);
  if (!inner) inner = via_real_subfield_search(L);
  if (!inner) return std::nullopt;

  const CycElt i = CycElt::zeta(4);
  const CycElt x = inner->a + inner->b * i;
  const i64 M = lcm(lcm(x.level(), m), 4);
  const auto pre_h = preimage(K.subgroup(), m, M);
  const auto pre_syl = preimage(syl, m, M);
  // coset representatives of Gal(L(i)/K(i))
  std::vector<i64> reps;
  std::vector<bool> covered(static_cast<std::size_t>(M), false);
  for (i64 h : pre_h) {
    if (h % 4 != 1 || covered[static_cast<std::size_t>(h)]) continue;
    reps.push_back(h);
    for (i64 s : pre_syl)
      if (s % 4 == 1) covered[static_cast<std::size_t>(residue(h * s, M))] = true;
  }
  CycElt y(1L);
  const CycElt xl = x.lifted(M);
  for (i64 h : reps) y *= galois_apply(h, xl);
  std::optional<i64> tau;
  for (i64 s : pre_syl)
    if (s % 4 == 3) {
      tau = s;
      break;
    }
  if (!tau) return std::nullopt;
  const CycElt ty = galois_apply(*tau, y.lifted(M));
  const CycElt a = (y + ty) * CycElt(Rational(1, 2));
  const CycElt b = (y - ty) * inverse(CycElt(2L) * i);
  return make(a, b, "odd-degree norm from " + L.to_string() + " (" + inner->method + ")");
}

}  // namespace

TwoSquares find_sum_two_squares(const FieldDescriptor& K) {
  switch (K.kind()) {
    case FieldDescriptor::Kind::Complexes: return make(CycElt::zeta(4), CycElt(0L), "i");
    case FieldDescriptor::Kind::Reals:
      throw Error(Errc::PredicateFalse, "-1 is not a sum of two squares in RR");
    case FieldDescriptor::Kind::FunctionField: return find_sum_two_squares(K.constants());
    case FieldDescriptor::Kind::Abelian: break;
  }
  if (!minus_one_sum_two_squares(K))
    throw Error(Errc::PredicateFalse, "-1 is not a sum of two squares in " + K.to_string());
  if (auto r = direct_tiers(K)) return *r;
  if (auto r = via_odd_descent(K)) return *r;
  if (auto r = via_real_subfield_search(K)) return *r;
  throw Error(Errc::NoWitnessFound, "no explicit a, b with a^2 + b^2 = -1 found in " + K.to_string());
}

}  // namespace jordanum
