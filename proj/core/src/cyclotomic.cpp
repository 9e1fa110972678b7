#include "jordanum/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "jordanum/error.hpp"
#include "jordanum/ratpoly.hpp"

namespace jordanum {

namespace {

struct LevelData {
  i64 level;
  std::size_t phi;
  std::vector<long> modulus;  // Phi_M, lowest degree first, monic
  RatPoly modulus_poly;
};

std::shared_ptr<const LevelData> level_data(i64 M) {
  static std::mutex mu;
  static std::map<i64, std::shared_ptr<const LevelData>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(M);
    if (it != cache.end()) return it->second;
  }
  if (M < 1) throw Error(Errc::OutOfRange, "cyclotomic level must be >= 1");
  auto data = std::make_shared<LevelData>();
  data->level = M;
  data->modulus_poly = cyclotomic_polynomial(M);
  data->phi = static_cast<std::size_t>(data->modulus_poly.degree());
  for (const auto& c : data->modulus_poly.coeffs()) {
    if (c.get_den() != 1 || !c.get_num().fits_slong_p())
      throw Error(Errc::OutOfRange, "cyclotomic coefficient out of range");
    data->modulus.push_back(c.get_num().get_si());
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(M, std::move(data)).first->second;
}

// Reduces an arbitrary-length coefficient vector modulo Phi_M in place.
void reduce(std::vector<Rational>& v, const LevelData& L) {
  const std::size_t phi = L.phi;
  for (std::size_t k = v.size(); k-- > phi;) {
    if (v[k] == 0) continue;
    Rational c = v[k];
    for (std::size_t j = 0; j < phi; ++j) {
      long m = L.modulus[j];
      if (m != 0) v[k - phi + j] -= c * m;
    }
    v[k] = 0;
  }
  v.resize(phi);
}

// Solves A x = b over Q (A given by columns); nullopt if inconsistent.
std::optional<std::vector<Rational>> solve_columns(const std::vector<std::vector<Rational>>& cols,
                                                   const std::vector<Rational>& b) {
  const std::size_t rows = b.size();
  const std::size_t n = cols.size();
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(n + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < n; ++c) a[r][c] = cols[c][r];
    a[r][n] = b[r];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < n && row < rows; ++c) {
    std::size_t p = row;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[row]);
    Rational inv = 1 / a[row][c];
    for (std::size_t k = c; k <= n; ++k) a[row][k] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || a[r][c] == 0) continue;
      Rational f = a[r][c];
      for (std::size_t k = c; k <= n; ++k) a[r][k] -= f * a[row][k];
    }
    pivot_col.push_back(c);
    ++row;
  }
  for (std::size_t r = row; r < rows; ++r)
    if (a[r][n] != 0) return std::nullopt;
  std::vector<Rational> x(n);
  for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = a[r][n];
  return x;
}

bool fixed_by_kernel(const CycElt& a, i64 d) {
  const i64 M = a.level();
  std::vector<i64> kernel;
  for (i64 h : units(M))
    if (residue(h, d) == residue(1, d)) kernel.push_back(h);
  for (i64 h : subgroup_generators(kernel, M))
    if (galois_apply(h, a) != a) return false;
  return true;
}

}  // namespace

CycElt::CycElt() : level_(1), coeffs_{Rational(0)} {}
CycElt::CycElt(const Rational& r) : level_(1), coeffs_{r} {}
CycElt::CycElt(long n) : level_(1), coeffs_{Rational(n)} {}
CycElt::CycElt(i64 level, std::vector<Rational> coeffs) : level_(level), coeffs_(std::move(coeffs)) {}

CycElt CycElt::zeta(i64 level, i64 k) { return from_terms(level, {{k, Rational(1)}}); }

CycElt CycElt::from_coeffs(i64 level, std::vector<Rational> coeffs) {
  auto L = level_data(level);
  if (coeffs.size() < L->phi) coeffs.resize(L->phi);
  reduce(coeffs, *L);
  return CycElt(level, std::move(coeffs));
}

CycElt CycElt::from_terms(i64 level, const std::vector<std::pair<i64, Rational>>& terms) {
  auto L = level_data(level);
  std::vector<Rational> v(std::max<std::size_t>(L->phi, static_cast<std::size_t>(level)));
  for (const auto& [e, c] : terms) v[static_cast<std::size_t>(residue(e, level) % level)] += c;
  reduce(v, *L);
  return CycElt(level, std::move(v));
}

bool CycElt::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CycElt::is_rational() const {
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) return false;
  return true;
}

Rational CycElt::to_rational() const {
  if (!is_rational()) throw Error(Errc::OutOfRange, "element is not rational: " + to_string());
  return coeffs_[0];
}

CycElt CycElt::lifted(i64 M) const {
  if (M == level_) return *this;
  if (M % level_ != 0)
    throw Error(Errc::BadParameters, "cannot lift level " + std::to_string(level_) + " to " + std::to_string(M));
  const i64 k = M / level_;
  auto L = level_data(M);
  std::vector<Rational> v(std::max<std::size_t>(L->phi, (coeffs_.size() - 1) * static_cast<std::size_t>(k) + 1));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) v[j * static_cast<std::size_t>(k)] = coeffs_[j];
  reduce(v, *L);
  return CycElt(M, std::move(v));
}

CycElt CycElt::operator-() const {
  CycElt r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycElt& CycElt::operator+=(const CycElt& o) {
  if (o.level_ != level_) {
    i64 M = lcm(level_, o.level_);
    *this = lifted(M);
    return *this += o.lifted(M);
  }
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

CycElt& CycElt::operator-=(const CycElt& o) { return *this += -o; }

CycElt& CycElt::operator*=(const CycElt& o) {
  if (o.level_ != level_) {
    i64 M = lcm(level_, o.level_);
    *this = lifted(M);
    return *this *= o.lifted(M);
  }
  if (o.is_rational()) {
    const Rational c = o.coeffs_[0];
    for (auto& x : coeffs_) x *= c;
    return *this;
  }
  if (is_rational()) {
    const Rational c = coeffs_[0];
    coeffs_ = o.coeffs_;
    for (auto& x : coeffs_) x *= c;
    return *this;
  }
  auto L = level_data(level_);
  std::vector<Rational> v(2 * coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      if (o.coeffs_[j] != 0) v[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  reduce(v, *L);
  coeffs_ = std::move(v);
  return *this;
}

CycElt& CycElt::operator/=(const CycElt& o) { return *this *= inverse(o); }

bool operator==(const CycElt& a, const CycElt& b) {
  if (a.level_ == b.level_) return a.coeffs_ == b.coeffs_;
  i64 M = lcm(a.level_, b.level_);
  return a.lifted(M).coeffs_ == b.lifted(M).coeffs_;
}

std::string CycElt::key() const {
  std::string out = std::to_string(level_) + ":";
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k) out += ',';
    out += coeffs_[k].get_str();
  }
  return out;
}

std::string CycElt::to_string() const {
  if (is_rational()) return coeffs_[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "z" << level_;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

CycElt inverse(const CycElt& a) {
  if (a.is_zero()) throw Error(Errc::ZeroInverse, "inverse of zero");
  if (a.is_rational()) return CycElt(1 / a.coeffs()[0]).lifted(a.level());
  auto L = level_data(a.level());
  ExtendedGcd g = extended_gcd(RatPoly(a.coeffs()), L->modulus_poly);
  // s*a + t*Phi = 1 since Phi_M is irreducible
  return CycElt::from_coeffs(a.level(), g.s.coeffs());
}

CycElt pow(const CycElt& a, i64 e) {
  if (e < 0) return pow(inverse(a), -e);
  CycElt result = CycElt(1L).lifted(a.level());
  CycElt base = a;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

CycElt galois_apply(i64 h, const CycElt& a) {
  const i64 M = a.level();
  if (gcd(h, M) != 1)
    throw Error(Errc::NotCoprime, "galois_apply: gcd(" + std::to_string(h) + ", " + std::to_string(M) + ") != 1");
  std::vector<std::pair<i64, Rational>> terms;
  for (std::size_t j = 0; j < a.coeffs().size(); ++j)
    if (a.coeffs()[j] != 0) terms.emplace_back(static_cast<i64>(j) * residue(h, M), a.coeffs()[j]);
  return CycElt::from_terms(M, terms);
}

CycElt conjugate(const CycElt& a) { return galois_apply(-1, a); }

std::optional<CycElt> descend(const CycElt& a, i64 d) {
  const i64 M = a.level();
  if (d < 1 || M % d != 0) throw Error(Errc::BadParameters, "descend: target level must divide the level");
  if (d == M) return a;
  if (!fixed_by_kernel(a, d)) return std::nullopt;
  const std::size_t phi_d = static_cast<std::size_t>(euler_phi(d));
  std::vector<std::vector<Rational>> cols;
  for (std::size_t j = 0; j < phi_d; ++j) cols.push_back(CycElt::zeta(d, static_cast<i64>(j)).lifted(M).coeffs());
  auto x = solve_columns(cols, a.coeffs());
  if (!x) return std::nullopt;
  return CycElt::from_coeffs(d, std::move(*x));
}

CycElt normalize_level(const CycElt& a) {
  if (a.is_rational()) return CycElt(a.coeffs()[0]);
  for (i64 d : divisors(a.level())) {
    if (d % 4 == 2 || d == a.level()) continue;
    if (auto r = descend(a, d)) return *r;
  }
  return a;
}

CycElt sqrt_rational(const Rational& r) {
  if (r == 0) throw Error(Errc::ZeroRadicand, "square root of zero requested");
  auto [s, q] = squarefree_part(r);
  CycElt root(1L);
  const CycElt i = CycElt::zeta(4);
  for (auto [p, e] : factorize(s)) {
    if (p == 2) {
      root *= CycElt::zeta(8, 1) + CycElt::zeta(8, 7);
      continue;
    }
    // Gauss sum g_p with g_p^2 = (-1)^((p-1)/2) p
    std::vector<std::pair<i64, Rational>> terms;
    for (i64 t = 1; t < p; ++t) terms.emplace_back(t, Rational(kronecker_symbol(t, p)));
    CycElt g = CycElt::from_terms(p, terms);
    root *= (p % 4 == 1) ? g : -i * g;
  }
  if (s < 0) root *= i;
  return normalize_level(root * CycElt(q));
}

std::vector<CycElt> common_level(std::vector<CycElt> xs) {
  i64 M = 1;
  for (const auto& x : xs) M = lcm(M, x.level());
  for (auto& x : xs) x = x.lifted(M);
  return xs;
}

}  // namespace jordanum
