#include "jordanum/field.hpp"

#include <algorithm>

#include "jordanum/error.hpp"

namespace jordanum {

namespace {

const FieldDescriptor& base_of(const FieldDescriptor& k) { return k.constants(); }

bool subset(const std::vector<i64>& a, const std::vector<i64>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

std::pair<i64, std::vector<i64>> canonicalize(i64 m, std::vector<i64> H) {
  if (m < 1) throw Error(Errc::MalformedSubgroup, "conductor must be positive");
  for (auto& h : H) h = residue(h, m);
  std::sort(H.begin(), H.end());
  H.erase(std::unique(H.begin(), H.end()), H.end());
  for (i64 h : H)
    if (gcd(h, m) != 1) throw Error(Errc::MalformedSubgroup, std::to_string(h) + " is not a unit mod " + std::to_string(m));
  if (!std::binary_search(H.begin(), H.end(), residue(1, m)))
    throw Error(Errc::MalformedSubgroup, "H must contain 1");
  if (!is_multiplicatively_closed(H, m)) throw Error(Errc::MalformedSubgroup, "H is not closed under multiplication");
  const auto U = units(m);
  for (i64 d : divisors(m)) {
    bool ok = true;
    for (i64 u : U)
      if (residue(u, d) == residue(1, d) && !std::binary_search(H.begin(), H.end(), u)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    std::vector<i64> Hd;
    for (i64 h : H) Hd.push_back(residue(h, d));
    std::sort(Hd.begin(), Hd.end());
    Hd.erase(std::unique(Hd.begin(), Hd.end()), Hd.end());
    return {d, Hd};
  }
  return {m, H};
}

FieldDescriptor::FieldDescriptor() = default;

FieldDescriptor FieldDescriptor::abelian(i64 m, std::vector<i64> H) {
  auto [mc, Hc] = canonicalize(m, std::move(H));
  FieldDescriptor f;
  f.m_ = mc;
  f.H_ = std::move(Hc);
  return f;
}

FieldDescriptor FieldDescriptor::reals() {
  FieldDescriptor f;
  f.kind_ = Kind::Reals;
  f.m_ = 0;
  f.H_.clear();
  return f;
}

FieldDescriptor FieldDescriptor::complexes() {
  FieldDescriptor f;
  f.kind_ = Kind::Complexes;
  f.m_ = 0;
  f.H_.clear();
  return f;
}

FieldDescriptor FieldDescriptor::function_field(const FieldDescriptor& base, int vars) {
  if (vars < 1) throw Error(Errc::BadParameters, "function field needs at least one variable");
  FieldDescriptor f;
  f.kind_ = Kind::FunctionField;
  f.m_ = 0;
  f.H_.clear();
  if (base.kind_ == Kind::FunctionField) {
    f.base_ = base.base_;
    f.vars_ = base.vars_ + vars;
  } else {
    f.base_ = std::make_shared<const FieldDescriptor>(base);
    f.vars_ = vars;
  }
  return f;
}

const FieldDescriptor& FieldDescriptor::constants() const { return base_ ? *base_ : *this; }

i64 FieldDescriptor::degree() const {
  if (kind_ != Kind::Abelian) throw Error(Errc::NotRepresentable, "degree is defined for number fields only");
  return euler_phi(m_) / static_cast<i64>(H_.size());
}

bool FieldDescriptor::is_real() const {
  switch (kind_) {
    case Kind::Reals: return true;
    case Kind::Complexes: return false;
    case Kind::FunctionField: return base_->is_real();
    case Kind::Abelian: return std::binary_search(H_.begin(), H_.end(), residue(-1, m_));
  }
  return false;
}

std::string FieldDescriptor::to_string() const {
  switch (kind_) {
    case Kind::Reals: return "RR";
    case Kind::Complexes: return "CC";
    case Kind::FunctionField:
      return "FunctionField(base=" + base_->to_string() + "; vars=" + std::to_string(vars_) + ")";
    case Kind::Abelian: {
      if (m_ == 1) return "QQ";
      std::string out = "Abelian(m=" + std::to_string(m_) + "; H=";
      for (std::size_t k = 0; k < H_.size(); ++k) {
        if (k) out += ",";
        out += std::to_string(H_[k]);
      }
      return out + ")";
    }
  }
  return "?";
}

bool operator==(const FieldDescriptor& a, const FieldDescriptor& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ == FieldDescriptor::Kind::FunctionField) return a.vars_ == b.vars_ && *a.base_ == *b.base_;
  return a.m_ == b.m_ && a.H_ == b.H_;
}

FieldDescriptor quadratic_field(const Rational& r) {
  auto [s, q] = squarefree_part(r);
  (void)q;
  if (s == 1) return FieldDescriptor::rationals();
  const i64 D = (residue(s, 4) == 1) ? s : 4 * s;
  const i64 m = D < 0 ? -D : D;
  std::vector<i64> H;
  for (i64 h : units(m))
    if (kronecker_symbol(D, h) == 1) H.push_back(h);
  return FieldDescriptor::abelian(m, H);
}

FieldDescriptor cyclotomic_field(i64 n) {
  if (n < 1) throw Error(Errc::BadParameters, "zeta order must be positive");
  if (n % 4 == 2) n /= 2;
  return FieldDescriptor::abelian(n, {1});
}

FieldDescriptor adjoin_sqrt(const FieldDescriptor& base, const Rational& r) {
  if (r == 0) throw Error(Errc::ZeroRadicand, "cannot adjoin sqrt(0)");
  switch (base.kind()) {
    case FieldDescriptor::Kind::Complexes: return base;
    case FieldDescriptor::Kind::Reals:
      if (r < 0) throw Error(Errc::NotRepresentable, "RR(sqrt(" + r.get_str() + ")) is not a supported field");
      return base;
    case FieldDescriptor::Kind::FunctionField:
      return FieldDescriptor::function_field(adjoin_sqrt(base.constants(), r), base.vars());
    case FieldDescriptor::Kind::Abelian: return compositum(base, quadratic_field(r));
  }
  return base;
}

FieldDescriptor adjoin_zeta(const FieldDescriptor& base, i64 n) {
  if (n < 1) throw Error(Errc::BadParameters, "zeta order must be positive");
  switch (base.kind()) {
    case FieldDescriptor::Kind::Complexes: return base;
    case FieldDescriptor::Kind::Reals:
      if (n >= 3) throw Error(Errc::NotRepresentable, "RR(zeta(" + std::to_string(n) + ")) is not a supported field");
      return base;
    case FieldDescriptor::Kind::FunctionField:
      return FieldDescriptor::function_field(adjoin_zeta(base.constants(), n), base.vars());
    case FieldDescriptor::Kind::Abelian: return compositum(base, cyclotomic_field(n));
  }
  return base;
}

FieldDescriptor compositum(const FieldDescriptor& a, const FieldDescriptor& b) {
  using K = FieldDescriptor::Kind;
  if (a.kind() == K::FunctionField || b.kind() == K::FunctionField) {
    int va = a.kind() == K::FunctionField ? a.vars() : 0;
    int vb = b.kind() == K::FunctionField ? b.vars() : 0;
    return FieldDescriptor::function_field(compositum(base_of(a), base_of(b)), std::max(va, vb));
  }
  if (a.kind() == K::Complexes || b.kind() == K::Complexes) return FieldDescriptor::complexes();
  if (a.kind() == K::Reals || b.kind() == K::Reals) {
    const FieldDescriptor& other = a.kind() == K::Reals ? b : a;
    if (other.kind() == K::Reals || other.is_real()) return FieldDescriptor::reals();
    throw Error(Errc::NotRepresentable, "compositum of RR with the non-real field " + other.to_string());
  }
  const i64 M = lcm(a.conductor(), b.conductor());
  auto pa = preimage(a.subgroup(), a.conductor(), M);
  auto pb = preimage(b.subgroup(), b.conductor(), M);
  std::vector<i64> H;
  std::set_intersection(pa.begin(), pa.end(), pb.begin(), pb.end(), std::back_inserter(H));
  return FieldDescriptor::abelian(M, H);
}

bool is_subfield(const FieldDescriptor& L, const FieldDescriptor& K) {
  using Kd = FieldDescriptor::Kind;
  if (L.kind() == Kd::FunctionField) {
    if (K.kind() != Kd::FunctionField || K.vars() < L.vars()) return false;
    return is_subfield(L.constants(), K.constants());
  }
  if (K.kind() == Kd::FunctionField) return is_subfield(L, K.constants());
  if (K.kind() == Kd::Complexes) return true;
  if (L.kind() == Kd::Complexes) return false;
  if (L.kind() == Kd::Reals) return K.kind() == Kd::Reals;
  if (K.kind() == Kd::Reals) return L.is_real();
  const i64 M = lcm(L.conductor(), K.conductor());
  return subset(preimage(K.subgroup(), K.conductor(), M), preimage(L.subgroup(), L.conductor(), M));
}

bool element_in_field(const CycElt& a, const FieldDescriptor& K) {
  switch (K.kind()) {
    case FieldDescriptor::Kind::Complexes: return true;
    case FieldDescriptor::Kind::Reals: return conjugate(a) == a;
    case FieldDescriptor::Kind::FunctionField: return element_in_field(a, K.constants());
    case FieldDescriptor::Kind::Abelian: break;
  }
  const i64 M = lcm(a.level(), K.conductor());
  const CycElt x = a.lifted(M);
  for (i64 h : subgroup_generators(preimage(K.subgroup(), K.conductor(), M), M))
    if (galois_apply(h, x) != x) return false;
  return true;
}

std::optional<i64> roots_of_unity_order(const FieldDescriptor& K) {
  switch (K.kind()) {
    case FieldDescriptor::Kind::Complexes: return std::nullopt;
    case FieldDescriptor::Kind::Reals: return 2;
    case FieldDescriptor::Kind::FunctionField: return roots_of_unity_order(K.constants());
    case FieldDescriptor::Kind::Abelian: break;
  }
  i64 best = 2;
  for (i64 d : divisors(lcm(2, K.conductor())))
    if (d > best && is_subfield(cyclotomic_field(d), K)) best = d;
  return best;
}

}  // namespace jordanum
