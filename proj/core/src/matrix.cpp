#include "jordanum/matrix.hpp"

#include "jordanum/error.hpp"

namespace jordanum {

ExactMatrix::ExactMatrix(std::size_t dim, std::vector<CycElt> entries) : dim_(dim) {
  if (entries.size() != dim * dim) throw Error(Errc::BadParameters, "matrix entry count does not match dimension");
  entries_ = common_level(std::move(entries));
  level_ = entries_.empty() ? 1 : entries_.front().level();
}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<CycElt>> rows) {
  std::vector<CycElt> e;
  for (const auto& r : rows) {
    if (r.size() != rows.size()) throw Error(Errc::BadParameters, "matrix must be square");
    e.insert(e.end(), r.begin(), r.end());
  }
  *this = ExactMatrix(rows.size(), std::move(e));
}

ExactMatrix ExactMatrix::identity_matrix(std::size_t dim, i64 level) {
  return scalar(dim, CycElt(1L).lifted(level));
}

ExactMatrix ExactMatrix::scalar(std::size_t dim, const CycElt& c) {
  std::vector<CycElt> e(dim * dim, CycElt().lifted(c.level()));
  for (std::size_t k = 0; k < dim; ++k) e[k * dim + k] = c;
  return ExactMatrix(dim, std::move(e));
}

ExactMatrix ExactMatrix::diagonal(const std::vector<CycElt>& d) {
  const std::size_t n = d.size();
  std::vector<CycElt> e(n * n);
  for (std::size_t k = 0; k < n; ++k) e[k * n + k] = d[k];
  return ExactMatrix(n, std::move(e));
}

ExactMatrix ExactMatrix::lifted(i64 M) const {
  if (M == level_) return *this;
  std::vector<CycElt> e;
  e.reserve(entries_.size());
  for (const auto& x : entries_) e.push_back(x.lifted(M));
  ExactMatrix r;
  r.dim_ = dim_;
  r.level_ = M;
  r.entries_ = std::move(e);
  return r;
}

CycElt ExactMatrix::det() const {
  const auto& a = *this;
  switch (dim_) {
    case 1: return a(0, 0);
    case 2: return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    case 3:
      return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) - a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
             a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
    default: throw Error(Errc::OutOfRange, "determinant implemented for dimension <= 3");
  }
}

CycElt ExactMatrix::trace() const {
  CycElt t = CycElt().lifted(level_);
  for (std::size_t k = 0; k < dim_; ++k) t += (*this)(k, k);
  return t;
}

ExactMatrix ExactMatrix::adjugate() const {
  const auto& a = *this;
  if (dim_ == 1) return identity();
  if (dim_ == 2) return ExactMatrix(2, {a(1, 1), -a(0, 1), -a(1, 0), a(0, 0)});
  if (dim_ != 3) throw Error(Errc::OutOfRange, "adjugate implemented for dimension <= 3");
  auto cof = [&](std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) {
    return a(r0, c0) * a(r1, c1) - a(r0, c1) * a(r1, c0);
  };
  return ExactMatrix(3, {cof(1, 2, 1, 2), -cof(0, 2, 1, 2), cof(0, 1, 1, 2),
                         -cof(1, 2, 0, 2), cof(0, 2, 0, 2), -cof(0, 1, 0, 2),
                         cof(1, 2, 0, 1), -cof(0, 2, 0, 1), cof(0, 1, 0, 1)});
}

ExactMatrix ExactMatrix::inverse() const {
  CycElt d = det();
  if (d.is_zero()) throw Error(Errc::ZeroInverse, "singular matrix");
  return adjugate() * jordanum::inverse(d);
}

bool ExactMatrix::is_identity() const {
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) {
      const CycElt& x = (*this)(r, c);
      if (r == c ? x != CycElt(1L) : !x.is_zero()) return false;
    }
  return true;
}

bool ExactMatrix::is_scalar() const {
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) {
      if (r != c && !(*this)(r, c).is_zero()) return false;
      if (r == c && (*this)(r, c) != (*this)(0, 0)) return false;
    }
  return true;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (dim_ != o.dim_) throw Error(Errc::BadParameters, "dimension mismatch");
  if (level_ != o.level_) {
    i64 M = lcm(level_, o.level_);
    return lifted(M) * o.lifted(M);
  }
  std::vector<CycElt> e(dim_ * dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) {
      CycElt s = CycElt().lifted(level_);
      for (std::size_t k = 0; k < dim_; ++k) {
        const CycElt& x = entries_[r * dim_ + k];
        const CycElt& y = o.entries_[k * dim_ + c];
        if (!x.is_zero() && !y.is_zero()) s += x * y;
      }
      e[r * dim_ + c] = std::move(s);
    }
  ExactMatrix m;
  m.dim_ = dim_;
  m.level_ = level_;
  m.entries_ = std::move(e);
  return m;
}

ExactMatrix ExactMatrix::operator*(const CycElt& c) const {
  std::vector<CycElt> e = entries_;
  for (auto& x : e) x *= c;
  return ExactMatrix(dim_, std::move(e));
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
  if (dim_ != o.dim_) throw Error(Errc::BadParameters, "dimension mismatch");
  std::vector<CycElt> e = entries_;
  for (std::size_t k = 0; k < e.size(); ++k) e[k] += o.entries_[k];
  return ExactMatrix(dim_, std::move(e));
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const { return *this + o * CycElt(-1L); }

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.dim_ != b.dim_) return false;
  for (std::size_t k = 0; k < a.entries_.size(); ++k)
    if (a.entries_[k] != b.entries_[k]) return false;
  return true;
}

std::string ExactMatrix::key() const {
  std::string out;
  for (const auto& x : entries_) {
    out += x.key();
    out += ';';
  }
  return out;
}

std::string ExactMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t r = 0; r < dim_; ++r) {
    out += r ? ", [" : "[";
    for (std::size_t c = 0; c < dim_; ++c) {
      if (c) out += ", ";
      out += (*this)(r, c).to_string();
    }
    out += "]";
  }
  return out + "]";
}

ExactMatrix pow(const ExactMatrix& a, i64 e) {
  if (e < 0) return pow(a.inverse(), -e);
  ExactMatrix result = a.identity();
  ExactMatrix base = a;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

i64 matrix_order(const ExactMatrix& a, i64 bound) {
  ExactMatrix x = a;
  for (i64 k = 1; k <= bound; ++k) {
    if (x.is_identity()) return k;
    x = x * a;
  }
  return 0;
}

std::vector<CycElt> charpoly(const ExactMatrix& a) {
  const CycElt tr = a.trace();
  if (a.dim() == 2) return {a.det(), -tr, CycElt(1L)};
  if (a.dim() == 3) {
    // x^3 - tr x^2 + e2 x - det, e2 the sum of principal 2x2 minors
    CycElt e2 = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0) + a(0, 0) * a(2, 2) - a(0, 2) * a(2, 0) + a(1, 1) * a(2, 2) -
                a(1, 2) * a(2, 1);
    return {-a.det(), e2, -tr, CycElt(1L)};
  }
  throw Error(Errc::OutOfRange, "charpoly implemented for dimension 2 and 3");
}

ProjMatrix::ProjMatrix(const ExactMatrix& m) {
  for (const auto& x : m.entries()) {
    if (x.is_zero()) continue;
    if (x == CycElt(1L)) {
      m_ = m;
    } else {
      m_ = m * jordanum::inverse(x);
      m_ = m_.lifted(m.level());
    }
    return;
  }
  throw Error(Errc::ZeroInverse, "zero matrix has no projective class");
}

ProjMatrix ProjMatrix::lifted(i64 M) const {
  ProjMatrix p;
  p.m_ = m_.lifted(M);
  return p;
}

}  // namespace jordanum
