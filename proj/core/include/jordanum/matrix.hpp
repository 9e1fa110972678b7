#pragma once

#include <string>
#include <vector>

#include "jordanum/cyclotomic.hpp"

namespace jordanum {

// Square matrix over cyclotomic numbers. All entries are kept at one common
// level so that keys are comparable between matrices built the same way.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t dim, std::vector<CycElt> entries);
  ExactMatrix(std::initializer_list<std::initializer_list<CycElt>> rows);

  static ExactMatrix identity_matrix(std::size_t dim, i64 level = 1);
  static ExactMatrix scalar(std::size_t dim, const CycElt& c);
  static ExactMatrix diagonal(const std::vector<CycElt>& d);

  std::size_t dim() const { return dim_; }
  i64 level() const { return level_; }
  const CycElt& operator()(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }
  const std::vector<CycElt>& entries() const { return entries_; }

  ExactMatrix lifted(i64 M) const;

  CycElt det() const;
  CycElt trace() const;
  ExactMatrix adjugate() const;
  // Throws ZeroInverse for a singular matrix.
  ExactMatrix inverse() const;
  ExactMatrix identity() const { return identity_matrix(dim_, level_); }
  bool is_identity() const;
  bool is_scalar() const;

  ExactMatrix operator*(const ExactMatrix& o) const;
  ExactMatrix operator*(const CycElt& c) const;
  ExactMatrix operator+(const ExactMatrix& o) const;
  ExactMatrix operator-(const ExactMatrix& o) const;
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

  std::string key() const;
  std::string to_string() const;

 private:
  std::size_t dim_ = 0;
  i64 level_ = 1;
  std::vector<CycElt> entries_;
};

ExactMatrix pow(const ExactMatrix& a, i64 e);

// Multiplicative order by repeated multiplication, up to `bound`; 0 if the
// order exceeds the bound.
i64 matrix_order(const ExactMatrix& a, i64 bound = 4096);

// Characteristic polynomial coefficients c_0..c_n (monic, c_n = 1) of a 2x2
// or 3x3 matrix.
std::vector<CycElt> charpoly(const ExactMatrix& a);

// A matrix up to nonzero scalars, scaled so its first nonzero entry in
// row-major order is 1.
class ProjMatrix {
 public:
  ProjMatrix() = default;
  explicit ProjMatrix(const ExactMatrix& m);

  const ExactMatrix& matrix() const { return m_; }
  std::size_t dim() const { return m_.dim(); }
  i64 level() const { return m_.level(); }
  ProjMatrix lifted(i64 M) const;

  ProjMatrix operator*(const ProjMatrix& o) const { return ProjMatrix(m_ * o.m_); }
  ProjMatrix inverse() const { return ProjMatrix(m_.adjugate()); }
  ProjMatrix identity() const { return ProjMatrix(m_.identity()); }
  bool is_identity() const { return m_.is_identity(); }
  friend bool operator==(const ProjMatrix& a, const ProjMatrix& b) { return a.m_ == b.m_; }

  std::string key() const { return m_.key(); }
  std::string to_string() const { return m_.to_string(); }

 private:
  ExactMatrix m_;
};

}  // namespace jordanum
