#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "jordanum/cyclotomic.hpp"
#include "jordanum/number_theory.hpp"
#include "jordanum/rational.hpp"

namespace jordanum {

// A characteristic-0 field: an abelian number field Q(zeta_m)^H, the reals,
// the complex numbers, or a rational function field over one of these.
// Abelian descriptors are always canonical (exact conductor).
class FieldDescriptor {
 public:
  enum class Kind { Abelian, Reals, Complexes, FunctionField };

  FieldDescriptor();  // QQ
  static FieldDescriptor rationals() { return FieldDescriptor(); }
  // Canonicalizes; throws MalformedSubgroup if H is not a subgroup of (Z/m)^x.
  static FieldDescriptor abelian(i64 m, std::vector<i64> H);
  static FieldDescriptor reals();
  static FieldDescriptor complexes();
  // Nested function fields are flattened into one base with summed vars.
  static FieldDescriptor function_field(const FieldDescriptor& base, int vars = 1);

  Kind kind() const { return kind_; }
  bool is_abelian() const { return kind_ == Kind::Abelian; }
  bool is_rationals() const { return kind_ == Kind::Abelian && m_ == 1; }
  i64 conductor() const { return m_; }
  const std::vector<i64>& subgroup() const { return H_; }
  // For function fields; the constant field otherwise.
  const FieldDescriptor& constants() const;
  int vars() const { return vars_; }
  // [K : Q] for abelian descriptors.
  i64 degree() const;
  // True when every embedding is real (abelian), or for RR.
  bool is_real() const;

  std::string to_string() const;
  friend bool operator==(const FieldDescriptor& a, const FieldDescriptor& b);
  friend bool operator!=(const FieldDescriptor& a, const FieldDescriptor& b) { return !(a == b); }

 private:
  Kind kind_ = Kind::Abelian;
  i64 m_ = 1;
  std::vector<i64> H_{1};
  std::shared_ptr<const FieldDescriptor> base_;
  int vars_ = 0;
};

// Smallest conductor representing the same fixed field; throws
// MalformedSubgroup.
std::pair<i64, std::vector<i64>> canonicalize(i64 m, std::vector<i64> H);

FieldDescriptor quadratic_field(const Rational& r);
FieldDescriptor cyclotomic_field(i64 n);

FieldDescriptor adjoin_sqrt(const FieldDescriptor& base, const Rational& r);
FieldDescriptor adjoin_zeta(const FieldDescriptor& base, i64 n);
FieldDescriptor compositum(const FieldDescriptor& a, const FieldDescriptor& b);

bool is_subfield(const FieldDescriptor& L, const FieldDescriptor& K);
bool element_in_field(const CycElt& a, const FieldDescriptor& K);

// Largest w with zeta_w in K; nullopt for CC (infinitely many).
std::optional<i64> roots_of_unity_order(const FieldDescriptor& K);

}  // namespace jordanum
