#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jordanum/field.hpp"
#include "jordanum/field_oracle.hpp"

namespace jordanum {

enum class AmbientGroup { GL2, SL2, PGL2, PGL3 };

std::string_view ambient_name(AmbientGroup g);  // "GL2", ...
// Accepts "gl2", "GL2", ...; throws BadParameters.
AmbientGroup parse_ambient(std::string_view s);
inline constexpr AmbientGroup kAllAmbients[] = {AmbientGroup::GL2, AmbientGroup::SL2, AmbientGroup::PGL2,
                                                AmbientGroup::PGL3};

// PGL_2 types, then the ten PGL_3 types.
enum class SubgroupType { Cyclic, Dihedral, A4, S4, A5, A, B, C, D, E, F, G, H, I, L };

std::string_view type_name(SubgroupType t);

struct JordanAnswer {
  i64 value = 0;
  SubgroupType family = SubgroupType::Cyclic;
  std::string family_name;
  std::string branch;  // e.g. "PGL3:(iv)(b)"
};

enum class CascadeMode {
  Checked,  // reject unrealizable vectors
  Total,    // plain cascade on any vector
  Strict,   // also require exactly one full clause to hold
};

JordanAnswer jordan_pgl3(const PropertyVector& p, CascadeMode mode = CascadeMode::Checked);
JordanAnswer jordan_gl2(const PropertyVector& p, CascadeMode mode = CascadeMode::Checked);
JordanAnswer jordan_sl2(const PropertyVector& p, CascadeMode mode = CascadeMode::Checked);
JordanAnswer jordan_pgl2(const PropertyVector& p, CascadeMode mode = CascadeMode::Checked);
JordanAnswer jordan(AmbientGroup g, const PropertyVector& p, CascadeMode mode = CascadeMode::Checked);

struct Clause {
  std::string label;
  i64 value;
  bool (*holds)(const PropertyVector&);
};

// Every clause of a theorem with its complete conjunction of conditions,
// negations included.
const std::vector<Clause>& clauses(AmbientGroup g);
std::vector<std::string> satisfied_clauses(AmbientGroup g, const PropertyVector& p);

// Throws MissingOrder when r is absent for Cyclic/Dihedral, BadParameters for
// a PGL_3 tag.
bool pgl2_subgroup_exists(const FieldDescriptor& K, SubgroupType t, std::optional<i64> r = std::nullopt);
// Throws NotPrimitiveTag unless t is one of E, F, G, H, I, L.
bool pgl3_primitive_exists(const FieldDescriptor& K, SubgroupType t);

enum class FiniteFamily {
  Symmetric,
  Alternating,
  Dihedral,
  CentralExtDihedral,
  CentralExtA5,
  GL2OverA4,
  GL2OverS4,
  Hessian,
};

// Closed-form Jordan constant; n is the family parameter where one applies.
// Throws OutOfRange.
i64 finite_jordan_formula(FiniteFamily f, i64 n = 0);

}  // namespace jordanum
