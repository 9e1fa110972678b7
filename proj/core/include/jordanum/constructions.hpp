#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "jordanum/field.hpp"
#include "jordanum/group.hpp"
#include "jordanum/jordan_laws.hpp"
#include "jordanum/matrix.hpp"

namespace jordanum {

struct WitnessRecipe {
  std::string name;
  AmbientGroup ambient = AmbientGroup::GL2;
  FieldDescriptor field_required;
  std::vector<ExactMatrix> generators;
  bool projective = false;  // close in PGL rather than GL
  std::optional<i64> expected_order;
  i64 expected_jordan = 0;
  bool jordan_bound_only = false;  // expected_jordan is an upper bound
};

struct RecipeCheck {
  i64 closure_order = 0;
  i64 bruteforce_jordan = 0;
  bool fields_ok = false;
  bool matched = false;
  Fingerprint fingerprint;
};

// Checks field of definition, closes the generators and brute-forces J.
RecipeCheck verify_recipe(const WitnessRecipe& r, std::size_t cap = default_cap());

// Image of a matrix group in PGL: the closure of the projected generators.
ClosedGroup<ProjMatrix> project_to_pgl(const ClosedGroup<ExactMatrix>& g, std::size_t cap = default_cap());

// Closure of the recipe generators as a finite group.
FiniteGroup recipe_group(const WitnessRecipe& r, std::size_t cap = default_cap());

struct PlatonicTriple {
  ExactMatrix A, B, C;
};

// A, B generate A4 and B, C generate S4 in PGL_2. Requires a^2 + b^2 = -1.
PlatonicTriple pgl2_platonic(const CycElt& a, const CycElt& b);

// (B, zeta*C); requires a^2 + b^2 = -1 and 2 zeta^2 a root of unity.
std::array<ExactMatrix, 2> gl2_s4_lift(const CycElt& a, const CycElt& b, const CycElt& zeta);

// B = A / (det(A)^u a^v) with un + vr = 1, where A^r = aI and n = dim A.
ExactMatrix lift_to_unimodular(const ExactMatrix& A, i64 r);

// Projective E (36), F (72), G (216) over Q(omega).
std::vector<WitnessRecipe> hessian_tower();
// The same three types as subgroups of SL_3 over Q(zeta_9): 108, 216, 648.
std::vector<WitnessRecipe> hessian_tower_sl3();

WitnessRecipe pgl3_a5();
WitnessRecipe pgl3_a6();
// PSL_2(F_7) over Q(zeta_7).
WitnessRecipe pgl3_klein();
// The same group conjugated into PGL_3(Q(sqrt(-7))).
WitnessRecipe pgl3_klein_descended();
WitnessRecipe pgl3_s4_permutation_rep();

// Type C = <S, T> and type D = <S, T, R_{a,b,c}>; linear in SL_3 when abc = -1,
// projective otherwise. Throws BadParameters when abc = 0.
std::vector<WitnessRecipe> imprimitive_recipes(const CycElt& a, const CycElt& b, const CycElt& c);

// Binary dihedral group of order 4n inside SL_2(Q(zeta_2n)).
WitnessRecipe dicyclic(i64 n);
// Binary icosahedral group from unit icosians; a^2 + b^2 = -1 and sqrt(5) is
// adjoined to the field of a, b.
WitnessRecipe binary_icosahedral(const CycElt& a, const CycElt& b);
WitnessRecipe binary_icosahedral();
std::vector<WitnessRecipe> sl2_central_extensions(i64 n);

// The companion-like matrix with characteristic polynomial
// x^3 - lambda x^2 + eta x - 1.
ExactMatrix cyclic_witness_matrix(const CycElt& lambda, const CycElt& eta);

// Witness subgroup whose Jordan constant is the decision-tree value for K.
// Throws NoWitness when the tree value cannot be realized.
WitnessRecipe witness_for_field(const FieldDescriptor& K, AmbientGroup ambient);

}  // namespace jordanum
