#pragma once

// Test-only reference implementations. They share no code paths with the
// library beyond CycElt arithmetic and galois_apply.

#include <string>
#include <vector>

#include "jordanum/cyclotomic.hpp"
#include "jordanum/field.hpp"
#include "jordanum/field_oracle.hpp"
#include "jordanum/group.hpp"
#include "jordanum/ratpoly.hpp"

namespace oracle {

using jordanum::CycElt;
using jordanum::FieldDescriptor;
using jordanum::i64;

// x lies in K iff every sigma_h with h in the preimage of H fixes it.
bool fixed_by_field(const CycElt& x, const FieldDescriptor& K);
bool has_sqrt(const FieldDescriptor& K, long r);
bool has_zeta(const FieldDescriptor& K, i64 n);
// Local degree at 2 as e * f, from inertia and Frobenius separately.
i64 local_degree_at_two(const FieldDescriptor& K);
bool minus_one_sum_two_squares(const FieldDescriptor& K);
// Tries zeta_M^j / sqrt(2) for every j.
bool two_zeta_squared(const FieldDescriptor& K);
jordanum::PropertyVector property_vector(const FieldDescriptor& K);

// Random canonical descriptor with conductor <= max_m.
FieldDescriptor random_abelian(std::uint64_t& state, i64 max_m);
// Same, with conductor dividing N.
FieldDescriptor random_abelian_dividing(std::uint64_t& state, i64 N);

// Every subgroup, by closing joins of cyclic subgroups.
std::vector<jordanum::Subgroup> all_subgroups(const jordanum::FiniteGroup& g);
std::vector<jordanum::Subgroup> normal_subgroups_exhaustive(const jordanum::FiniteGroup& g);
i64 jordan_exhaustive(const jordanum::FiniteGroup& g);

// Product of two cyclotomic elements by polynomial multiplication and
// long division by Phi_M.
CycElt multiply_by_division(const CycElt& a, const CycElt& b);

struct BatteryRow {
  std::string name;
  std::string dsl;
  i64 gl2, sl2, pgl2, pgl3;
};
const std::vector<BatteryRow>& battery();

}  // namespace oracle
