#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace jordanum {

using i64 = std::int64_t;

i64 gcd(i64 a, i64 b);
i64 lcm(i64 a, i64 b);

// Least nonnegative residue; by convention residue(h, 1) = 1 so that the
// unit group of Z/1 is written {1}.
i64 residue(i64 h, i64 m);

i64 mod_pow(i64 base, i64 exp, i64 m);
i64 inverse_mod(i64 a, i64 m);

std::vector<std::pair<i64, int>> factorize(i64 n);
std::vector<i64> divisors(i64 n);
i64 euler_phi(i64 n);
int mobius(i64 n);
bool is_prime(i64 n);

// Multiplicative order of a modulo m (a coprime to m).
i64 multiplicative_order(i64 a, i64 m);

// Kronecker symbol (a/n), total on Z x Z.
int kronecker_symbol(i64 a, i64 n);

// Sorted units of Z/m.
std::vector<i64> units(i64 m);

// { h in (Z/M)^x : h mod m in H }, for m | M and H a sorted residue list.
std::vector<i64> preimage(const std::vector<i64>& H, i64 m, i64 M);

// Sorted subgroup of (Z/m)^x generated by gens.
std::vector<i64> generated_subgroup(const std::vector<i64>& gens, i64 m);

// A small generating set of the subgroup `elements` of (Z/m)^x.
std::vector<i64> subgroup_generators(const std::vector<i64>& elements, i64 m);

bool is_multiplicatively_closed(const std::vector<i64>& H, i64 m);

}  // namespace jordanum
