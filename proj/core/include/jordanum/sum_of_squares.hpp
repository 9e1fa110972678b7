#pragma once

#include <string>
#include <utility>

#include "jordanum/cyclotomic.hpp"
#include "jordanum/field.hpp"

namespace jordanum {

struct TwoSquares {
  CycElt a;
  CycElt b;
  std::string method;
};

// Explicit a, b in K with a^2 + b^2 = -1. Tries, in order: i; omega; an
// imaginary quadratic subfield Q(sqrt(-d)) with d != 7 mod 8 and a
// three-square decomposition of d; zeta_n in K with 2^k = -1 mod n; a norm
// from the odd-degree extension cut out by the 2-part of H; a bounded search
// over small elements of the maximal real subfield.
// Throws PredicateFalse when -1 is not a sum of two squares in K and
// NoWitnessFound when every tier gives up.
TwoSquares find_sum_two_squares(const FieldDescriptor& K);

inline std::pair<CycElt, CycElt> sum_two_squares_witness(const FieldDescriptor& K) {
  auto w = find_sum_two_squares(K);
  return {w.a, w.b};
}

}  // namespace jordanum
