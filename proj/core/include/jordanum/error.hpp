#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace jordanum {

enum class Errc {
  ZeroInverse,
  ZeroInput,
  ZeroRadicand,
  NotCoprime,
  NotRepresentable,
  MalformedSubgroup,
  NotOddPrime,
  UnrealizableVector,
  MissingOrder,
  NotPrimitiveTag,
  OutOfRange,
  CapExceeded,
  BadWord,
  BadParameters,
  NoWitnessFound,
  PredicateFalse,
  NotProjectivelyCyclic,
  NoWitness,
  ParseError,
  SemanticError,
};

std::string_view errc_name(Errc code);

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace jordanum
