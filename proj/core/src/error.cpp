#include "jordanum/error.hpp"

namespace jordanum {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::ZeroInverse: return "ZeroInverse";
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::ZeroRadicand: return "ZeroRadicand";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::NotRepresentable: return "NotRepresentable";
    case Errc::MalformedSubgroup: return "MalformedSubgroup";
    case Errc::NotOddPrime: return "NotOddPrime";
    case Errc::UnrealizableVector: return "UnrealizableVector";
    case Errc::MissingOrder: return "MissingOrder";
    case Errc::NotPrimitiveTag: return "NotPrimitiveTag";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::BadWord: return "BadWord";
    case Errc::BadParameters: return "BadParameters";
    case Errc::NoWitnessFound: return "NoWitnessFound";
    case Errc::PredicateFalse: return "PredicateFalse";
    case Errc::NotProjectivelyCyclic: return "NotProjectivelyCyclic";
    case Errc::NoWitness: return "NoWitness";
    case Errc::ParseError: return "ParseError";
    case Errc::SemanticError: return "SemanticError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

}  // namespace jordanum
