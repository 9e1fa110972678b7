#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "jordanum/error.hpp"
#include "jordanum/field.hpp"
#include "jordanum/rational.hpp"

namespace jordanum::cli {

struct Sqrt {
  Rational radicand;
};
struct Zeta {
  i64 n;
};
struct NamedConst {
  std::string name;  // "i" or "omega"
};
struct Indeterminate {};

using Adjunction = std::variant<Sqrt, Zeta, NamedConst, Indeterminate>;

struct FieldExpr {
  enum class Base { QQ, RR, CC };
  Base base = Base::QQ;
  std::vector<Adjunction> adjunctions;
  // Set when the input was a canonical descriptor string rather than QQ(...).
  bool canonical = false;
  FieldDescriptor descriptor;
};

class ParseFailure : public Error {
 public:
  ParseFailure(std::size_t offset, std::vector<std::string> expected, const std::string& got);
  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

// field := "QQ" | "RR" | "CC" | "QQ(" gen ("," gen)* ")"
// gen   := "sqrt(" rational ")" | "zeta(" int ")" | "i" | "omega" | "t"
// The canonical forms printed by FieldDescriptor::to_string are accepted too.
// Throws ParseFailure (code ParseError) or Error with SemanticError.
FieldExpr parse_field_expr(std::string_view text);
FieldDescriptor to_descriptor(const FieldExpr& e);
FieldDescriptor parse_field(std::string_view text);

}  // namespace jordanum::cli
