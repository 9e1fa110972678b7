#include "field_dsl.hpp"

#include <cctype>
#include <optional>

namespace jordanum::cli {

namespace {

std::string join(const std::vector<std::string>& xs) {
  std::string s;
  for (std::size_t k = 0; k < xs.size(); ++k) s += (k ? ", " : "") + xs[k];
  return s;
}

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  std::size_t pos() {
    skip();
    return pos_;
  }
  bool at_end() { return pos() == s_.size(); }

  bool accept(std::string_view tok) {
    skip();
    if (s_.substr(pos_, tok.size()) != tok) return false;
    // keywords must not run into a following identifier character
    if (std::isalpha(static_cast<unsigned char>(tok.back())) && pos_ + tok.size() < s_.size() &&
        std::isalnum(static_cast<unsigned char>(s_[pos_ + tok.size()])))
      return false;
    pos_ += tok.size();
    return true;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    skip();
    const std::string got = pos_ < s_.size() ? "'" + std::string(1, s_[pos_]) + "'" : "end of input";
    throw ParseFailure(pos_, std::move(expected), got);
  }

  void expect(std::string_view tok) {
    if (!accept(tok)) fail({"'" + std::string(tok) + "'"});
  }

  std::string integer(bool allow_sign) {
    skip();
    std::string out;
    if (allow_sign && pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) out += s_[pos_++];
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) out += s_[pos_++];
    if (pos_ == start) fail({"integer"});
    return out;
  }

  Rational rational() {
    std::string text = integer(true);
    if (accept("/")) text += "/" + integer(false);
    return parse_rational(text);
  }

  i64 small_int() {
    const std::size_t at = pos();
    const std::string t = integer(true);
    try {
      return std::stoll(t);
    } catch (const std::out_of_range&) {
      throw ParseFailure(at, {"integer that fits in 64 bits"}, t);
    }
  }

  std::string_view rest() const { return s_.substr(pos_); }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

Adjunction parse_gen(Lexer& lx) {
  if (lx.accept("sqrt")) {
    lx.expect("(");
    Rational r = lx.rational();
    lx.expect(")");
    return Sqrt{r};
  }
  if (lx.accept("zeta")) {
    lx.expect("(");
    i64 n = lx.small_int();
    lx.expect(")");
    return Zeta{n};
  }
  if (lx.accept("omega")) return NamedConst{"omega"};
  if (lx.accept("i")) return NamedConst{"i"};
  if (lx.accept("t")) return Indeterminate{};
  lx.fail({"'sqrt('", "'zeta('", "'i'", "'omega'", "'t'"});
}

FieldDescriptor parse_canonical(Lexer& lx);

FieldDescriptor parse_canonical_abelian(Lexer& lx) {
  lx.expect("(");
  lx.expect("m");
  lx.expect("=");
  const i64 m = lx.small_int();
  lx.expect(";");
  lx.expect("H");
  lx.expect("=");
  std::vector<i64> H{lx.small_int()};
  while (lx.accept(",")) H.push_back(lx.small_int());
  lx.expect(")");
  if (m < 1) throw Error(Errc::SemanticError, "conductor must be positive");
  return FieldDescriptor::abelian(m, H);
}

FieldDescriptor parse_canonical(Lexer& lx) {
  if (lx.accept("QQ")) return FieldDescriptor::rationals();
  if (lx.accept("RR")) return FieldDescriptor::reals();
  if (lx.accept("CC")) return FieldDescriptor::complexes();
  if (lx.accept("Abelian")) return parse_canonical_abelian(lx);
  if (lx.accept("FunctionField")) {
    lx.expect("(");
    lx.expect("base");
    lx.expect("=");
    FieldDescriptor base = parse_canonical(lx);
    lx.expect(";");
    lx.expect("vars");
    lx.expect("=");
    const i64 vars = lx.small_int();
    lx.expect(")");
    if (vars < 1) throw Error(Errc::SemanticError, "vars must be positive");
    return FieldDescriptor::function_field(base, static_cast<int>(vars));
  }
  lx.fail({"'QQ'", "'RR'", "'CC'", "'Abelian('", "'FunctionField('"});
}

}  // namespace

ParseFailure::ParseFailure(std::size_t offset, std::vector<std::string> expected, const std::string& got)
    : Error(Errc::ParseError,
            "at byte " + std::to_string(offset) + ": expected " + join(expected) + ", got " + got),
      offset_(offset),
      expected_(std::move(expected)) {}

FieldExpr parse_field_expr(std::string_view text) {
  Lexer lx(text);
  FieldExpr e;
  const std::size_t start = lx.pos();
  if (lx.accept("Abelian") || lx.accept("FunctionField")) {
    Lexer again(text);
    e.canonical = true;
    e.descriptor = parse_canonical(again);
    if (!again.at_end()) again.fail({"end of input"});
    e.base = FieldExpr::Base::QQ;
    return e;
  }
  if (lx.accept("QQ")) e.base = FieldExpr::Base::QQ;
  else if (lx.accept("RR")) e.base = FieldExpr::Base::RR;
  else if (lx.accept("CC")) e.base = FieldExpr::Base::CC;
  else lx.fail({"'QQ'", "'RR'", "'CC'", "'Abelian('", "'FunctionField('"});
  if (lx.accept("(")) {
    if (e.base != FieldExpr::Base::QQ)
      throw Error(Errc::SemanticError,
                  std::string(e.base == FieldExpr::Base::RR ? "RR" : "CC") + " admits no adjunctions (byte " +
                      std::to_string(start) + ")");
    e.adjunctions.push_back(parse_gen(lx));
    while (lx.accept(",")) e.adjunctions.push_back(parse_gen(lx));
    lx.expect(")");
  }
  if (!lx.at_end()) lx.fail({e.adjunctions.empty() && e.base == FieldExpr::Base::QQ ? "'(' or end of input" : "end of input"});
  e.descriptor = to_descriptor(e);
  return e;
}

FieldDescriptor to_descriptor(const FieldExpr& e) {
  if (e.canonical) return e.descriptor;
  switch (e.base) {
    case FieldExpr::Base::RR: return FieldDescriptor::reals();
    case FieldExpr::Base::CC: return FieldDescriptor::complexes();
    case FieldExpr::Base::QQ: break;
  }
  FieldDescriptor K = FieldDescriptor::rationals();
  int vars = 0;
  for (const auto& adj : e.adjunctions) {
    if (const auto* s = std::get_if<Sqrt>(&adj)) {
      if (s->radicand == 0) throw Error(Errc::SemanticError, "sqrt(0) is not a field generator");
      K = adjoin_sqrt(K, s->radicand);
    } else if (const auto* z = std::get_if<Zeta>(&adj)) {
      if (z->n < 1) throw Error(Errc::SemanticError, "zeta(n) needs n >= 1");
      K = adjoin_zeta(K, z->n);
    } else if (const auto* c = std::get_if<NamedConst>(&adj)) {
      K = adjoin_zeta(K, c->name == "i" ? 4 : 3);
    } else {
      if (++vars > 1) throw Error(Errc::SemanticError, "at most one indeterminate t");
    }
  }
  return vars ? FieldDescriptor::function_field(K, vars) : K;
}

FieldDescriptor parse_field(std::string_view text) { return parse_field_expr(text).descriptor; }

}  // namespace jordanum::cli
