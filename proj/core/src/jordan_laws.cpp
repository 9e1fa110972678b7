#include "jordanum/jordan_laws.hpp"

#include <algorithm>
#include <cctype>

#include "jordanum/error.hpp"

namespace jordanum {

std::string_view ambient_name(AmbientGroup g) {
  switch (g) {
    case AmbientGroup::GL2: return "GL2";
    case AmbientGroup::SL2: return "SL2";
    case AmbientGroup::PGL2: return "PGL2";
    case AmbientGroup::PGL3: return "PGL3";
  }
  return "?";
}

AmbientGroup parse_ambient(std::string_view s) {
  std::string u(s);
  std::transform(u.begin(), u.end(), u.begin(), [](unsigned char c) { return std::toupper(c); });
  for (AmbientGroup g : kAllAmbients)
    if (ambient_name(g) == u) return g;
  throw Error(Errc::BadParameters, "unknown group '" + std::string(s) + "' (expected gl2, sl2, pgl2 or pgl3)");
}

std::string_view type_name(SubgroupType t) {
  switch (t) {
    case SubgroupType::Cyclic: return "Cyclic";
    case SubgroupType::Dihedral: return "Dihedral";
    case SubgroupType::A4: return "A4";
    case SubgroupType::S4: return "S4";
    case SubgroupType::A5: return "A5";
    case SubgroupType::A: return "A";
    case SubgroupType::B: return "B";
    case SubgroupType::C: return "C";
    case SubgroupType::D: return "D";
    case SubgroupType::E: return "E";
    case SubgroupType::F: return "F";
    case SubgroupType::G: return "G";
    case SubgroupType::H: return "H";
    case SubgroupType::I: return "I";
    case SubgroupType::L: return "L";
  }
  return "?";
}

namespace {

const std::vector<Clause> kPgl3 = {
    {"PGL3:(i)", 360, [](const PropertyVector& p) { return p.has_omega && p.has_sqrt5; }},
    {"PGL3:(ii)", 168, [](const PropertyVector& p) { return !(p.has_omega && p.has_sqrt5) && p.has_sqrt_minus7; }},
    {"PGL3:(iii)", 60, [](const PropertyVector& p) { return p.has_sqrt5 && !p.has_omega && !p.has_sqrt_minus7; }},
    {"PGL3:(iv)(a)", 24, [](const PropertyVector& p) { return !p.has_sqrt5 && !p.has_sqrt_minus7 && p.has_omega; }},
    {"PGL3:(iv)(b)", 24,
     [](const PropertyVector& p) {
       return !p.has_sqrt5 && !p.has_sqrt_minus7 && !p.has_omega && p.sum_two_squares && p.has_2zeta2_rou;
     }},
    {"PGL3:(v)", 12,
     [](const PropertyVector& p) {
       return p.sum_two_squares && !p.has_omega && !p.has_sqrt5 && !p.has_sqrt_minus7 && !p.has_2zeta2_rou;
     }},
    {"PGL3:(vi)", 6,
     [](const PropertyVector& p) { return !p.sum_two_squares && !p.has_omega && !p.has_sqrt5 && !p.has_sqrt_minus7; }},
};

const std::vector<Clause> kGl2 = {
    {"GL2:(i)", 60, [](const PropertyVector& p) { return p.sum_two_squares && p.has_sqrt5; }},
    {"GL2:(ii)", 24, [](const PropertyVector& p) { return p.sum_two_squares && !p.has_sqrt5 && p.has_2zeta2_rou; }},
    {"GL2:(iii)", 12, [](const PropertyVector& p) { return p.sum_two_squares && !p.has_sqrt5 && !p.has_2zeta2_rou; }},
    {"GL2:(iv)", 2, [](const PropertyVector& p) { return !p.sum_two_squares; }},
};

const std::vector<Clause> kSl2 = {
    {"SL2:(i)", 60, [](const PropertyVector& p) { return p.sum_two_squares && p.has_sqrt5; }},
    {"SL2:(ii)", 24,
     [](const PropertyVector& p) {
       return p.sum_two_squares && !p.has_sqrt5 && (p.has_sqrt2 || p.has_sqrt_minus2);
     }},
    {"SL2:(iii)", 12,
     [](const PropertyVector& p) {
       return p.sum_two_squares && !p.has_sqrt5 && !p.has_sqrt2 && !p.has_sqrt_minus2;
     }},
    {"SL2:(iv)", 2, [](const PropertyVector& p) { return !p.sum_two_squares; }},
};

const std::vector<Clause> kPgl2 = {
    {"PGL2:(i)", 60, [](const PropertyVector& p) { return p.sum_two_squares && p.has_sqrt5; }},
    {"PGL2:(ii)", 6, [](const PropertyVector& p) { return p.sum_two_squares && !p.has_sqrt5; }},
    {"PGL2:(iii)", 2, [](const PropertyVector& p) { return !p.sum_two_squares; }},
};

JordanAnswer answer(i64 value, SubgroupType family, std::string name, std::string branch) {
  return JordanAnswer{value, family, std::move(name), std::move(branch)};
}

void pre_check(AmbientGroup g, const PropertyVector& p, CascadeMode mode, const JordanAnswer& a) {
  if (mode == CascadeMode::Total) return;
  if (!p.realizable()) throw Error(Errc::UnrealizableVector, "property vector is not realizable: " + p.to_string());
  if (mode != CascadeMode::Strict) return;
  auto hit = satisfied_clauses(g, p);
  if (hit.size() != 1 || hit.front() != a.branch)
    throw Error(Errc::UnrealizableVector, std::string(ambient_name(g)) + ": " + std::to_string(hit.size()) +
                                              " clauses hold for " + p.to_string());
}

}  // namespace

JordanAnswer jordan_pgl3(const PropertyVector& p, CascadeMode mode) {
  JordanAnswer a;
  if (p.has_omega && p.has_sqrt5)
    a = answer(360, SubgroupType::L, "A6", "PGL3:(i)");
  else if (p.has_sqrt_minus7)
    a = answer(168, SubgroupType::I, "PSL2(F7)", "PGL3:(ii)");
  else if (p.has_sqrt5)
    a = answer(60, SubgroupType::H, "A5", "PGL3:(iii)");
  else if (p.has_omega)
    a = answer(24, SubgroupType::G, "Hessian group", "PGL3:(iv)(a)");
  else if (p.sum_two_squares && p.has_2zeta2_rou)
    a = answer(24, SubgroupType::B, "GL2 lift of S4", "PGL3:(iv)(b)");
  else if (p.sum_two_squares)
    a = answer(12, SubgroupType::B, "binary tetrahedral group", "PGL3:(v)");
  else
    a = answer(6, SubgroupType::D, "S4", "PGL3:(vi)");
  pre_check(AmbientGroup::PGL3, p, mode, a);
  return a;
}

JordanAnswer jordan_gl2(const PropertyVector& p, CascadeMode mode) {
  JordanAnswer a;
  if (p.sum_two_squares && p.has_sqrt5)
    a = answer(60, SubgroupType::A5, "binary icosahedral group", "GL2:(i)");
  else if (p.sum_two_squares && p.has_2zeta2_rou)
    a = answer(24, SubgroupType::S4, "GL2 lift of S4", "GL2:(ii)");
  else if (p.sum_two_squares)
    a = answer(12, SubgroupType::A4, "binary tetrahedral group", "GL2:(iii)");
  else
    a = answer(2, SubgroupType::Dihedral, "S3", "GL2:(iv)");
  pre_check(AmbientGroup::GL2, p, mode, a);
  return a;
}

JordanAnswer jordan_sl2(const PropertyVector& p, CascadeMode mode) {
  JordanAnswer a;
  if (p.sum_two_squares && p.has_sqrt5)
    a = answer(60, SubgroupType::A5, "binary icosahedral group", "SL2:(i)");
  else if (p.sum_two_squares && (p.has_sqrt2 || p.has_sqrt_minus2))
    a = answer(24, SubgroupType::S4, "binary octahedral group", "SL2:(ii)");
  else if (p.sum_two_squares)
    a = answer(12, SubgroupType::A4, "binary tetrahedral group", "SL2:(iii)");
  else
    a = answer(2, SubgroupType::Dihedral, "binary dihedral group", "SL2:(iv)");
  pre_check(AmbientGroup::SL2, p, mode, a);
  return a;
}

JordanAnswer jordan_pgl2(const PropertyVector& p, CascadeMode mode) {
  JordanAnswer a;
  if (p.sum_two_squares && p.has_sqrt5)
    a = answer(60, SubgroupType::A5, "A5", "PGL2:(i)");
  else if (p.sum_two_squares)
    a = answer(6, SubgroupType::S4, "S4", "PGL2:(ii)");
  else
    a = answer(2, SubgroupType::Dihedral, "D3", "PGL2:(iii)");
  pre_check(AmbientGroup::PGL2, p, mode, a);
  return a;
}

JordanAnswer jordan(AmbientGroup g, const PropertyVector& p, CascadeMode mode) {
  switch (g) {
    case AmbientGroup::GL2: return jordan_gl2(p, mode);
    case AmbientGroup::SL2: return jordan_sl2(p, mode);
    case AmbientGroup::PGL2: return jordan_pgl2(p, mode);
    case AmbientGroup::PGL3: return jordan_pgl3(p, mode);
  }
  throw Error(Errc::BadParameters, "unknown ambient group");
}

const std::vector<Clause>& clauses(AmbientGroup g) {
  switch (g) {
    case AmbientGroup::GL2: return kGl2;
    case AmbientGroup::SL2: return kSl2;
    case AmbientGroup::PGL2: return kPgl2;
    case AmbientGroup::PGL3: return kPgl3;
  }
  throw Error(Errc::BadParameters, "unknown ambient group");
}

std::vector<std::string> satisfied_clauses(AmbientGroup g, const PropertyVector& p) {
  std::vector<std::string> out;
  for (const auto& c : clauses(g))
    if (c.holds(p)) out.push_back(c.label);
  return out;
}

bool pgl2_subgroup_exists(const FieldDescriptor& K, SubgroupType t, std::optional<i64> r) {
  switch (t) {
    case SubgroupType::Cyclic:
    case SubgroupType::Dihedral:
      if (!r) throw Error(Errc::MissingOrder, "cyclic and dihedral types need an order r");
      if (*r < 1) throw Error(Errc::OutOfRange, "order must be positive");
      // r <= 2: C_1, C_2, D_1, D_2 all live in PGL_2(Q)
      return *r <= 2 || has_real_cyclotomic(K, *r);
    case SubgroupType::A4:
    case SubgroupType::S4: return minus_one_sum_two_squares(K);
    case SubgroupType::A5: return minus_one_sum_two_squares(K) && has_sqrt(K, 5);
    default: throw Error(Errc::BadParameters, std::string(type_name(t)) + " is not a PGL2 type");
  }
}

bool pgl3_primitive_exists(const FieldDescriptor& K, SubgroupType t) {
  switch (t) {
    case SubgroupType::E:
    case SubgroupType::F:
    case SubgroupType::G: return has_zeta(K, 3);
    case SubgroupType::H: return has_sqrt(K, 5);
    case SubgroupType::I: return has_sqrt(K, -7);
    case SubgroupType::L: return has_sqrt(K, 5) && has_zeta(K, 3);
    default: throw Error(Errc::NotPrimitiveTag, std::string(type_name(t)) + " is not a primitive type");
  }
}

i64 finite_jordan_formula(FiniteFamily f, i64 n) {
  auto factorial = [](i64 k) {
    i64 r = 1;
    for (i64 x = 2; x <= k; ++x) r *= x;
    return r;
  };
  switch (f) {
    case FiniteFamily::Symmetric:
    case FiniteFamily::Alternating: {
      if (n < 4 || n > 20) throw Error(Errc::OutOfRange, "S_n / A_n formula needs 4 <= n <= 20");
      if (n == 4) return f == FiniteFamily::Symmetric ? 6 : 3;
      return f == FiniteFamily::Symmetric ? factorial(n) : factorial(n) / 2;
    }
    case FiniteFamily::Dihedral:
    case FiniteFamily::CentralExtDihedral:
      if (n < 3) throw Error(Errc::OutOfRange, "dihedral formula needs n >= 3");
      return 2;
    case FiniteFamily::CentralExtA5: return 60;
    case FiniteFamily::GL2OverA4: return 12;
    case FiniteFamily::GL2OverS4: return 24;
    case FiniteFamily::Hessian: return 24;
  }
  throw Error(Errc::OutOfRange, "unknown family");
}

}  // namespace jordanum
