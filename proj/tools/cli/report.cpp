#include "report.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "jordanum/error.hpp"

namespace jordanum::cli {

using nlohmann::json;

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

const std::pair<const char*, bool PropertyVector::*> kProps[] = {
    {"sum_two_squares", &PropertyVector::sum_two_squares}, {"has_sqrt5", &PropertyVector::has_sqrt5},
    {"has_omega", &PropertyVector::has_omega},             {"has_sqrt_minus7", &PropertyVector::has_sqrt_minus7},
    {"has_2zeta2_rou", &PropertyVector::has_2zeta2_rou},   {"has_sqrt2", &PropertyVector::has_sqrt2},
    {"has_sqrt_minus2", &PropertyVector::has_sqrt_minus2},
};

}  // namespace

Report make_report(const FieldDescriptor& K, const std::vector<AmbientGroup>& groups) {
  Report r{K, property_vector(K), {}};
  for (auto g : groups) r.ambients.push_back(AmbientReport{g, jordan(g, r.properties), {}, {}, {}});
  return r;
}

void attach_witnesses(Report& r, bool verify, std::size_t cap) {
  for (auto& a : r.ambients) {
    try {
      a.recipe = witness_for_field(r.field, a.ambient);
    } catch (const Error& e) {
      if (e.code() != Errc::NoWitness && e.code() != Errc::NoWitnessFound) throw;
      a.failure = e.what();
      if (verify) a.verification = Verification{0, 0, false};
      continue;
    }
    if (!verify) continue;
    const RecipeCheck c = verify_recipe(*a.recipe, cap);
    a.verification = Verification{c.closure_order, c.bruteforce_jordan,
                                  c.fields_ok && c.bruteforce_jordan == a.answer.value};
  }
}

json rational_json(const Rational& q) {
  auto part = [](const Integer& z) -> json {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
  };
  return json::array({part(q.get_num()), part(q.get_den())});
}

json descriptor_json(const FieldDescriptor& K) {
  switch (K.kind()) {
    case FieldDescriptor::Kind::Reals:
    case FieldDescriptor::Kind::Complexes: return nullptr;
    case FieldDescriptor::Kind::FunctionField: return descriptor_json(K.constants());
    case FieldDescriptor::Kind::Abelian: break;
  }
  return json{{"m", K.conductor()}, {"H", K.subgroup()}};
}

json properties_json(const PropertyVector& p) {
  json j = json::object();
  for (const auto& [name, field] : kProps) j[name] = p.*field;
  return j;
}

json witness_json(const std::vector<ExactMatrix>& gens) {
  i64 level = 1;
  for (const auto& g : gens) level = lcm(level, g.level());
  json out = json::array();
  for (const auto& g0 : gens) {
    const ExactMatrix g = g0.lifted(level);
    json rows = json::array();
    for (std::size_t r = 0; r < g.dim(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < g.dim(); ++c) {
        json coeffs = json::array();
        std::vector<Rational> cs = g(r, c).lifted(level).coeffs();
        cs.resize(static_cast<std::size_t>(euler_phi(level)));
        for (const auto& q : cs) coeffs.push_back(rational_json(q));
        row.push_back(coeffs);
      }
      rows.push_back(row);
    }
    out.push_back(rows);
  }
  return json{{"level", level}, {"generators", out}};
}

json recipe_json(const WitnessRecipe& r) {
  json j{{"name", r.name},
         {"ambient", std::string(ambient_name(r.ambient))},
         {"field_required", r.field_required.to_string()},
         {"projective", r.projective},
         {"expected_jordan", r.expected_jordan}};
  j["expected_order"] = r.expected_order ? json(*r.expected_order) : json(nullptr);
  return j;
}

json report_json(const Report& r) {
  json j{{"field", r.field.to_string()},
         {"descriptor", descriptor_json(r.field)},
         {"properties", properties_json(r.properties)}};
  json jordan = json::object();
  for (const auto& a : r.ambients) jordan[lower(ambient_name(a.ambient))] = {{"value", a.answer.value}, {"branch", a.answer.branch}};
  j["jordan"] = jordan;
  const bool any_witness = std::any_of(r.ambients.begin(), r.ambients.end(),
                                       [](const auto& a) { return a.recipe || a.failure; });
  if (!any_witness) return j;
  // a single ambient is reported flat, several are keyed by group
  auto fill = [](json& dst, const AmbientReport& a) {
    if (a.recipe) {
      dst["witness"] = witness_json(a.recipe->generators);
      dst["recipe"] = recipe_json(*a.recipe);
    }
    if (a.failure) dst["error"] = *a.failure;
    if (a.verification)
      dst["verification"] = {{"closure_order", a.verification->closure_order},
                             {"bruteforce_jordan", a.verification->bruteforce_jordan},
                             {"matched", a.verification->matched}};
  };
  if (r.ambients.size() == 1) {
    fill(j, r.ambients.front());
  } else {
    json per = json::object();
    for (const auto& a : r.ambients) {
      json x = json::object();
      fill(x, a);
      per[lower(ambient_name(a.ambient))] = x;
    }
    j["witnesses"] = per;
  }
  return j;
}

std::string properties_text(const PropertyVector& p) {
  std::ostringstream os;
  for (const auto& [name, field] : kProps) os << "  " << name << " = " << (p.*field ? "true" : "false") << '\n';
  return os.str();
}

std::string report_text(const Report& r) {
  std::ostringstream os;
  os << "field: " << r.field.to_string() << '\n';
  for (const auto& a : r.ambients) {
    os << ambient_name(a.ambient) << ": J = " << a.answer.value << "  [" << a.answer.branch << ", "
       << a.answer.family_name << "]\n";
    if (a.recipe) {
      os << "  witness: " << a.recipe->name << " over " << a.recipe->field_required.to_string()
         << (a.recipe->projective ? " (projective)" : "") << '\n';
    }
    if (a.failure) os << "  no witness: " << *a.failure << '\n';
    if (a.verification && a.recipe)
      os << "  closure order " << a.verification->closure_order << ", brute-force J = "
         << a.verification->bruteforce_jordan << (a.verification->matched ? ", matched" : ", MISMATCH") << '\n';
  }
  return os.str();
}

}  // namespace jordanum::cli
