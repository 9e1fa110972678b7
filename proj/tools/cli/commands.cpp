#include "commands.hpp"

#include <fstream>
#include <ostream>

#include "CLI11.hpp"
#include "field_dsl.hpp"
#include "jordanum/constructions.hpp"
#include "jordanum/error.hpp"
#include "report.hpp"

namespace jordanum::cli {

using nlohmann::json;

namespace {

std::vector<AmbientGroup> groups_from(const std::string& g) {
  if (g.empty() || g == "all") return {std::begin(kAllAmbients), std::end(kAllAmbients)};
  return {parse_ambient(g)};
}

bool all_matched(const Report& r) {
  for (const auto& a : r.ambients)
    if (!a.verification || !a.verification->matched) return false;
  return true;
}

int cmd_props(const FieldDescriptor& K, bool as_json, std::ostream& out) {
  const PropertyVector p = property_vector(K);
  if (as_json) {
    out << json{{"field", K.to_string()}, {"descriptor", descriptor_json(K)}, {"properties", properties_json(p)}}.dump()
        << '\n';
  } else {
    out << "field: " << K.to_string() << '\n' << properties_text(p);
  }
  return 0;
}

int cmd_report(const FieldDescriptor& K, const std::string& group, bool witness, bool verify, std::size_t cap,
               bool as_json, std::ostream& out) {
  Report r = make_report(K, groups_from(group));
  if (witness || verify) attach_witnesses(r, verify, cap);
  if (as_json) out << report_json(r).dump() << '\n';
  else if (!witness && !verify && r.ambients.size() == 1) out << r.ambients.front().answer.value << '\n';
  else out << report_text(r);
  return verify && !all_matched(r) ? 2 : 0;
}

int cmd_order_n(const FieldDescriptor& K, i64 n, bool as_json, std::ostream& out) {
  const CyclicWitness w = pgl3_has_cyclic_of_order(K, n);
  std::optional<ExactMatrix> m;
  i64 order = 0;
  if (w.exists && w.lambda && w.eta) {
    m = cyclic_witness_matrix(*w.lambda, *w.eta);
    order = matrix_order(*m, n);
  }
  if (as_json) {
    json j{{"field", K.to_string()}, {"n", n}, {"exists", w.exists}};
    if (w.exists) {
      j["t"] = w.t;
      j["i"] = w.i;
      j["j"] = w.j;
      if (m) {
        j["lambda"] = w.lambda->to_string();
        j["eta"] = w.eta->to_string();
        j["matrix"] = witness_json({*m});
        j["matrix_order"] = order;
      }
    }
    out << j.dump() << '\n';
  } else {
    out << (w.exists ? "true" : "false") << '\n';
    if (w.exists && m) {
      out << "  lambda = " << w.lambda->to_string() << "\n  eta = " << w.eta->to_string() << '\n'
          << "  matrix = " << m->to_string() << " (order " << order << ")\n";
    }
  }
  return 0;
}

int cmd_table(const std::string& path, bool verify, std::size_t cap, bool as_json, std::ostream& out,
              std::ostream& err) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::BadParameters, "cannot read " + path);
  std::string line;
  int code = 0;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      Report r = make_report(parse_field(line), groups_from("all"));
      if (verify) attach_witnesses(r, true, cap);
      if (as_json) {
        out << report_json(r).dump() << '\n';
      } else {
        out << r.field.to_string();
        for (const auto& a : r.ambients) {
          out << '\t' << ambient_name(a.ambient) << '=' << a.answer.value;
          if (a.verification) out << (a.verification->matched ? "(ok)" : "(MISMATCH)");
        }
        out << '\n';
      }
      if (verify && !all_matched(r)) code = std::max(code, 2);
    } catch (const Error& e) {
      if (as_json)
        out << nlohmann::json{{"line", lineno}, {"input", line}, {"error", e.what()}}.dump() << '\n';
      err << path << ':' << lineno << ": " << e.what() << '\n';
      code = 1;
    }
  }
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Jordan constants of GL2, SL2, PGL2 and PGL3 over characteristic-zero fields", "jordanum"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit JSON");
  std::string field, group, file;
  i64 n = 0;
  std::size_t cap = default_cap();
  bool table_verify = false;

  auto* props = app.add_subcommand("props", "Field property vector");
  props->add_option("field", field, "Field, e.g. \"QQ(sqrt(5), zeta(3))\"")->required();
  auto* jord = app.add_subcommand("jordan", "Jordan constants from the decision trees");
  jord->add_option("field", field)->required();
  jord->add_option("--group", group, "gl2|sl2|pgl2|pgl3|all");
  auto* wit = app.add_subcommand("witness", "Witness subgroup generators");
  wit->add_option("field", field)->required();
  wit->add_option("--group", group)->required();
  auto* ver = app.add_subcommand("verify", "Close the witness and brute-force its Jordan constant");
  ver->add_option("field", field)->required();
  ver->add_option("--group", group);
  ver->add_option("--cap", cap, "Closure size limit");
  auto* ord = app.add_subcommand("order-n", "Cyclic subgroup of odd prime order n in PGL3");
  ord->add_option("field", field)->required();
  ord->add_option("--n", n)->required();
  auto* tab = app.add_subcommand("table", "One report per field listed in a file");
  tab->add_option("--file", file)->required();
  tab->add_flag("--verify", table_verify);
  tab->add_option("--cap", cap);
  for (auto* sub : {props, jord, wit, ver, ord, tab}) sub->add_flag("--json", as_json, "Emit JSON");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (tab->parsed()) return cmd_table(file, table_verify, cap, as_json, out, err);
    const FieldDescriptor K = parse_field(field);
    if (props->parsed()) return cmd_props(K, as_json, out);
    if (jord->parsed()) return cmd_report(K, group, false, false, cap, as_json, out);
    if (wit->parsed()) return cmd_report(K, group, true, false, cap, as_json, out);
    if (ver->parsed()) return cmd_report(K, group, false, true, cap, as_json, out);
    if (ord->parsed()) return cmd_order_n(K, n, as_json, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace jordanum::cli
