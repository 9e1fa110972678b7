#include <cstdio>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "doctest.h"
#include "field_dsl.hpp"
#include "json.hpp"
#include "jordanum/constructions.hpp"
#include "jordanum/field_oracle.hpp"
#include "oracles.hpp"
#include "report.hpp"

using namespace jordanum;
using namespace jordanum::cli;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

FieldDescriptor Q() { return FieldDescriptor::rationals(); }

std::size_t failure_offset(std::string_view text) {
  try {
    parse_field(text);
  } catch (const ParseFailure& e) {
    return e.offset();
  }
  return std::string::npos;
}

Errc failure_code(std::string_view text) {
  try {
    parse_field(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error for " << text);
  return Errc::ParseError;
}

}  // namespace

TEST_CASE("parse examples") {
  CHECK(parse_field("QQ(sqrt(5), zeta(3))") == FieldDescriptor::abelian(15, {1, 4}));
  CHECK(parse_field("QQ") == Q());
  CHECK(parse_field("RR") == FieldDescriptor::reals());
  CHECK(parse_field("CC") == FieldDescriptor::complexes());
  CHECK(parse_field("QQ(i)") == adjoin_zeta(Q(), 4));
  CHECK(parse_field("QQ(omega)") == adjoin_zeta(Q(), 3));
  CHECK(parse_field("  QQ ( sqrt( -7 ) )  ") == adjoin_sqrt(Q(), Rational(-7)));
  CHECK(parse_field("QQ(sqrt(-20/9))") == adjoin_sqrt(Q(), Rational(-5)));
  CHECK(parse_field("QQ(sqrt(5), t)") == FieldDescriptor::function_field(adjoin_sqrt(Q(), Rational(5))));
  CHECK(parse_field("QQ(zeta(8))") == adjoin_zeta(Q(), 8));
  const auto e = parse_field_expr("QQ(i, sqrt(2))");
  CHECK(e.adjunctions.size() == 2);
  CHECK(std::holds_alternative<NamedConst>(e.adjunctions[0]));
  CHECK(std::get<Sqrt>(e.adjunctions[1]).radicand == Rational(2));
  CHECK(e.descriptor == adjoin_zeta(Q(), 8));
}

TEST_CASE("parse errors carry offsets") {
  CHECK(failure_code("QQ(sqrt(0))") == Errc::SemanticError);
  CHECK(failure_code("RR(sqrt(-1))") == Errc::SemanticError);
  CHECK(failure_code("QQ(zeta(0))") == Errc::SemanticError);
  CHECK(failure_code("QQ(t, t)") == Errc::SemanticError);
  CHECK(failure_code("QQ(") == Errc::ParseError);
  CHECK(failure_offset("QQ(") == 3);
  CHECK(failure_offset("QQ(sqrt(") == 8);
  CHECK(failure_offset("ZZ") == 0);
  CHECK(failure_offset("QQ(i,)") == 5);
  CHECK(failure_offset("QQ(i) x") == 6);
  try {
    parse_field("QQ(foo)");
    FAIL("expected a parse failure");
  } catch (const ParseFailure& e) {
    CHECK(e.offset() == 3);
    CHECK_FALSE(e.expected().empty());
    CHECK(std::string(e.what()).find("at byte 3") != std::string::npos);
  }
}

TEST_CASE("canonical strings round trip") {
  std::uint64_t state = 9;
  for (int k = 0; k < 100; ++k) {
    const auto K = oracle::random_abelian(state, 120);
    CHECK(parse_field(K.to_string()) == K);
    const auto F = FieldDescriptor::function_field(K, 1 + k % 3);
    CHECK(parse_field(F.to_string()) == F);
  }
  for (const auto& K : {FieldDescriptor::reals(), FieldDescriptor::complexes(), Q()})
    CHECK(parse_field(K.to_string()) == K);
  CHECK(parse_field_expr("Abelian(m=15; H=1,4)").canonical);
}

TEST_CASE("headline values") {
  CHECK(run_cli({"jordan", "CC", "--group", "pgl3"}).out == "360\n");
  CHECK(run_cli({"jordan", "RR", "--group", "pgl3"}).out == "60\n");
  CHECK(run_cli({"jordan", "QQ", "--group", "pgl3"}).out == "6\n");
}

TEST_CASE("json report schema") {
  for (const auto& row : oracle::battery()) {
    CAPTURE(row.name);
    const auto r = run_cli({"jordan", row.dsl, "--json"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("field").is_string());
    CHECK(j.contains("descriptor"));
    CHECK(j.at("properties").size() == 7);
    for (const auto& key : {"has_2zeta2_rou", "has_omega", "has_sqrt2", "has_sqrt5", "has_sqrt_minus2",
                            "has_sqrt_minus7", "sum_two_squares"})
      CHECK(j.at("properties").at(key).is_boolean());
    CHECK(j.at("jordan").at("gl2").at("value") == row.gl2);
    CHECK(j.at("jordan").at("sl2").at("value") == row.sl2);
    CHECK(j.at("jordan").at("pgl2").at("value") == row.pgl2);
    CHECK(j.at("jordan").at("pgl3").at("value") == row.pgl3);
    CHECK(j.at("jordan").at("pgl3").at("branch").get<std::string>().rfind("PGL3:(", 0) == 0);
  }
  const json q = json::parse(run_cli({"jordan", "QQ(sqrt(5))", "--json"}).out);
  CHECK(q.at("descriptor") == json::parse(R"({"m": 5, "H": [1, 4]})"));
  CHECK(json::parse(run_cli({"props", "RR", "--json"}).out).at("descriptor").is_null());
}

TEST_CASE("witness serialization") {
  const auto r = run_cli({"witness", "QQ", "--group", "pgl3", "--json"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  const json& w = j.at("witness");
  CHECK(w.at("level") == 1);
  CHECK(w.at("generators").size() == 2);
  CHECK(w.at("generators")[0][0][0][0] == json::parse("[-1, 1]"));
  CHECK(j.at("recipe").at("name") == "S4 permutation representation");
  const json k = witness_json(pgl3_klein().generators);
  CHECK(k.at("level") == 7);
  CHECK(k.at("generators")[0][0][0].size() == 6);
  CHECK(rational_json(make_rational(-3, 4)) == json::parse("[-3, 4]"));
}

TEST_CASE("verify exit codes") {
  auto r = run_cli({"verify", "QQ", "--group", "pgl3"});
  CHECK(r.code == 0);
  r = run_cli({"verify", "QQ(sqrt(-7))", "--json"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  for (const auto& g : {"gl2", "sl2", "pgl2", "pgl3"}) CHECK(j.at("witnesses").at(g).at("verification").at("matched") == true);
  CHECK(j.at("witnesses").at("pgl3").at("verification").at("closure_order") == 168);
  r = run_cli({"verify", "QQ", "--group", "sl2"});
  CHECK(r.code == 2);
  r = run_cli({"verify", "QQ(i)", "--group", "pgl3", "--cap", "10"});
  CHECK(r.code == 1);
  CHECK(r.err.find("CapExceeded") != std::string::npos);
}

TEST_CASE("order-n") {
  auto r = run_cli({"order-n", "QQ(sqrt(-7))", "--n", "7", "--json"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j.at("exists") == true);
  CHECK(j.at("matrix_order") == 7);
  CHECK(j.at("i") == 2);
  CHECK(j.at("j") == 4);
  r = run_cli({"order-n", "QQ", "--n", "5", "--json"});
  CHECK(json::parse(r.out).at("exists") == false);
  CHECK(run_cli({"order-n", "QQ", "--n", "9"}).code == 1);
}

TEST_CASE("errors and usage") {
  auto r = run_cli({"jordan", "QQ(sqrt("});
  CHECK(r.code == 1);
  CHECK(r.err.find("ParseError") != std::string::npos);
  CHECK(run_cli({"jordan", "QQ", "--group", "gl9"}).code == 1);
  CHECK(run_cli({"bogus"}).code == 1);
  CHECK(run_cli({"--help"}).code == 0);
  CHECK(run_cli({}).code == 1);
}

TEST_CASE("table keeps input order") {
  const std::string path = "jordanum_table_test.txt";
  {
    std::ofstream f(path);
    f << "QQ\n\nCC\nQQ(sqrt(\nQQ(sqrt(-7))\n";
  }
  const auto r = run_cli({"table", "--file", path, "--json"});
  std::remove(path.c_str());
  std::istringstream lines(r.out);
  std::vector<json> rows;
  for (std::string line; std::getline(lines, line);)
    if (!line.empty()) rows.push_back(json::parse(line));
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].at("field") == "QQ");
  CHECK(rows[1].at("field") == "CC");
  CHECK(rows[2].contains("error"));
  CHECK(rows[3].at("jordan").at("pgl3").at("value") == 168);
  CHECK(r.code == 1);
  CHECK(run_cli({"table", "--file", "/nonexistent/list"}).code == 1);
}
