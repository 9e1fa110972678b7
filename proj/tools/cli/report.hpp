#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jordanum/constructions.hpp"
#include "jordanum/field.hpp"
#include "jordanum/field_oracle.hpp"
#include "jordanum/jordan_laws.hpp"
#include "json.hpp"

namespace jordanum::cli {

struct Verification {
  i64 closure_order = 0;
  i64 bruteforce_jordan = 0;
  bool matched = false;
};

struct AmbientReport {
  AmbientGroup ambient;
  JordanAnswer answer;
  std::optional<WitnessRecipe> recipe;
  std::optional<Verification> verification;
  std::optional<std::string> failure;  // why no witness could be verified
};

struct Report {
  FieldDescriptor field;
  PropertyVector properties;
  std::vector<AmbientReport> ambients;
};

Report make_report(const FieldDescriptor& K, const std::vector<AmbientGroup>& groups);
// Builds the witness for every ambient; with verify also closes it.
void attach_witnesses(Report& r, bool verify, std::size_t cap);

nlohmann::json rational_json(const Rational& q);
nlohmann::json descriptor_json(const FieldDescriptor& K);
nlohmann::json properties_json(const PropertyVector& p);
// {"level": M, "generators": [gen][row][col][k] = [num, den]}
nlohmann::json witness_json(const std::vector<ExactMatrix>& gens);
nlohmann::json recipe_json(const WitnessRecipe& r);
nlohmann::json report_json(const Report& r);

std::string properties_text(const PropertyVector& p);
std::string report_text(const Report& r);

}  // namespace jordanum::cli
