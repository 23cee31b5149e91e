#include "hospfin/scenario_json.hpp"

#include <fstream>
#include <sstream>

#include "hospfin/error.hpp"

namespace hospfin {

namespace {

using nlohmann::json;

const json& member(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw SchemaError(std::string("missing key '") + key + "'");
  return *it;
}

Rational rational_field(const json& value, const std::string& field) {
  if (!value.is_string()) throw SchemaError(field + ": rationals must be \"num/den\" strings");
  try {
    return parse_rational(value.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw SchemaError(field + ": " + e.what());
  }
}

std::vector<Rational> rational_list(const json& value, const std::string& field) {
  if (!value.is_array()) throw SchemaError(field + ": expected an array");
  std::vector<Rational> out;
  for (const auto& v : value) out.push_back(rational_field(v, field));
  return out;
}

Matrix<Rational> rational_matrix(const json& value, const std::string& field) {
  if (!value.is_array()) throw SchemaError(field + ": expected an array of arrays");
  Matrix<Rational> out;
  for (const auto& row : value) out.push_back(rational_list(row, field));
  return out;
}

std::vector<std::string> string_list(const json& value, const std::string& field) {
  if (!value.is_array()) throw SchemaError(field + ": expected an array of strings");
  std::vector<std::string> out;
  for (const auto& v : value) {
    if (!v.is_string()) throw SchemaError(field + ": expected an array of strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

nlohmann::ordered_json rational_array(const std::vector<Rational>& values) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

}  // namespace

ScenarioInstance scenario_from_json(const json& doc) {
  if (!doc.is_object()) throw SchemaError("scenario document must be a JSON object");
  const auto& schema = member(doc, "schema");
  if (!schema.is_number_integer() || schema.get<int>() != kScenarioSchemaVersion) {
    throw SchemaError("schema: unsupported version " + schema.dump() + " (expected " +
                      std::to_string(kScenarioSchemaVersion) + ")");
  }

  ScenarioData data;
  data.hospitals = string_list(member(doc, "hospitals"), "hospitals");
  data.wards = string_list(member(doc, "wards"), "wards");
  data.population = rational_list(member(doc, "population"), "population");

  const auto& sizes = member(doc, "group_sizes");
  if (!sizes.is_array()) throw SchemaError("group_sizes: expected an array of integers");
  for (const auto& v : sizes) {
    if (!v.is_number_integer()) throw SchemaError("group_sizes: expected an array of integers");
    data.group_sizes.push_back(v.get<std::int64_t>());
  }

  data.excel_cost = rational_matrix(member(doc, "excel_cost"), "excel_cost");
  const auto& internal = member(doc, "internal_cost");
  if (!internal.is_array()) throw SchemaError("internal_cost: expected a nested array");
  for (const auto& block : internal) data.internal_cost.push_back(rational_matrix(block, "internal_cost"));
  data.out_cost = rational_matrix(member(doc, "out_cost"), "out_cost");
  data.budget = rational_field(member(doc, "budget"), "budget");

  return ScenarioInstance(std::move(data));
}

nlohmann::ordered_json scenario_to_json(const ScenarioInstance& inst) {
  const auto& data = inst.data();
  nlohmann::ordered_json doc;
  doc["schema"] = kScenarioSchemaVersion;
  doc["hospitals"] = data.hospitals;
  doc["wards"] = data.wards;
  doc["population"] = rational_array(data.population);
  doc["group_sizes"] = data.group_sizes;
  auto excel = nlohmann::ordered_json::array();
  for (const auto& row : data.excel_cost) excel.push_back(rational_array(row));
  doc["excel_cost"] = excel;
  auto internal = nlohmann::ordered_json::array();
  for (const auto& block : data.internal_cost) {
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : block) rows.push_back(rational_array(row));
    internal.push_back(rows);
  }
  doc["internal_cost"] = internal;
  auto out = nlohmann::ordered_json::array();
  for (const auto& row : data.out_cost) out.push_back(rational_array(row));
  doc["out_cost"] = out;
  doc["budget"] = to_string(data.budget);
  return doc;
}

ScenarioInstance parse_scenario(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
  return scenario_from_json(doc);
}

ScenarioInstance load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot read scenario file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario(buffer.str());
}

}  // namespace hospfin
