#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "hospfin/scenario.hpp"

namespace hospfin {

inline constexpr int kScenarioSchemaVersion = 1;

/// Throws SchemaError for structural problems (missing keys, wrong types,
/// unsupported schema) and InvalidInstance for data that fails validation.
ScenarioInstance scenario_from_json(const nlohmann::json& doc);
nlohmann::ordered_json scenario_to_json(const ScenarioInstance& inst);

ScenarioInstance load_scenario(const std::filesystem::path& path);
ScenarioInstance parse_scenario(const std::string& text);

}  // namespace hospfin
