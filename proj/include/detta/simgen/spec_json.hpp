#pragma once

#include <filesystem>

#include <nlohmann/json.hpp>

#include "detta/simgen/spec.hpp"

namespace detta::simgen {

void to_json(nlohmann::json& j, const ScenarioSpec& spec);
void from_json(const nlohmann::json& j, ScenarioSpec& spec);

/// Throws ConfigError on unreadable or malformed files.
ScenarioSpec load_spec(const std::filesystem::path& path);
void save_spec(const ScenarioSpec& spec, const std::filesystem::path& path);

}  // namespace detta::simgen
