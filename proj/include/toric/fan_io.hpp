#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "toric/fan.hpp"

namespace toric {

/// Fan interchange format: {"dim": n, "rays": [[...], ...], "max_cones": [[i, ...], ...]}
/// with 0-based indices. Unknown keys are rejected. Entries must fit in 64 bits.
[[nodiscard]] Fan fan_from_json(const nlohmann::json& j);
[[nodiscard]] nlohmann::json to_json(const Fan& f);

[[nodiscard]] nlohmann::json to_json(const ValidationReport& r);
[[nodiscard]] nlohmann::json to_json(const Integer& v);
[[nodiscard]] nlohmann::json to_json(const Cone& c);

/// Reads and parses a JSON document; throws InvalidInput naming the file.
[[nodiscard]] nlohmann::json read_json_file(const std::filesystem::path& path);
[[nodiscard]] Fan read_fan_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace toric
