#pragma once

#include <string>

#include <json.hpp>

namespace nuq::cli {

/// Reads the TOML subset used by run configs into JSON: [table] and
/// [a.b] headers, bare or quoted keys, strings, integers, floats, booleans,
/// and (nested, multi-line) arrays. Throws ConfigError naming the line.
nlohmann::json parse_toml(const std::string& text);

}  // namespace nuq::cli
