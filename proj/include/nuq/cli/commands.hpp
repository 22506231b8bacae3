#pragma once

#include <string>
#include <vector>

#include "nuq/cli/config.hpp"

namespace nuq::cli {

/// Each command validates the config, writes into config.out and returns the
/// paths it wrote. CSV files start with '# format_version' and '# config'
/// comment lines; JSON files carry the same two fields at top level.
std::vector<std::string> cmd_exact(const RunConfig& c);
std::vector<std::string> cmd_trotter(const RunConfig& c);
std::vector<std::string> cmd_simulate(const RunConfig& c);
/// Runs the simulation as well, so its outputs are rewritten alongside.
std::vector<std::string> cmd_mitigate(const RunConfig& c);
std::vector<std::string> cmd_bounds(const RunConfig& c);
std::vector<std::string> cmd_circuit(const RunConfig& c);

/// Shortest text that round-trips a double ("nan", "inf" for non-finite).
std::string format_double(double x);

}  // namespace nuq::cli
