#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cvirus/optimizer.hpp"
#include "cvirus/scenario.hpp"

namespace cvirus {

/// Raw key=value settings. Keys are the long flag names without dashes.
using ConfigValues = std::map<std::string, std::string, std::less<>>;

/// Every key accepted in a config file or as a --flag.
const std::vector<std::string_view>& config_keys();

/// Reads flat `key = value` text. Blank lines and lines starting with '#'
/// are skipped. Throws ConfigError for unknown keys or malformed lines and
/// Error(io_error) when the file cannot be read.
ConfigValues read_config_file(const std::filesystem::path& path);
ConfigValues parse_config_text(std::string_view text, std::string_view origin = "<text>");

/// Applies `overrides` on top of `base`; overriding keys win.
ConfigValues merge(ConfigValues base, const ConfigValues& overrides);

/// Settings for one invocation of the tool. Scenario fields hold single
/// values; the sweep lists are only consulted by the `sweep` command.
struct RunSettings {
    ScenarioConfig scenario;
    std::vector<double> virulences{0.3, 1.0};
    std::vector<int> gds{1, 5, 25};
    std::vector<Algorithm> algorithms{Algorithm::genetic, Algorithm::cultural};
    std::filesystem::path out_dir = "out";
    int jobs = 0;  // 0: OpenMP default
};

/// Builds settings from raw values; unset keys take the defaults.
/// `allow_lists` permits comma-separated virulence/gd/algorithm values.
/// Throws ConfigError naming the offending key.
RunSettings parse_config(const ConfigValues& values, bool allow_lists = false);

/// Shorthand for scenario-only parsing.
ScenarioConfig parse_scenario_config(const ConfigValues& values);

/// Canonical key=value rendering of a scenario, round-trips through
/// parse_scenario_config.
std::string to_config_text(const ScenarioConfig& config);

/// Shortest decimal form that parses back to the same double.
std::string format_exact(double value);

}  // namespace cvirus
