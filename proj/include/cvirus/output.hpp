#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cvirus/config.hpp"
#include "cvirus/scenario.hpp"

namespace cvirus {

inline constexpr std::string_view kVersion = "1.0.0";

/// Per-day series. Header
///   replication,day,mir,humans,zombies,best_fitness,dose_1..dose_T,
///   applied_1..applied_T,effective_1..effective_T
/// Reals use six decimals; optimizer columns are empty on baseline runs.
void write_run_csv(std::ostream& out, std::span<const RunResult> runs, int treatments);
void emit_run_csv(const RunResult& result, int treatments, const std::filesystem::path& path);
void emit_runs_csv(std::span<const RunResult> runs, int treatments, const std::filesystem::path& path);

struct ScenarioSummary {
    double virulence = 0.0;
    int gd = 0;
    Algorithm algorithm = Algorithm::none;
    AggregateResult aggregate;
};

inline constexpr std::string_view kSummaryHeader =
    "virulence,gd,algorithm,lowest_mir_mean,lowest_mir_sd,stability,first_neighborhood_day,"
    "last_human_day_mean,last_human_day_sd,mean_mir_mean,mean_mir_sd";

/// One row per scenario; baseline rows leave gd empty.
void write_summary(std::ostream& out, std::span<const ScenarioSummary> rows);
void emit_summary(std::span<const ScenarioSummary> rows, const std::filesystem::path& path);

struct RunManifest {
    std::string command;
    std::string config_text;  // key = value echo, readable by parse_config
    std::string created;      // ISO-8601 UTC
    std::vector<std::string> files;
};

/// Timestamp for manifests: SOURCE_DATE_EPOCH when set, otherwise now.
std::string manifest_timestamp();

/// Comment lines carry the metadata, so the file itself parses as a config.
void write_manifest(std::ostream& out, const RunManifest& manifest);
void emit_manifest(const RunManifest& manifest, const std::filesystem::path& path);

}  // namespace cvirus
