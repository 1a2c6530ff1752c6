#include "cvirus/output.hpp"

#include <fmt/format.h>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iterator>
#include <ostream>

#include "cvirus/error.hpp"

namespace cvirus {
namespace {

std::string fixed6(double v) { return fmt::format("{:.6f}", v); }

std::ofstream open_for_write(const std::filesystem::path& path) {
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::io_error, "cannot open " + path.string() + " for writing");
    return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out) throw Error(Errc::io_error, "write failed for " + path.string());
}

}  // namespace

void write_run_csv(std::ostream& out, std::span<const RunResult> runs, int treatments) {
    std::string line = "replication,day,mir,humans,zombies,best_fitness";
    for (const char* prefix : {"dose_", "applied_", "effective_"})
        for (int j = 1; j <= treatments; ++j) fmt::format_to(std::back_inserter(line), ",{}{}", prefix, j);
    out << line << '\n';

    const auto t = static_cast<std::size_t>(treatments);
    for (const auto& run : runs) {
        for (const auto& d : run.days) {
            line.clear();
            auto it = std::back_inserter(line);
            fmt::format_to(it, "{},{},{:.6f},{},{},", run.replication, d.day, d.mir, d.humans, d.zombies);
            if (d.best_fitness) line += fixed6(*d.best_fitness);
            for (std::size_t j = 0; j < t; ++j) {
                line += ',';
                if (d.committed_doses && j < d.committed_doses->size()) line += fixed6((*d.committed_doses)[j]);
            }
            for (const auto* counts : {&d.applied, &d.effective})
                for (std::size_t j = 0; j < t; ++j)
                    fmt::format_to(it, ",{}", j < counts->size() ? (*counts)[j] : 0);
            out << line << '\n';
        }
    }
}

void emit_runs_csv(std::span<const RunResult> runs, int treatments, const std::filesystem::path& path) {
    auto out = open_for_write(path);
    write_run_csv(out, runs, treatments);
    finish(out, path);
}

void emit_run_csv(const RunResult& result, int treatments, const std::filesystem::path& path) {
    emit_runs_csv(std::span(&result, 1), treatments, path);
}

void write_summary(std::ostream& out, std::span<const ScenarioSummary> rows) {
    out << kSummaryHeader << '\n';
    for (const auto& r : rows) {
        const AggregateResult& a = r.aggregate;
        const std::string gd = r.algorithm == Algorithm::none ? "" : std::to_string(r.gd);
        out << fmt::format("{:.6f},{},{},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f}\n", r.virulence, gd,
                           to_string(r.algorithm), a.lowest_mir.mean, a.lowest_mir.sd, a.stability,
                           a.first_neighborhood_day, a.last_human_day.mean, a.last_human_day.sd, a.mean_mir.mean,
                           a.mean_mir.sd);
    }
}

void emit_summary(std::span<const ScenarioSummary> rows, const std::filesystem::path& path) {
    auto out = open_for_write(path);
    write_summary(out, rows);
    finish(out, path);
}

std::string manifest_timestamp() {
    std::time_t t = std::time(nullptr);
    if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH"); epoch && *epoch) t = std::strtoll(epoch, nullptr, 10);
    std::tm utc{};
    gmtime_r(&t, &utc);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
    return buf;
}

void write_manifest(std::ostream& out, const RunManifest& m) {
    out << "# cvirus " << kVersion << '\n';
    out << "# command: " << m.command << '\n';
    out << "# created: " << m.created << '\n';
    for (const auto& f : m.files) out << "# file: " << f << '\n';
    out << m.config_text;
}

void emit_manifest(const RunManifest& manifest, const std::filesystem::path& path) {
    auto out = open_for_write(path);
    write_manifest(out, manifest);
    finish(out, path);
}

}  // namespace cvirus
