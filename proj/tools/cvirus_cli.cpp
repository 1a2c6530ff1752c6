// Command-line driver: run | sweep | baseline.
//
// Exit status: 0 on success, 2 on a usage or configuration error, 1 when the
// simulation or output fails.

#include <omp.h>

#include <CLI11.hpp>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "cvirus/config.hpp"
#include "cvirus/error.hpp"
#include "cvirus/output.hpp"
#include "cvirus/scenario.hpp"

namespace fs = std::filesystem;
using namespace cvirus;

namespace {

constexpr int kExitRuntime = 1;
constexpr int kExitConfig = 2;

struct Flags {
    std::string config_path;
    std::map<std::string, std::string> raw;
    std::map<std::string, CLI::Option*> options;
};

void add_flags(CLI::App& cmd, Flags& flags) {
    cmd.add_option("--config", flags.config_path, "flat key = value settings file");
    for (std::string_view key : config_keys()) {
        const std::string name(key);
        flags.options[name] = cmd.add_option("--" + name, flags.raw[name]);
    }
}

ConfigValues flag_values(const Flags& flags) {
    ConfigValues values;
    for (const auto& [name, opt] : flags.options)
        if (opt->count() > 0) values[name] = flags.raw.at(name);
    return values;
}

std::string scenario_label(double virulence, int gd, Algorithm algorithm) {
    std::string label = "v" + format_exact(virulence);
    if (algorithm == Algorithm::none) return label + "_baseline";
    return label + "_gd" + std::to_string(gd) + "_" + std::string(to_string(algorithm));
}

struct Job {
    ScenarioConfig config;
    std::string label;
};

std::string config_echo(const RunSettings& s, const std::string& command) {
    if (command != "sweep") return to_config_text(s.scenario);
    // Lists replace the single-valued scenario keys.
    const auto join = [](const auto& items, auto&& fmt_one) {
        std::string out;
        for (const auto& item : items) out += (out.empty() ? "" : ",") + fmt_one(item);
        return out;
    };
    std::string text = to_config_text(s.scenario);
    const std::map<std::string, std::string> lists{
        {"virulence", join(s.virulences, [](double v) { return format_exact(v); })},
        {"gd", join(s.gds, [](int g) { return std::to_string(g); })},
        {"algorithm", join(s.algorithms, [](Algorithm a) { return std::string(to_string(a)); })},
    };
    std::string result;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const auto nl = text.find('\n', pos);
        const std::string line = text.substr(pos, nl - pos);
        pos = nl + 1;
        const std::string key = line.substr(0, line.find(" = "));
        result += lists.count(key) ? key + " = " + lists.at(key) : line;
        result += '\n';
    }
    return result;
}

int execute(const std::string& command, const RunSettings& settings) {
    std::vector<Job> jobs;
    if (command == "sweep") {
        for (double v : settings.virulences) {
            ScenarioConfig base = settings.scenario;
            base.epidemic.virulence = v;
            base.algorithm = Algorithm::none;
            jobs.push_back({base, scenario_label(v, base.gd, Algorithm::none)});
            for (int gd : settings.gds) {
                for (Algorithm a : settings.algorithms) {
                    if (a == Algorithm::none) continue;
                    ScenarioConfig c = base;
                    c.gd = gd;
                    c.algorithm = a;
                    jobs.push_back({c, scenario_label(v, gd, a)});
                }
            }
        }
    } else {
        ScenarioConfig c = settings.scenario;
        if (command == "baseline") c.algorithm = Algorithm::none;
        jobs.push_back({c, scenario_label(c.epidemic.virulence, c.gd, c.algorithm)});
    }

    if (settings.jobs > 0) omp_set_num_threads(settings.jobs);

    RunManifest manifest;
    manifest.command = command;
    manifest.created = manifest_timestamp();
    std::vector<ScenarioSummary> summaries;
    for (const Job& job : jobs) {
        job.config.validate();
        std::cerr << "running " << job.label << " (" << job.config.replications << " replications)\n";
        const std::vector<RunResult> runs = run_replications_parallel(job.config);
        const std::string file = "runs_" + job.label + ".csv";
        emit_runs_csv(runs, job.config.treatments.count, settings.out_dir / file);
        manifest.files.push_back(file);
        if (runs.size() >= 2)
            summaries.push_back({job.config.epidemic.virulence, job.config.gd, job.config.algorithm, aggregate(runs)});
    }
    if (!summaries.empty()) {
        emit_summary(summaries, settings.out_dir / "summary.csv");
        manifest.files.push_back("summary.csv");
    }

    RunSettings echoed = settings;
    if (command == "baseline") echoed.scenario.algorithm = Algorithm::none;
    manifest.config_text = config_echo(echoed, command);
    emit_manifest(manifest, settings.out_dir / "manifest.txt");
    std::cout << "wrote " << manifest.files.size() + 1 << " files to " << settings.out_dir.string() << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Continuous-infection outbreak simulator with evolutionary cure search"};
    app.require_subcommand(1);

    std::map<const CLI::App*, Flags> flag_sets;
    CLI::App* run = app.add_subcommand("run", "simulate one scenario");
    CLI::App* sweep = app.add_subcommand("sweep", "full factorial over virulence, gd and algorithm, plus baselines");
    CLI::App* baseline = app.add_subcommand("baseline", "simulate without any cure");
    for (CLI::App* cmd : {run, sweep, baseline}) add_flags(*cmd, flag_sets[cmd]);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return kExitConfig;
    }

    const CLI::App* chosen = app.get_subcommands().front();
    const std::string command = chosen->get_name();
    const Flags& flags = flag_sets.at(chosen);
    RunSettings settings;
    try {
        ConfigValues values;
        if (!flags.config_path.empty()) values = read_config_file(flags.config_path);
        values = merge(std::move(values), flag_values(flags));
        settings = parse_config(values, command == "sweep");
        settings.scenario.validate();
    } catch (const Error& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    }

    try {
        return execute(command, settings);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
}
