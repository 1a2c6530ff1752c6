#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cvirus/evaluation.hpp"
#include "cvirus/optimizer.hpp"
#include "cvirus/society.hpp"
#include "cvirus/treatment.hpp"

namespace cvirus {

struct ScenarioConfig {
    EpidemicParams epidemic;
    TreatmentSet treatments;
    SocietyInit society;
    OptimizerConfig optimizer;
    Algorithm algorithm = Algorithm::cultural;
    int gd = 1;  // generations per simulated day
    int horizon = 200;
    int replications = 10;
    std::uint64_t base_seed = 20130101;

    void validate() const;
    bool operator==(const ScenarioConfig&) const;
};

struct DayRecord {
    int day = 0;  // 1-based; state after that day's cure and epidemic step
    double mir = 0.0;
    int humans = 0;
    int zombies = 0;
    std::optional<std::vector<double>> committed_doses;  // absent on baseline runs
    std::optional<double> best_fitness;
    std::vector<int> applied;
    std::vector<int> effective;
};

/// Last day with at least one human. Censored when humans survive the
/// horizon, in which case `day` equals the horizon. `day` is 0 when the
/// humans are gone after the very first day.
struct LastHumanDay {
    int day = 0;
    bool censored = false;
};

struct RunResult {
    int replication = 0;
    std::uint64_t seed = 0;
    double initial_mir = 0.0;
    std::vector<DayRecord> days;
    LastHumanDay last_human_day;
    double lowest_mir = 0.0;

    /// Time-averaged MIR over the recorded days.
    double mean_mir() const;
};

/// Mutable state of one replication between days.
class ScenarioRun {
public:
    ScenarioRun(const ScenarioConfig& config, int replication, Execution exec = Execution::serial);

    /// gd generations, commit the best chromosome, cure the real society,
    /// advance the epidemic. Baseline runs only advance.
    DayRecord run_day();

    const Society& society() const noexcept { return society_; }
    const PopulationState& population() const noexcept { return population_; }
    const BeliefSpace& belief() const noexcept { return belief_; }
    std::uint64_t seed() const noexcept { return seed_; }
    int day() const noexcept { return day_; }

private:
    FitnessContext fitness_context() const;

    ScenarioConfig config_;
    Execution exec_;
    std::uint64_t seed_;
    Society society_;
    PopulationState population_;
    BeliefSpace belief_;
    Rng epidemic_rng_;
    Rng cure_rng_;
    Rng selection_rng_;
    std::uint64_t evaluation_seed_;
    int day_ = 0;
};

std::uint64_t replication_seed(std::uint64_t base_seed, int replication);

RunResult run_scenario(const ScenarioConfig& config, int replication, Execution exec = Execution::serial);

/// All replications of a scenario. Serial runs them in index order; the
/// parallel path spreads replications over OpenMP threads. Both return
/// results in replication order and agree bit for bit.
std::vector<RunResult> run_replications_serial(const ScenarioConfig& config);
std::vector<RunResult> run_replications_parallel(const ScenarioConfig& config);

struct MeanSd {
    double mean = 0.0;
    double sd = 0.0;
};

/// Sample mean and standard deviation (n - 1 denominator).
MeanSd mean_sd(std::span<const double> xs);

struct AggregateResult {
    int replications = 0;
    std::vector<double> mir_mean;  // per day
    std::vector<double> mir_sd;    // per day
    MeanSd lowest_mir;
    MeanSd last_human_day;  // censored runs count as the horizon
    int censored_runs = 0;
    MeanSd mean_mir;
    double stability = 0.0;  // mean over days of mir_sd
    double first_neighborhood_day = 0.0;
};

/// First day whose MIR lies within 5 % (relative) of the run's final value,
/// taken as the mean of the last five days.
int first_neighborhood_day(const RunResult& run);

/// Throws Error(insufficient_replications) for fewer than two runs or
/// runs of differing length.
AggregateResult aggregate(std::span<const RunResult> runs);

}  // namespace cvirus
