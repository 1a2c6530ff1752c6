#include "cvirus/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "cvirus/error.hpp"

namespace cvirus {

void ScenarioConfig::validate() const {
    epidemic.validate();
    treatments.validate();
    society.validate();
    optimizer.validate();
    if (gd < 1) throw Error(Errc::out_of_range, "gd must be >= 1");
    if (horizon < 1) throw Error(Errc::out_of_range, "horizon must be >= 1");
    if (replications < 1) throw Error(Errc::out_of_range, "replications must be >= 1");
}

bool ScenarioConfig::operator==(const ScenarioConfig& o) const {
    const auto range_eq = [](const LevelRange& a, const LevelRange& b) { return a.lo == b.lo && a.hi == b.hi; };
    return epidemic.virulence == o.epidemic.virulence &&
           epidemic.contacts_per_zombie == o.epidemic.contacts_per_zombie &&
           epidemic.increment == o.epidemic.increment && treatments.count == o.treatments.count &&
           treatments.window_halfwidth == o.treatments.window_halfwidth && treatments.effect == o.treatments.effect &&
           society.size == o.society.size && society.zombie_fraction == o.society.zombie_fraction &&
           range_eq(society.human_range, o.society.human_range) &&
           range_eq(society.zombie_range, o.society.zombie_range) && society.threshold == o.society.threshold &&
           optimizer.population_size == o.optimizer.population_size &&
           optimizer.tournament_size == o.optimizer.tournament_size &&
           optimizer.mutation_probability == o.optimizer.mutation_probability &&
           optimizer.belief_influence == o.optimizer.belief_influence && algorithm == o.algorithm && gd == o.gd &&
           horizon == o.horizon && replications == o.replications && base_seed == o.base_seed;
}

double RunResult::mean_mir() const {
    if (days.empty()) return initial_mir;
    double total = 0.0;
    for (const auto& d : days) total += d.mir;
    return total / static_cast<double>(days.size());
}

std::uint64_t replication_seed(std::uint64_t base_seed, int replication) {
    return derive_seed(base_seed, {static_cast<std::uint64_t>(Stream::replication),
                                   static_cast<std::uint64_t>(replication)});
}

ScenarioRun::ScenarioRun(const ScenarioConfig& config, int replication, Execution exec)
    : config_(config),
      exec_(exec),
      seed_(replication_seed(config.base_seed, replication)),
      epidemic_rng_(make_stream(seed_, Stream::epidemic)),
      cure_rng_(make_stream(seed_, Stream::cure)),
      selection_rng_(make_stream(seed_, Stream::selection)),
      evaluation_seed_(derive_seed(seed_, {static_cast<std::uint64_t>(Stream::evaluation)})) {
    config_.validate();
    Rng init_rng = make_stream(seed_, Stream::society_init);
    society_ = init_society(config_.society, init_rng);
    if (config_.algorithm != Algorithm::none)
        population_ = random_population(config_.optimizer.population_size, config_.treatments.count, selection_rng_);
}

FitnessContext ScenarioRun::fitness_context() const {
    return {&society_, config_.epidemic, config_.treatments, evaluation_seed_};
}

DayRecord ScenarioRun::run_day() {
    DayRecord record;
    record.day = ++day_;

    if (config_.algorithm == Algorithm::none) {
        record.applied.assign(static_cast<std::size_t>(config_.treatments.count), 0);
        record.effective.assign(static_cast<std::size_t>(config_.treatments.count), 0);
    } else {
        const FitnessContext ctx = fitness_context();
        BeliefSpace* belief = config_.algorithm == Algorithm::cultural ? &belief_ : nullptr;
        evaluate_population(population_, belief, ctx, static_cast<std::uint64_t>(day_), exec_);
        for (int g = 0; g < config_.gd; ++g)
            step_generation(population_, belief, ctx, config_.optimizer, selection_rng_, exec_);

        const EvaluatedChromosome& committed = population_.best_ever;
        CureOutcome outcome = apply_cure(society_, committed.genes, config_.treatments, cure_rng_);
        record.committed_doses = committed.genes;
        record.best_fitness = committed.fitness;
        record.applied = std::move(outcome.applied);
        record.effective = std::move(outcome.effective);
    }

    advance_day(society_, config_.epidemic, epidemic_rng_);
    record.mir = mean_infection_rate(society_);
    const Census c = census(society_);
    record.humans = c.humans;
    record.zombies = c.zombies;
    return record;
}

RunResult run_scenario(const ScenarioConfig& config, int replication, Execution exec) {
    ScenarioRun run(config, replication, exec);
    RunResult result;
    result.replication = replication;
    result.seed = run.seed();
    result.initial_mir = mean_infection_rate(run.society());
    result.days.reserve(static_cast<std::size_t>(config.horizon));
    for (int d = 0; d < config.horizon; ++d) result.days.push_back(run.run_day());

    result.lowest_mir = result.days.front().mir;
    for (const auto& d : result.days) {
        result.lowest_mir = std::min(result.lowest_mir, d.mir);
        if (d.humans >= 1) result.last_human_day.day = d.day;
    }
    result.last_human_day.censored = result.days.back().humans >= 1;
    return result;
}

std::vector<RunResult> run_replications_serial(const ScenarioConfig& config) {
    std::vector<RunResult> results;
    results.reserve(static_cast<std::size_t>(config.replications));
    for (int r = 0; r < config.replications; ++r) results.push_back(run_scenario(config, r, Execution::serial));
    return results;
}

std::vector<RunResult> run_replications_parallel(const ScenarioConfig& config) {
    config.validate();
    std::vector<RunResult> results(static_cast<std::size_t>(config.replications));
    const int n = config.replications;
#pragma omp parallel for schedule(dynamic, 1)
    for (int r = 0; r < n; ++r) results[static_cast<std::size_t>(r)] = run_scenario(config, r, Execution::serial);
    return results;
}

MeanSd mean_sd(std::span<const double> xs) {
    MeanSd out;
    if (xs.empty()) return out;
    out.mean = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
    if (xs.size() < 2) return out;
    double ss = 0.0;
    for (double x : xs) ss += (x - out.mean) * (x - out.mean);
    out.sd = std::sqrt(ss / static_cast<double>(xs.size() - 1));
    return out;
}

int first_neighborhood_day(const RunResult& run) {
    const auto& days = run.days;
    const std::size_t tail = std::min<std::size_t>(5, days.size());
    double final_value = 0.0;
    for (std::size_t i = days.size() - tail; i < days.size(); ++i) final_value += days[i].mir;
    final_value /= static_cast<double>(tail);

    const double band = 0.05 * final_value;
    for (const auto& d : days)
        if (std::abs(d.mir - final_value) <= band) return d.day;
    return days.back().day;
}

AggregateResult aggregate(std::span<const RunResult> runs) {
    if (runs.size() < 2)
        throw Error(Errc::insufficient_replications, "need at least 2 runs, got " + std::to_string(runs.size()));
    const std::size_t horizon = runs.front().days.size();
    for (const auto& r : runs)
        if (r.days.size() != horizon || horizon == 0)
            throw Error(Errc::insufficient_replications, "runs have differing or empty day series");

    AggregateResult agg;
    agg.replications = static_cast<int>(runs.size());

    // Sort each per-day sample so the statistics do not depend on the order
    // the runs were handed in.
    std::vector<double> sample(runs.size());
    const auto stats = [&](auto&& value_of) {
        for (std::size_t i = 0; i < runs.size(); ++i) sample[i] = value_of(runs[i]);
        std::sort(sample.begin(), sample.end());
        return mean_sd(sample);
    };

    agg.mir_mean.resize(horizon);
    agg.mir_sd.resize(horizon);
    for (std::size_t d = 0; d < horizon; ++d) {
        const MeanSd s = stats([d](const RunResult& r) { return r.days[d].mir; });
        agg.mir_mean[d] = s.mean;
        agg.mir_sd[d] = s.sd;
    }
    agg.stability = std::accumulate(agg.mir_sd.begin(), agg.mir_sd.end(), 0.0) / static_cast<double>(horizon);

    agg.lowest_mir = stats([](const RunResult& r) { return r.lowest_mir; });
    agg.mean_mir = stats([](const RunResult& r) { return r.mean_mir(); });
    agg.last_human_day = stats([](const RunResult& r) { return static_cast<double>(r.last_human_day.day); });
    agg.first_neighborhood_day = stats([](const RunResult& r) { return double(first_neighborhood_day(r)); }).mean;
    agg.censored_runs = static_cast<int>(
        std::count_if(runs.begin(), runs.end(), [](const RunResult& r) { return r.last_human_day.censored; }));
    return agg;
}

}  // namespace cvirus
