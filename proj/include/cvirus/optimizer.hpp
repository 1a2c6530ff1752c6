#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "cvirus/evaluation.hpp"
#include "cvirus/random.hpp"

namespace cvirus {

enum class Algorithm { none, genetic, cultural };

std::string_view to_string(Algorithm a) noexcept;  // "none", "ga", "ca"
std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept;

struct OptimizerConfig {
    int population_size = 100;
    int tournament_size = 5;
    double mutation_probability = 0.05;  // per gene
    /// Cultural mode only: inject the belief champion as one parent of
    /// every child. Switching it off turns the cultural search into the
    /// plain genetic one, draw for draw.
    bool belief_influence = true;

    void validate() const;
};

struct PopulationState {
    std::vector<EvaluatedChromosome> members;
    std::uint64_t generation = 0;
    EvaluatedChromosome best_ever;
    bool evaluated = false;
};

/// Situational knowledge: the best chromosome recorded so far in the run.
struct BeliefSpace {
    std::optional<EvaluatedChromosome> champion;

    /// Takes `candidate` only if it is strictly better than the incumbent.
    bool offer(const EvaluatedChromosome& candidate);
};

/// Fresh population with genes drawn from Uniform(0, 1). Not evaluated.
PopulationState random_population(int size, int genes, Rng& rng);

/// (Re-)evaluates the whole population against the society in `ctx`.
/// Called at the start of every day since the landscape has moved. The
/// recorded best is reset to the best of this evaluation; the belief
/// champion, if any, only improves.
void evaluate_population(PopulationState& state, BeliefSpace* belief, const FitnessContext& ctx,
                         std::uint64_t day, Execution exec = Execution::serial);

/// Index of the fittest of `tournament_size` members sampled with
/// replacement. Ties go to the lowest index.
std::size_t tournament_select(std::span<const EvaluatedChromosome> members, int tournament_size, Rng& rng);

/// Gene-wise arithmetic mean.
Chromosome crossover(std::span<const double> a, std::span<const double> b);

/// Each gene is independently replaced by a Uniform(0, 1) draw with
/// probability `p`.
Chromosome mutate(Chromosome c, double p, Rng& rng);

/// One generation: elite clone, tournament breeding pool, P - 1 children
/// by crossover and mutation, evaluation of the children. With a non-null
/// `belief` (cultural mode) each child gets the champion as mother or
/// father on a fair coin.
void step_generation(PopulationState& state, BeliefSpace* belief, const FitnessContext& ctx,
                     const OptimizerConfig& config, Rng& rng, Execution exec = Execution::serial);

/// Index of the member with the lowest fitness, first one on ties.
std::size_t fittest_index(std::span<const EvaluatedChromosome> members);

}  // namespace cvirus
