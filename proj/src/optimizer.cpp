#include "cvirus/optimizer.hpp"

#include <algorithm>
#include <string>

#include "cvirus/error.hpp"

namespace cvirus {

std::string_view to_string(Algorithm a) noexcept {
    switch (a) {
        case Algorithm::none: return "none";
        case Algorithm::genetic: return "ga";
        case Algorithm::cultural: return "ca";
    }
    return "none";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept {
    if (name == "none") return Algorithm::none;
    if (name == "ga" || name == "genetic") return Algorithm::genetic;
    if (name == "ca" || name == "cultural") return Algorithm::cultural;
    return std::nullopt;
}

void OptimizerConfig::validate() const {
    if (population_size < 2) throw Error(Errc::out_of_range, "population size must be >= 2");
    if (tournament_size < 1 || tournament_size > population_size)
        throw Error(Errc::out_of_range, "tournament size must lie in 1..population size");
    if (!(mutation_probability >= 0.0 && mutation_probability <= 1.0))
        throw Error(Errc::out_of_range, "mutation probability must lie in [0, 1]");
}

bool BeliefSpace::offer(const EvaluatedChromosome& candidate) {
    if (champion && !(candidate.fitness < champion->fitness)) return false;
    champion = candidate;
    return true;
}

PopulationState random_population(int size, int genes, Rng& rng) {
    PopulationState state;
    state.members.resize(static_cast<std::size_t>(size));
    for (auto& m : state.members) {
        m.genes.resize(static_cast<std::size_t>(genes));
        for (double& g : m.genes) g = uniform_open01(rng);
    }
    return state;
}

std::size_t fittest_index(std::span<const EvaluatedChromosome> members) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < members.size(); ++i)
        if (members[i].fitness < members[best].fitness) best = i;
    return best;
}

void evaluate_population(PopulationState& state, BeliefSpace* belief, const FitnessContext& ctx,
                         std::uint64_t day, Execution exec) {
    evaluate_batch(state.members, ctx, {BatchKey::day_start, day}, exec);
    state.evaluated = true;
    state.best_ever = state.members[fittest_index(state.members)];
    if (belief) belief->offer(state.best_ever);
}

std::size_t tournament_select(std::span<const EvaluatedChromosome> members, int tournament_size, Rng& rng) {
    std::size_t winner = uniform_index(rng, members.size());
    for (int k = 1; k < tournament_size; ++k) {
        const std::size_t pick = uniform_index(rng, members.size());
        const double f = members[pick].fitness;
        if (f < members[winner].fitness || (f == members[winner].fitness && pick < winner)) winner = pick;
    }
    return winner;
}

Chromosome crossover(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        throw Error(Errc::length_mismatch,
                    "parents of length " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
    Chromosome child(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) child[i] = 0.5 * (a[i] + b[i]);
    return child;
}

Chromosome mutate(Chromosome c, double p, Rng& rng) {
    for (double& g : c)
        if (bernoulli(rng, p)) g = uniform_open01(rng);
    return c;
}

void step_generation(PopulationState& state, BeliefSpace* belief, const FitnessContext& ctx,
                     const OptimizerConfig& config, Rng& rng, Execution exec) {
    if (!state.evaluated || state.members.empty())
        throw Error(Errc::unevaluated_population, "step_generation needs an evaluated population");
    const bool influence = belief != nullptr && config.belief_influence;
    if (influence && !belief->champion)
        throw Error(Errc::unevaluated_population, "belief space has no champion yet");

    const std::span<const EvaluatedChromosome> current = state.members;
    const std::size_t size = current.size();

    std::vector<EvaluatedChromosome> next;
    next.reserve(size);
    next.push_back(current[fittest_index(current)]);

    std::vector<std::size_t> pool(size);
    for (auto& slot : pool) slot = tournament_select(current, config.tournament_size, rng);

    for (std::size_t c = 1; c < size; ++c) {
        const Chromosome* mother = &current[pool[uniform_index(rng, size)]].genes;
        const Chromosome* father = &current[pool[uniform_index(rng, size)]].genes;
        if (influence) (bernoulli(rng, 0.5) ? mother : father) = &belief->champion->genes;
        next.push_back({mutate(crossover(*mother, *father), config.mutation_probability, rng), 1.0});
    }

    ++state.generation;
    evaluate_batch(std::span(next).subspan(1), ctx, {BatchKey::generation, state.generation}, exec);

    for (std::size_t c = 1; c < size; ++c) {
        if (next[c].fitness < state.best_ever.fitness) state.best_ever = next[c];
        if (belief) belief->offer(next[c]);
    }
    state.members = std::move(next);
}

}  // namespace cvirus
