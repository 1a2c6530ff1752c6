#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cvirus/random.hpp"
#include "cvirus/society.hpp"
#include "cvirus/treatment.hpp"

namespace cvirus {

/// Dose vector searched by the optimizer; genes live in (0, 1).
using Chromosome = std::vector<double>;

struct EvaluatedChromosome {
    Chromosome genes;
    double fitness = 1.0;  // one-day lookahead MIR, lower is better
};

/// Everything a fitness evaluation reads. The society is borrowed and
/// never modified.
struct FitnessContext {
    const Society* society = nullptr;
    EpidemicParams epidemic;
    TreatmentSet treatments;
    std::uint64_t seed = 0;
};

/// Identifies one batch of evaluations inside a run. Item i of the batch
/// draws from its own generator seeded with (seed, phase, round, i), which
/// makes results independent of evaluation order and thread count.
struct BatchKey {
    enum Phase : std::uint64_t { day_start = 1, generation = 2 };
    Phase phase = generation;
    std::uint64_t round = 0;
};

enum class Execution { serial, parallel };

/// Applies `genes` as a cure to a copy of `society`, advances the copy one
/// day and returns its mean infection rate. Single stochastic sample.
double evaluate_fitness(std::span<const double> genes, const Society& society, const EpidemicParams& epidemic,
                        const TreatmentSet& treatments, Rng& rng);

Rng batch_stream(const FitnessContext& ctx, BatchKey key, std::size_t item);

/// Reference kernel: evaluates every item in order on the calling thread.
void evaluate_batch_serial(std::span<EvaluatedChromosome> batch, const FitnessContext& ctx, BatchKey key);

/// OpenMP kernel, bit-identical to the serial one.
void evaluate_batch_parallel(std::span<EvaluatedChromosome> batch, const FitnessContext& ctx, BatchKey key);

inline void evaluate_batch(std::span<EvaluatedChromosome> batch, const FitnessContext& ctx, BatchKey key,
                           Execution exec) {
    if (exec == Execution::parallel)
        evaluate_batch_parallel(batch, ctx, key);
    else
        evaluate_batch_serial(batch, ctx, key);
}

}  // namespace cvirus
