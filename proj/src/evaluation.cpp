#include "cvirus/evaluation.hpp"

namespace cvirus {

double evaluate_fitness(std::span<const double> genes, const Society& society, const EpidemicParams& epidemic,
                        const TreatmentSet& treatments, Rng& rng) {
    Society lookahead = society;
    apply_cure(lookahead, genes, treatments, rng);
    advance_day(lookahead, epidemic, rng);
    return mean_infection_rate(lookahead);
}

Rng batch_stream(const FitnessContext& ctx, BatchKey key, std::size_t item) {
    return Rng(derive_seed(ctx.seed, {static_cast<std::uint64_t>(key.phase), key.round, item}));
}

void evaluate_batch_serial(std::span<EvaluatedChromosome> batch, const FitnessContext& ctx, BatchKey key) {
    for (std::size_t i = 0; i < batch.size(); ++i) {
        Rng rng = batch_stream(ctx, key, i);
        batch[i].fitness = evaluate_fitness(batch[i].genes, *ctx.society, ctx.epidemic, ctx.treatments, rng);
    }
}

void evaluate_batch_parallel(std::span<EvaluatedChromosome> batch, const FitnessContext& ctx, BatchKey key) {
    const auto n = static_cast<std::ptrdiff_t>(batch.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const auto item = static_cast<std::size_t>(i);
        Rng rng = batch_stream(ctx, key, item);
        batch[item].fitness = evaluate_fitness(batch[item].genes, *ctx.society, ctx.epidemic, ctx.treatments, rng);
    }
}

}  // namespace cvirus
