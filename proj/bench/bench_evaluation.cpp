// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "cvirus/evaluation.hpp"
#include "cvirus/scenario.hpp"

using namespace cvirus;

namespace {

struct BatchFixture {
    Society society;
    FitnessContext ctx;
    std::vector<EvaluatedChromosome> batch;

    explicit BatchFixture(std::size_t size) {
        Rng rng(1);
        society = init_society(SocietyInit{}, rng);
        ctx = {&society, EpidemicParams{}, TreatmentSet{}, 7};
        batch.resize(size);
        for (auto& c : batch) {
            c.genes.resize(10);
            for (double& g : c.genes) g = uniform_open01(rng);
        }
    }
};

void BM_BatchSerial(benchmark::State& state) {
    BatchFixture f(static_cast<std::size_t>(state.range(0)));
    std::uint64_t round = 0;
    for (auto _ : state) {
        evaluate_batch_serial(f.batch, f.ctx, {BatchKey::generation, ++round});
        benchmark::DoNotOptimize(f.batch.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_BatchParallel(benchmark::State& state) {
    BatchFixture f(static_cast<std::size_t>(state.range(0)));
    std::uint64_t round = 0;
    for (auto _ : state) {
        evaluate_batch_parallel(f.batch, f.ctx, {BatchKey::generation, ++round});
        benchmark::DoNotOptimize(f.batch.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

ScenarioConfig replication_config() {
    ScenarioConfig c;
    c.algorithm = Algorithm::cultural;
    c.gd = 1;
    c.horizon = 30;
    c.replications = 8;
    return c;
}

void BM_ReplicationsSerial(benchmark::State& state) {
    const ScenarioConfig c = replication_config();
    for (auto _ : state) benchmark::DoNotOptimize(run_replications_serial(c));
}

void BM_ReplicationsParallel(benchmark::State& state) {
    const ScenarioConfig c = replication_config();
    for (auto _ : state) benchmark::DoNotOptimize(run_replications_parallel(c));
}

}  // namespace

BENCHMARK(BM_BatchSerial)->Arg(99)->Arg(1000);
BENCHMARK(BM_BatchParallel)->Arg(99)->Arg(1000);
BENCHMARK(BM_ReplicationsSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ReplicationsParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
