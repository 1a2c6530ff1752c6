#include <algorithm>
#include <cmath>

#include "cvirus/error.hpp"
#include "cvirus/scenario.hpp"
#include "doctest.h"

using namespace cvirus;

namespace {

ScenarioConfig small_config(Algorithm algorithm, int gd = 1, int horizon = 20) {
    ScenarioConfig c;
    c.algorithm = algorithm;
    c.gd = gd;
    c.horizon = horizon;
    c.replications = 3;
    c.optimizer.population_size = 20;
    c.base_seed = 5;
    return c;
}

RunResult synthetic_run(std::vector<double> mirs, int replication = 0) {
    RunResult r;
    r.replication = replication;
    int day = 0;
    for (double m : mirs) {
        DayRecord d;
        d.day = ++day;
        d.mir = m;
        d.humans = 1;
        r.days.push_back(d);
    }
    r.lowest_mir = *std::min_element(mirs.begin(), mirs.end());
    r.last_human_day = {day, true};
    return r;
}

bool same_run(const RunResult& a, const RunResult& b) {
    if (a.days.size() != b.days.size() || a.seed != b.seed || a.lowest_mir != b.lowest_mir) return false;
    for (std::size_t i = 0; i < a.days.size(); ++i) {
        const auto& x = a.days[i];
        const auto& y = b.days[i];
        if (x.mir != y.mir || x.humans != y.humans || x.committed_doses != y.committed_doses ||
            x.best_fitness != y.best_fitness || x.applied != y.applied || x.effective != y.effective)
            return false;
    }
    return true;
}

}  // namespace

TEST_CASE("baseline days only advance the epidemic") {
    const ScenarioConfig c = small_config(Algorithm::none);
    ScenarioRun run(c, 0);
    const Society start = run.society();
    const DayRecord d = run.run_day();
    CHECK_FALSE(d.committed_doses.has_value());
    CHECK_FALSE(d.best_fitness.has_value());
    CHECK(std::all_of(d.applied.begin(), d.applied.end(), [](int x) { return x == 0; }));
    for (std::size_t i = 0; i < start.size(); ++i) CHECK(run.society().members[i].level >= start.members[i].level);
    CHECK(d.humans + d.zombies == 50);
}

TEST_CASE("the epidemic stream does not depend on the optimizer") {
    // Same replication seed: the untreated run and a run whose cure is
    // never administered see the same society initialisation.
    const ScenarioRun baseline(small_config(Algorithm::none), 2);
    const ScenarioRun optimized(small_config(Algorithm::genetic), 2);
    for (std::size_t i = 0; i < baseline.society().size(); ++i)
        CHECK(baseline.society().members[i].level == optimized.society().members[i].level);
}

TEST_CASE("run_day executes exactly gd generations and commits the best chromosome") {
    for (int gd : {1, 3}) {
        const ScenarioConfig c = small_config(Algorithm::cultural, gd);
        ScenarioRun run(c, 0);
        for (int day = 1; day <= 3; ++day) {
            const DayRecord d = run.run_day();
            CHECK(run.population().generation == static_cast<std::uint64_t>(gd * day));
            REQUIRE(d.committed_doses.has_value());
            CHECK(*d.committed_doses == run.population().best_ever.genes);
            CHECK(*d.best_fitness == run.population().best_ever.fitness);
            CHECK(run.belief().champion->fitness <= run.population().best_ever.fitness);
            for (std::size_t j = 0; j < d.applied.size(); ++j) CHECK(d.effective[j] <= d.applied[j]);
        }
    }
}

TEST_CASE("run_scenario bookkeeping") {
    for (Algorithm a : {Algorithm::none, Algorithm::genetic, Algorithm::cultural}) {
        const ScenarioConfig c = small_config(a, 2, 15);
        const RunResult r = run_scenario(c, 1);
        REQUIRE(r.days.size() == 15);
        double lowest = 1.0;
        int last_human = 0;
        for (const auto& d : r.days) {
            CHECK(d.humans + d.zombies == 50);
            CHECK((d.mir >= 0.0 && d.mir <= 1.0));
            lowest = std::min(lowest, d.mir);
            if (d.humans > 0) last_human = d.day;
        }
        CHECK(r.lowest_mir == lowest);
        CHECK(r.lowest_mir <= r.days.front().mir);
        CHECK(r.last_human_day.day == last_human);
        CHECK(r.last_human_day.censored == (r.days.back().humans >= 1));
        CHECK(same_run(r, run_scenario(c, 1)));
    }

    ScenarioConfig one = small_config(Algorithm::genetic, 1, 1);
    CHECK(run_scenario(one, 0).days.size() == 1);
}

TEST_CASE("untreated MIR never decreases") {
    ScenarioConfig c = small_config(Algorithm::none, 1, 120);
    c.epidemic.increment = 0.0625;
    for (int rep = 0; rep < 3; ++rep) {
        const RunResult r = run_scenario(c, rep);
        CHECK(r.days.front().mir >= r.initial_mir);
        for (std::size_t i = 1; i < r.days.size(); ++i) CHECK(r.days[i].mir >= r.days[i - 1].mir);
        CHECK_FALSE(r.last_human_day.censored);
    }
}

TEST_CASE("replications agree between serial and parallel execution") {
    for (Algorithm a : {Algorithm::none, Algorithm::cultural}) {
        const ScenarioConfig c = small_config(a, 2, 10);
        const auto serial = run_replications_serial(c);
        const auto parallel = run_replications_parallel(c);
        REQUIRE(serial.size() == parallel.size());
        for (std::size_t i = 0; i < serial.size(); ++i) CHECK(same_run(serial[i], parallel[i]));
        // Parallel fitness evaluation inside a run gives the same run too.
        CHECK(same_run(serial[1], run_scenario(c, 1, Execution::parallel)));
        CHECK(serial[0].seed != serial[1].seed);
    }
}

TEST_CASE("aggregate statistics") {
    SUBCASE("identical runs have zero spread") {
        const std::vector<RunResult> runs{synthetic_run({0.3, 0.2, 0.25}), synthetic_run({0.3, 0.2, 0.25})};
        const AggregateResult a = aggregate(runs);
        CHECK(a.stability == 0.0);
        CHECK(a.lowest_mir.sd == 0.0);
        CHECK(a.last_human_day.sd == 0.0);
        CHECK(a.mir_mean[1] == doctest::Approx(0.2));
    }
    SUBCASE("two constant runs at 0.2 and 0.4") {
        // Sample sd of {0.2, 0.4} = sqrt(0.02) = 0.141421...
        const std::vector<RunResult> runs{synthetic_run(std::vector<double>(8, 0.2)),
                                          synthetic_run(std::vector<double>(8, 0.4))};
        const AggregateResult a = aggregate(runs);
        for (double sd : a.mir_sd) CHECK(sd == doctest::Approx(0.1414213562));
        CHECK(a.stability == doctest::Approx(0.1414213562));
        CHECK(a.lowest_mir.mean == doctest::Approx(0.3));
    }
    SUBCASE("first neighbourhood day of a decaying trajectory") {
        // Plateau 0.1 from day 6; final = mean of last five = 0.1, band 0.005.
        const RunResult r = synthetic_run({0.5, 0.4, 0.3, 0.2, 0.15, 0.1, 0.1, 0.1, 0.1, 0.1, 0.1});
        CHECK(first_neighborhood_day(r) == 6);
        const RunResult late = synthetic_run({0.5, 0.104, 0.3, 0.2, 0.1, 0.1, 0.1, 0.1, 0.1});
        CHECK(first_neighborhood_day(late) == 2);  // entry only, no persistence
    }
    SUBCASE("insufficient replications") {
        const std::vector<RunResult> one{synthetic_run({0.1})};
        try {
            aggregate(one);
            FAIL("expected insufficient-replications");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::insufficient_replications);
        }
    }
}

TEST_CASE("aggregate is invariant to the order of its inputs") {
    const ScenarioConfig c = small_config(Algorithm::genetic, 1, 12);
    auto runs = run_replications_serial(c);
    const AggregateResult forward = aggregate(runs);
    std::reverse(runs.begin(), runs.end());
    const AggregateResult backward = aggregate(runs);
    CHECK(forward.mir_mean == backward.mir_mean);
    CHECK(forward.mir_sd == backward.mir_sd);
    CHECK(forward.stability == backward.stability);
    CHECK(forward.lowest_mir.mean == backward.lowest_mir.mean);
    CHECK(forward.lowest_mir.sd == backward.lowest_mir.sd);
    CHECK(forward.first_neighborhood_day == backward.first_neighborhood_day);
    CHECK(forward.last_human_day.mean == backward.last_human_day.mean);
}

TEST_CASE("scenario config validation") {
    ScenarioConfig c;
    CHECK_NOTHROW(c.validate());
    c.gd = 0;
    CHECK_THROWS_AS(c.validate(), Error);
    c = ScenarioConfig{};
    c.horizon = 0;
    CHECK_THROWS_AS(c.validate(), Error);
    c = ScenarioConfig{};
    c.replications = 0;
    CHECK_THROWS_AS(c.validate(), Error);
}
