#include <algorithm>
#include <cmath>
#include <set>

#include "cvirus/error.hpp"
#include "cvirus/society.hpp"
#include "doctest.h"

using namespace cvirus;

namespace {

Society make_society(std::initializer_list<double> levels, double threshold = 0.75) {
    Society s;
    s.threshold = threshold;
    int id = 0;
    for (double l : levels) s.members.push_back({id++, l});
    return s;
}

std::vector<double> levels_of(const Society& s) {
    std::vector<double> out;
    for (const auto& m : s.members) out.push_back(m.level);
    return out;
}

}  // namespace

TEST_CASE("init_society with the default ranges") {
    Rng rng(7);
    const SocietyInit init;
    const Society s = init_society(init, rng);
    REQUIRE(s.size() == 50);
    const Census c = census(s);
    CHECK(c.humans == 45);
    CHECK(c.zombies == 5);
    for (const auto& m : s.members) {
        if (s.is_zombie(m))
            CHECK((m.level >= 0.8 && m.level <= 1.0));
        else
            CHECK((m.level >= 0.0 && m.level <= 0.35));
    }
    for (std::size_t i = 0; i < s.size(); ++i) CHECK(s.members[i].id == static_cast<int>(i));
}

TEST_CASE("init_society shuffles zombies away from the front") {
    // Without shuffling the zombies would always be ids 0..4.
    int front_zombies = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Rng rng(seed);
        const Society s = init_society(SocietyInit{}, rng);
        for (int i = 0; i < 5; ++i) front_zombies += s.is_zombie(s.members[static_cast<std::size_t>(i)]);
    }
    CHECK(front_zombies < 100);
}

TEST_CASE("init_society degenerate cases") {
    Rng rng(1);
    SocietyInit one;
    one.size = 1;
    one.zombie_fraction = 0.0;
    const Society single = init_society(one, rng);
    CHECK(single.size() == 1);
    CHECK(mean_infection_rate(single) < single.threshold);

    SocietyInit all;
    all.size = 10;
    all.zombie_fraction = 1.0;
    all.zombie_range = {1.0, 1.0};
    CHECK(mean_infection_rate(init_society(all, rng)) == 1.0);
}

TEST_CASE("init_society rejects bad input") {
    Rng rng(1);
    SocietyInit bad;
    bad.size = 0;
    CHECK_THROWS_AS(init_society(bad, rng), Error);
    try {
        init_society(bad, rng);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::invalid_count);
    }

    SocietyInit overlap;
    overlap.human_range = {0.0, 0.8};
    try {
        init_society(overlap, rng);
        FAIL("expected invalid-range");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::invalid_range);
    }

    SocietyInit low_zombies;
    low_zombies.zombie_range = {0.5, 1.0};
    CHECK_THROWS_AS(init_society(low_zombies, rng), Error);
}

TEST_CASE("mean_infection_rate") {
    CHECK(mean_infection_rate(make_society({0.1, 0.2, 0.3})) == doctest::Approx(0.2));
    CHECK(mean_infection_rate(make_society({0.0, 0.0, 0.0})) == 0.0);
    CHECK(mean_infection_rate(make_society({0.0, 1.0})) == 0.5);
    try {
        mean_infection_rate(Society{});
        FAIL("expected empty-society");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::empty_society);
    }
}

TEST_CASE("census counts the threshold itself as zombie") {
    const Census c = census(make_society({0.74, 0.75, 0.76}));
    CHECK(c.humans == 1);
    CHECK(c.zombies == 2);
    CHECK(census(make_society({0.0, 0.0, 0.0, 0.0})).zombies == 0);
    CHECK(census(make_society({1.0, 1.0, 1.0})).humans == 0);
}

TEST_CASE("advance_day is the identity without virulence or without zombies") {
    Rng init_rng(3);
    const Society start = init_society(SocietyInit{}, init_rng);

    Society s = start;
    Rng rng(11);
    EpidemicParams harmless;
    harmless.virulence = 0.0;
    for (int d = 0; d < 30; ++d) advance_day(s, harmless, rng);
    CHECK(levels_of(s) == levels_of(start));

    Society healthy = make_society({0.1, 0.3, 0.5});
    const auto before = levels_of(healthy);
    advance_day(healthy, EpidemicParams{}, rng);
    CHECK(levels_of(healthy) == before);
}

TEST_CASE("advance_day single forced path") {
    Society s = make_society({0.9, 0.7});
    EpidemicParams p;
    p.virulence = 1.0;
    p.increment = 0.1;
    p.contacts_per_zombie = 1;
    Rng rng(5);
    advance_day(s, p, rng);
    CHECK(s.members[1].level == doctest::Approx(0.8));
    CHECK(census(s).zombies == 2);
}

TEST_CASE("advance_day uses start-of-day roles") {
    // 0.7 crosses the threshold today but must not infect the third member
    // until tomorrow. The only start-of-day zombie makes one contact, which
    // lands on either human.
    EpidemicParams p;
    p.virulence = 1.0;
    p.increment = 0.1;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Society s = make_society({0.9, 0.7, 0.1});
        Rng rng(seed);
        advance_day(s, p, rng);
        const double gained = (s.members[1].level - 0.7) + (s.members[2].level - 0.1);
        CHECK(gained == doctest::Approx(0.1));
        CHECK(s.members[0].level == 0.9);
    }
}

TEST_CASE("advance_day property: bounded, monotone, conserving, deterministic") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Rng gen(seed);
        SocietyInit init;
        init.size = 1 + static_cast<int>(uniform_index(gen, 80));
        init.zombie_fraction = uniform01(gen);
        Society s = init_society(init, gen);
        EpidemicParams p;
        p.virulence = uniform01(gen);
        p.increment = 0.01 + 0.5 * uniform01(gen);
        p.contacts_per_zombie = 1 + static_cast<int>(uniform_index(gen, 4));

        Rng a(seed * 31 + 1);
        Rng b(seed * 31 + 1);
        for (int d = 0; d < 25; ++d) {
            const Society before = s;
            Society twin = s;
            advance_day(s, p, a);
            advance_day(twin, p, b);
            REQUIRE(s.size() == before.size());
            for (std::size_t i = 0; i < s.size(); ++i) {
                CHECK(s.members[i].id == before.members[i].id);
                CHECK(s.members[i].level >= before.members[i].level);
                CHECK(s.members[i].level <= 1.0);
                CHECK(s.members[i].level == twin.members[i].level);
            }
            const Census c = census(s);
            CHECK(c.humans + c.zombies == static_cast<int>(s.size()));
        }
    }
}

TEST_CASE("advance_day expectation matches exhaustive enumeration") {
    // One zombie, two humans. Enumerate every (target, success) outcome of
    // every contact and weight by its probability.
    const double h1 = 0.2, h2 = 0.5, z = 0.9;
    for (int contacts : {1, 2}) {
        for (double v : {0.5, 1.0}) {
            EpidemicParams p;
            p.virulence = v;
            p.increment = 0.3;
            p.contacts_per_zombie = contacts;

            double expected = 0.0;
            const int outcomes = 1 << (2 * contacts);  // (target bit, success bit) per contact
            for (int mask = 0; mask < outcomes; ++mask) {
                double prob = 1.0;
                double l1 = h1, l2 = h2;
                for (int c = 0; c < contacts; ++c) {
                    const bool second = (mask >> (2 * c)) & 1;
                    const bool hit = (mask >> (2 * c + 1)) & 1;
                    prob *= 0.5 * (hit ? v : 1.0 - v);
                    if (hit) (second ? l2 : l1) = std::min(1.0, (second ? l2 : l1) + p.increment);
                }
                expected += prob * (z + l1 + l2) / 3.0;
            }

            const int samples = 100000;
            double sum = 0.0, sum_sq = 0.0;
            Rng rng(1234 + contacts);
            for (int i = 0; i < samples; ++i) {
                Society s = make_society({z, h1, h2});
                advance_day(s, p, rng);
                const double m = mean_infection_rate(s);
                sum += m;
                sum_sq += m * m;
            }
            const double mean = sum / samples;
            const double se = std::sqrt((sum_sq / samples - mean * mean) / samples);
            INFO("contacts=", contacts, " v=", v, " expected=", expected, " mean=", mean);
            CHECK(std::abs(mean - expected) <= 3.0 * se + 1e-12);
        }
    }
}

TEST_CASE("day-0 mean infection rate matches the range midpoints") {
    // 45 humans from U(0, 0.35) and 5 zombies from U(0.8, 1):
    // (45 * 0.175 + 5 * 0.9) / 50 = 0.2475.
    double total = 0.0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        Rng rng(seed);
        total += mean_infection_rate(init_society(SocietyInit{}, rng));
    }
    CHECK(std::abs(total / 1000.0 - 0.2475) <= 0.01);
}
