#include "cvirus/society.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "cvirus/error.hpp"

namespace cvirus {
namespace {

bool valid_range(const LevelRange& r) { return 0.0 <= r.lo && r.lo <= r.hi && r.hi <= 1.0; }

std::string describe(const LevelRange& r) {
    return "[" + std::to_string(r.lo) + ", " + std::to_string(r.hi) + "]";
}

}  // namespace

int SocietyInit::zombie_count() const {
    return static_cast<int>(std::lround(size * zombie_fraction));
}

void SocietyInit::validate() const {
    if (size < 1) throw Error(Errc::invalid_count, "society size must be >= 1, got " + std::to_string(size));
    if (!(zombie_fraction >= 0.0 && zombie_fraction <= 1.0))
        throw Error(Errc::out_of_range, "zombie fraction must lie in [0, 1]");
    if (!(threshold > 0.0 && threshold < 1.0))
        throw Error(Errc::out_of_range, "threshold must lie in (0, 1)");
    if (!valid_range(human_range) || !valid_range(zombie_range))
        throw Error(Errc::invalid_range, "level ranges must satisfy 0 <= lo <= hi <= 1");
    const int zombies = zombie_count();
    if (zombies < size && !(human_range.hi < threshold))
        throw Error(Errc::invalid_range, "human range " + describe(human_range) + " reaches the threshold");
    if (zombies > 0 && !(zombie_range.lo >= threshold))
        throw Error(Errc::invalid_range, "zombie range " + describe(zombie_range) + " starts below the threshold");
}

void EpidemicParams::validate() const {
    if (!(virulence >= 0.0 && virulence <= 1.0)) throw Error(Errc::out_of_range, "virulence must lie in [0, 1]");
    if (contacts_per_zombie < 1) throw Error(Errc::out_of_range, "contacts per zombie must be >= 1");
    if (!(increment > 0.0 && increment <= 1.0)) throw Error(Errc::out_of_range, "increment must lie in (0, 1]");
}

Society init_society(const SocietyInit& init, Rng& rng) {
    init.validate();
    const int zombies = init.zombie_count();

    std::vector<double> levels;
    levels.reserve(static_cast<std::size_t>(init.size));
    for (int i = 0; i < init.size; ++i) {
        const LevelRange& r = i < zombies ? init.zombie_range : init.human_range;
        levels.push_back(uniform_between(rng, r.lo, r.hi));
    }
    std::shuffle(levels.begin(), levels.end(), rng);

    Society society;
    society.threshold = init.threshold;
    society.members.reserve(levels.size());
    for (std::size_t i = 0; i < levels.size(); ++i)
        society.members.push_back({static_cast<int>(i), levels[i]});
    return society;
}

double mean_infection_rate(const Society& society) {
    if (society.members.empty()) throw Error(Errc::empty_society, "mean infection rate of an empty society");
    const double total = std::accumulate(society.members.begin(), society.members.end(), 0.0,
                                         [](double acc, const Individual& m) { return acc + m.level; });
    return total / static_cast<double>(society.size());
}

Census census(const Society& society) noexcept {
    Census c;
    for (const auto& m : society.members) {
        if (society.is_zombie(m))
            ++c.zombies;
        else
            ++c.humans;
    }
    return c;
}

void advance_day(Society& society, const EpidemicParams& params, Rng& rng) {
    std::vector<std::size_t> zombies;
    std::vector<std::size_t> humans;
    for (std::size_t i = 0; i < society.size(); ++i)
        (society.is_zombie(society.members[i]) ? zombies : humans).push_back(i);
    if (zombies.empty() || humans.empty()) return;

    for ([[maybe_unused]] std::size_t z : zombies) {
        for (int c = 0; c < params.contacts_per_zombie; ++c) {
            Individual& target = society.members[humans[uniform_index(rng, humans.size())]];
            if (bernoulli(rng, params.virulence))
                target.level = std::min(1.0, target.level + params.increment);
        }
    }
}

}  // namespace cvirus
