#pragma once

#include <cstddef>
#include <vector>

#include "cvirus/random.hpp"

namespace cvirus {

/// One agent. `level` is its continuous infection level in [0, 1].
struct Individual {
    int id = 0;
    double level = 0.0;
};

/// Closed interval of infection levels.
struct LevelRange {
    double lo = 0.0;
    double hi = 0.0;
};

struct Census {
    int humans = 0;
    int zombies = 0;
};

/// Well-mixed population of fixed size. Members are kept in id order and
/// ids are 0..size-1, so member index and id coincide.
struct Society {
    std::vector<Individual> members;
    double threshold = 0.75;

    std::size_t size() const noexcept { return members.size(); }
    bool is_zombie(double level) const noexcept { return level >= threshold; }
    bool is_zombie(const Individual& m) const noexcept { return is_zombie(m.level); }
};

struct SocietyInit {
    int size = 50;
    double zombie_fraction = 0.1;
    LevelRange human_range{0.0, 0.35};
    LevelRange zombie_range{0.8, 1.0};
    double threshold = 0.75;

    /// Throws Error(invalid_count | invalid_range | out_of_range).
    void validate() const;
    int zombie_count() const;
};

struct EpidemicParams {
    double virulence = 1.0;
    int contacts_per_zombie = 1;
    double increment = 0.0625;

    void validate() const;
};

/// Random initial society: round(size * zombie_fraction) zombies, the rest
/// humans, shuffled so that ids carry no status information.
Society init_society(const SocietyInit& init, Rng& rng);

double mean_infection_rate(const Society& society);

Census census(const Society& society) noexcept;

/// Advances the epidemic one day in place.
///
/// Zombies and humans are fixed from a snapshot taken at the start of the
/// day. Each start-of-day zombie, in id order, contacts
/// `contacts_per_zombie` start-of-day humans drawn uniformly with
/// replacement; each contact raises the target's level by `increment`
/// (clamped to 1) with probability `virulence`. Humans pushed over the
/// threshold today start infecting tomorrow.
void advance_day(Society& society, const EpidemicParams& params, Rng& rng);

}  // namespace cvirus
