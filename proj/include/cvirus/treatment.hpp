#pragma once

#include <span>
#include <vector>

#include "cvirus/random.hpp"
#include "cvirus/society.hpp"

namespace cvirus {

struct TreatmentWindow {
    double lo = 0.0;
    double hi = 0.0;

    bool contains(double level) const noexcept { return lo <= level && level <= hi; }
};

/// The family of windowed treatments. Treatment j (1-based) is centred at
/// (2j - 1) / (2 * count) and acts on levels within `window_halfwidth` of
/// its centre, clipped to [0, 1].
struct TreatmentSet {
    int count = 10;
    double window_halfwidth = 0.10;
    double effect = 0.10;

    void validate() const;
    double center(int index) const;
    /// Throws Error(index_out_of_range) unless 1 <= index <= count.
    TreatmentWindow window(int index) const;
};

struct CureOutcome {
    std::vector<int> applied;    // per treatment, how often it was administered
    std::vector<int> effective;  // ... and how often it hit its window
};

/// Administers a cure in place. `doses[j]` is the probability treatment
/// j + 1 is given to an individual today. Members are visited in id order
/// and treatments in ascending order against the running level, so a
/// single individual may slide through several windows in one day.
CureOutcome apply_cure(Society& society, std::span<const double> doses, const TreatmentSet& treatments, Rng& rng);

}  // namespace cvirus
