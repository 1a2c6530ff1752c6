#include "cvirus/treatment.hpp"

#include <algorithm>
#include <string>

#include "cvirus/error.hpp"

namespace cvirus {

void TreatmentSet::validate() const {
    if (count < 1) throw Error(Errc::out_of_range, "treatment count must be >= 1");
    if (!(window_halfwidth > 0.0 && window_halfwidth <= 1.0))
        throw Error(Errc::out_of_range, "window half-width must lie in (0, 1]");
    if (!(effect > 0.0 && effect <= 1.0)) throw Error(Errc::out_of_range, "treatment effect must lie in (0, 1]");
}

double TreatmentSet::center(int index) const {
    if (index < 1 || index > count)
        throw Error(Errc::index_out_of_range,
                    "treatment " + std::to_string(index) + " outside 1.." + std::to_string(count));
    return (2.0 * index - 1.0) / (2.0 * count);
}

TreatmentWindow TreatmentSet::window(int index) const {
    const double c = center(index);
    return {std::max(0.0, c - window_halfwidth), std::min(1.0, c + window_halfwidth)};
}

CureOutcome apply_cure(Society& society, std::span<const double> doses, const TreatmentSet& treatments, Rng& rng) {
    if (static_cast<int>(doses.size()) != treatments.count)
        throw Error(Errc::length_mismatch, "cure has " + std::to_string(doses.size()) + " doses for " +
                                               std::to_string(treatments.count) + " treatments");

    std::vector<TreatmentWindow> windows;
    windows.reserve(doses.size());
    for (int j = 1; j <= treatments.count; ++j) windows.push_back(treatments.window(j));

    CureOutcome out{std::vector<int>(doses.size(), 0), std::vector<int>(doses.size(), 0)};
    for (auto& member : society.members) {
        for (std::size_t j = 0; j < doses.size(); ++j) {
            if (!bernoulli(rng, doses[j])) continue;
            ++out.applied[j];
            if (windows[j].contains(member.level)) {
                member.level = std::max(0.0, member.level - treatments.effect);
                ++out.effective[j];
            }
        }
    }
    return out;
}

}  // namespace cvirus
