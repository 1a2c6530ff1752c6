#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace cvirus {

using Rng = std::mt19937_64;

// Named sub-streams of a single run. Each gets its own generator so that
// turning the optimizer on or off leaves the epidemic draws untouched.
enum class Stream : std::uint64_t {
    replication = 1,
    society_init,
    epidemic,
    cure,
    selection,
    evaluation,
};

/// Folds a key path into a seed with the splitmix64 finalizer. Same keys,
/// same seed, on every platform; order of keys matters.
std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> keys) noexcept;

inline Rng make_stream(std::uint64_t run_seed, Stream stream) {
    return Rng(derive_seed(run_seed, {static_cast<std::uint64_t>(stream)}));
}

/// Uniform draw on [0, 1) from the top 53 bits of one engine output.
/// std::generate_canonical recomputes a long double log per call, which
/// dominates the fitness kernel.
inline double uniform01(Rng& rng) noexcept {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform draw on the open interval (0, 1); exact zeros are redrawn.
inline double uniform_open01(Rng& rng) {
    double u = 0.0;
    while (u <= 0.0 || u >= 1.0) u = uniform01(rng);
    return u;
}

inline double uniform_between(Rng& rng, double lo, double hi) noexcept {
    return lo + (hi - lo) * uniform01(rng);
}

/// True with probability p. p <= 0 never fires, p >= 1 always fires.
inline bool bernoulli(Rng& rng, double p) noexcept { return uniform01(rng) < p; }

/// Uniform index in [0, n).
inline std::size_t uniform_index(Rng& rng, std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

}  // namespace cvirus
