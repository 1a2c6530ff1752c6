#include "cvirus/random.hpp"

#include "cvirus/error.hpp"

namespace cvirus {

const char* to_string(Errc code) noexcept {
    switch (code) {
        case Errc::invalid_range: return "invalid-range";
        case Errc::invalid_count: return "invalid-count";
        case Errc::empty_society: return "empty-society";
        case Errc::index_out_of_range: return "index-out-of-range";
        case Errc::length_mismatch: return "length-mismatch";
        case Errc::unevaluated_population: return "unevaluated-population";
        case Errc::insufficient_replications: return "insufficient-replications";
        case Errc::unknown_key: return "unknown-key";
        case Errc::out_of_range: return "out-of-range";
        case Errc::io_error: return "io-error";
    }
    return "unknown";
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> keys) noexcept {
    std::uint64_t h = splitmix64(base);
    for (std::uint64_t k : keys) h = splitmix64(h ^ splitmix64(k));
    return h;
}

}  // namespace cvirus
