#ifndef SEQNET_RNG_HPP
#define SEQNET_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace seqnet {

// All randomness in the library flows through these helpers so that results
// are bit-reproducible across platforms and thread schedules.
//
// Documented constants of the artifact:
//   * generator family: std::mt19937_64 seeded with a single 64-bit value
//   * child seeds:      child_seed(master, i) = splitmix64(master + (i+1)*GOLDEN)
//   * bounded draws:    rejection sampling (uniform_below), never modulo bias
using Rng = std::mt19937_64;

inline constexpr std::uint64_t kSeedGolden = 0x9E3779B97F4A7C15ULL;

inline constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return x;
}

inline constexpr std::uint64_t child_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(master + (index + 1) * kSeedGolden);
}

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

// Unbiased integer in [0, n).
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % n;
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Fisher-Yates; length-0/1 ranges draw nothing.
template <typename T>
void shuffle_values(std::vector<T>& values, Rng& rng) {
    for (std::size_t t = values.size(); t > 1; --t) {
        const std::size_t j = static_cast<std::size_t>(uniform_below(rng, t));
        std::swap(values[t - 1], values[j]);
    }
}

// Index into a cumulative weight table (strictly increasing, last = total).
inline std::size_t pick_cumulative(const std::vector<double>& cumulative, Rng& rng) {
    const double u = uniform_unit(rng) * cumulative.back();
    std::size_t lo = 0;
    std::size_t hi = cumulative.size() - 1;
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (cumulative[mid] > u)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

} // namespace seqnet

#endif
