#pragma once

#include <cstdint>
#include <random>

namespace tricut {

/// splitmix64 scrambler; used to turn correlated seed material into
/// well-mixed engine seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

inline std::mt19937_64 make_rng(std::uint64_t seed) {
    return std::mt19937_64(splitmix64(seed));
}

/// Independent stream for run `index` of a job seeded with `seed`.
/// Streams are keyed by (seed, index) only, so a run produces the same
/// numbers no matter which worker executes it.
inline std::mt19937_64 derive_stream(std::uint64_t seed, std::uint64_t index) {
    return std::mt19937_64(splitmix64(splitmix64(seed) ^ splitmix64(index + 1)));
}

/// Uniform double in [lo, hi) from the top 53 bits of the engine output.
/// Avoids std::uniform_real_distribution, whose output is not pinned by the
/// standard; this keeps seeded results identical across toolchains.
inline double uniform_double(std::mt19937_64& rng, double lo = 0.0, double hi = 1.0) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
}

}  // namespace tricut
