#pragma once

#include <cstdint>
#include <random>

namespace misfit {

// One engine per simulation run; never shared between runs.
using Rng = std::mt19937_64;

// SplitMix64 finalizer. A bijection on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Seed for run `run_index` of grid point `point_index`.
///
/// The (point, run) pair is packed into one 64-bit counter and pushed through
/// two bijections keyed by the master seed, so distinct pairs with indices
/// below 2^32 can never share a seed.
constexpr std::uint64_t derive_seed(std::uint64_t master_seed, std::uint32_t point_index,
                                    std::uint32_t run_index) noexcept {
    const std::uint64_t counter = (std::uint64_t{point_index} << 32) | run_index;
    return mix64(mix64(counter) ^ master_seed);
}

// Independent sub-stream of a run seed, e.g. for network generation.
constexpr std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
    return mix64(seed ^ mix64(~stream));
}

// Normal(mean, sd) sample; sd == 0 returns the mean without touching the engine.
inline double draw_normal(Rng& rng, double mean, double sd) {
    if (sd == 0.0) return mean;
    std::normal_distribution<double> dist(mean, sd);
    return dist(rng);
}

inline bool draw_bernoulli(Rng& rng, double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    return std::bernoulli_distribution(p)(rng);
}

}  // namespace misfit
