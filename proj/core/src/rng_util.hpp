#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace specrec::detail {

// SplitMix64 step: decorrelates (seed, stream) pairs into independent
// engine seeds, so parallel and serial evaluation orders agree.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Box-Muller; avoids distribution objects so streams are fully pinned down
// by the engine state.
inline double standard_normal(std::mt19937_64& rng) {
    double u = uniform01(rng);
    while (u == 0.0) u = uniform01(rng);
    const double v = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * M_PI * v);
}

}  // namespace specrec::detail
