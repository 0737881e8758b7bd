#ifndef SKRANK_CORE_RANDOM_HPP_
#define SKRANK_CORE_RANDOM_HPP_

#include <cstdint>
#include <random>

namespace skrank {

using Rng = std::mt19937_64;

/// Derives an independent seed for a named sub-stream (trial index, ranker
/// index, ...) from a master seed using the splitmix64 finalizer.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace skrank

#endif // SKRANK_CORE_RANDOM_HPP_
