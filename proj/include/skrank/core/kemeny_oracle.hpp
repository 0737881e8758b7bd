#ifndef SKRANK_CORE_KEMENY_ORACLE_HPP_
#define SKRANK_CORE_KEMENY_ORACLE_HPP_

#include <cstddef>
#include <span>

#include <skrank/core/ranking.hpp>

namespace skrank {

struct KemenyResult {
    Ranking ranking;
    double objective = 0.0;  // mean Kendall tau to the inputs
};

inline constexpr std::size_t kDefaultBruteForceCap = 9;

/// Exact Kemeny-optimal aggregation by enumerating all m! permutations.
/// Among optimal permutations, the lexicographically smallest (by candidate
/// id) is returned. Throws InvalidArgument when m exceeds `max_candidates`.
KemenyResult brute_force_kemeny(std::span<const Ranking> inputs,
                                std::size_t max_candidates = kDefaultBruteForceCap);

} // namespace skrank

#endif // SKRANK_CORE_KEMENY_ORACLE_HPP_
