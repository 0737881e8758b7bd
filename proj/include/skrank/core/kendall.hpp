#ifndef SKRANK_CORE_KENDALL_HPP_
#define SKRANK_CORE_KENDALL_HPP_

#include <cstdint>
#include <span>

#include <skrank/core/ranking.hpp>

namespace skrank {

/// Number of candidate pairs that `a` and `b` order oppositely. Both must be
/// total orderings of the same set. O(m log m).
std::uint64_t kendall_tau(const Ranking &a, const Ranking &b);

/// Number of candidate pairs that `a` and `b` order the same way.
std::uint64_t kendall_concordant(const Ranking &a, const Ranking &b);

/// Kemeny objective: mean Kendall tau distance from `candidate` to each input.
double mean_kendall(const Ranking &candidate, std::span<const Ranking> inputs);

} // namespace skrank

#endif // SKRANK_CORE_KENDALL_HPP_
