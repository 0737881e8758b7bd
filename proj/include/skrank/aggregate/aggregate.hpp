#ifndef SKRANK_AGGREGATE_AGGREGATE_HPP_
#define SKRANK_AGGREGATE_AGGREGATE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <skrank/core/majority_table.hpp>
#include <skrank/core/ranking.hpp>

namespace skrank {

enum class AggregationMethod { borda, supervised_borda, local_kemenization, kemeny_quicksort, skr };
enum class SortKind { quick, bubble };

std::string_view to_string(AggregationMethod method);
std::string_view to_string(SortKind kind);
/// Throws InvalidArgument for unknown names.
AggregationMethod parse_aggregation_method(std::string_view name);
SortKind parse_sort_kind(std::string_view name);

/// Prefix length used when building the majority table: an absolute count or
/// a fraction of the candidate count.
class TopK {
public:
    static TopK count(std::size_t k);
    /// `f` in (0, 1]; resolves to max(1, round(f * m)).
    static TopK fraction(double f);
    static TopK all() { return fraction(1.0); }

    std::size_t resolve(std::size_t candidates) const;

    bool is_fraction() const noexcept { return fraction_.has_value(); }
    double fraction_value() const { return *fraction_; }
    std::size_t count_value() const { return count_; }

private:
    std::optional<double> fraction_;
    std::size_t count_ = 0;
};

inline constexpr double kDefaultTopKFraction = 0.15;

struct AggregationSpec {
    AggregationMethod method = AggregationMethod::skr;
    /// Per-ranker weights; empty means uniform unit weights.
    std::vector<double> weights;
    TopK top_k = TopK::fraction(kDefaultTopKFraction);
    /// Starting arrangement for the Kemeny-family sorts. Defaults to the
    /// supervised Borda ranking under the same weights.
    std::optional<Ranking> initial;
    /// Only consulted by `skr`; the other Kemeny variants fix their sort.
    SortKind sort_kind = SortKind::quick;
    std::uint64_t seed = 0;
};

/// Mean Borda score (m - position) per candidate, in the first ranking's order.
std::vector<std::pair<CandidateId, double>> borda_scores(std::span<const Ranking> rankings);

/// Descending mean Borda score; ties shuffled per seed.
Ranking borda(std::span<const Ranking> rankings, std::uint64_t seed = 0);

/// Descending weighted Borda score sum_p w_p (m - position_p). Throws when all
/// weights are zero.
Ranking supervised_borda(std::span<const Ranking> rankings, std::span<const double> weights,
                         std::uint64_t seed = 0);

/**
 * Sorts `initial` under the table's weighted-majority comparator: i precedes
 * j when weight(i, j) > weight(j, i); on a tie (including pairs with no mass)
 * the order in `initial` decides.
 *
 * `quick` is a randomized quick sort with uniform pivots drawn from `seed`.
 * `bubble` runs adjacent-swap passes starting from `initial` until no pair is
 * strictly reversed, swapping only on strict majority.
 */
Ranking majority_sort(const MajorityTable &table, const Ranking &initial, SortKind kind, std::uint64_t seed);

/// Supervised Kemeny ranking: weighted majority table over top-k prefixes,
/// then `majority_sort` of `initial`.
Ranking skr(std::span<const Ranking> rankings, std::span<const double> weights, std::size_t top_k,
            const Ranking &initial, std::uint64_t seed = 0, SortKind kind = SortKind::quick);

/// Unsupervised quick-sort approximation of Kemeny aggregation (unit weights).
Ranking kemeny_quicksort(std::span<const Ranking> rankings, std::size_t top_k, const Ranking &initial,
                         std::uint64_t seed = 0);

/// Weighted local Kemenization: the bubble-sort variant.
Ranking local_kemenization(std::span<const Ranking> rankings, std::span<const double> weights, std::size_t top_k,
                           const Ranking &initial);

/// Dispatches on `spec.method`, filling in the defaults documented on
/// AggregationSpec.
Ranking aggregate(std::span<const Ranking> rankings, const AggregationSpec &spec);

/// Whitespace-separated non-negative numbers, '#' comments allowed.
std::vector<double> read_weights_file(const std::string &path);

} // namespace skrank

#endif // SKRANK_AGGREGATE_AGGREGATE_HPP_
