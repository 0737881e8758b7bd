#ifndef SKRANK_CORE_RANKING_HPP_
#define SKRANK_CORE_RANKING_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <skrank/core/candidate.hpp>

namespace skrank {

/**
 * An ordered arrangement of candidates, most-preferred first.
 *
 * A ranking whose length equals its universe size is a total ordering; a
 * shorter one is a partial (top-k) list over a universe of `universe_size()`
 * candidates. Positions are 1-based. Instances are immutable.
 */
class Ranking {
public:
    Ranking() = default;

    /// Total ordering over exactly the ids in `order`.
    explicit Ranking(std::vector<CandidateId> order);

    /// Partial or total ordering; throws InvalidArgument on duplicate ids or
    /// when `universe_size < order.size()`.
    Ranking(std::vector<CandidateId> order, std::size_t universe_size);

    /// Convenience for literals: `Ranking::of({"a", "b", "c"})`.
    static Ranking of(std::initializer_list<std::string_view> ids);

    const std::vector<CandidateId> &order() const noexcept { return order_; }
    std::size_t size() const noexcept { return order_.size(); }
    std::size_t universe_size() const noexcept { return universe_size_; }
    bool is_total() const noexcept { return order_.size() == universe_size_; }
    bool empty() const noexcept { return order_.empty(); }

    const CandidateId &operator[](std::size_t i) const { return order_[i]; }
    auto begin() const noexcept { return order_.begin(); }
    auto end() const noexcept { return order_.end(); }

    bool contains(const CandidateId &id) const { return position_.contains(id); }

    /// 1-based position; throws InvalidArgument when `id` is not ranked.
    std::size_t position(const CandidateId &id) const;
    std::optional<std::size_t> find(const CandidateId &id) const;

    /// Total ordering over the ranked ids, keeping relative order, for every
    /// id in `keep`. Ids in `keep` that are not ranked are ignored.
    Ranking restricted_to(const std::unordered_set<CandidateId> &keep) const;

    /// The first `k` entries as a partial list over the same universe.
    Ranking prefix(std::size_t k) const;

    Ranking reversed() const;

    std::unordered_set<CandidateId> candidate_set() const;

    friend bool operator==(const Ranking &a, const Ranking &b) {
        return a.universe_size_ == b.universe_size_ && a.order_ == b.order_;
    }

private:
    std::vector<CandidateId> order_;
    std::size_t universe_size_ = 0;
    std::unordered_map<CandidateId, std::size_t> position_;
};

std::ostream &operator<<(std::ostream &os, const Ranking &ranking);

/// Throws InvalidArgument naming the symmetric difference when `a` and `b`
/// do not rank exactly the same candidates.
void require_same_candidates(const Ranking &a, const Ranking &b, std::string_view context);

/**
 * Sorts candidates by descending score. Candidates with equal scores are
 * placed in a pseudo-random order derived from `seed`; the result depends
 * only on the (id, score) pairs and the seed, not on input order.
 *
 * With a positive `relative_tolerance`, neighbouring scores (in sorted order)
 * closer than `relative_tolerance * max|score|` are chained into one tie group.
 */
Ranking order_by_score(std::span<const std::pair<CandidateId, double>> scores,
                       std::uint64_t seed, double relative_tolerance = 0.0);

// Line format: one ranking per line, whitespace-separated ids, best first.
// Blank lines and lines starting with '#' are skipped.
std::vector<Ranking> read_rankings(std::istream &in, const std::string &source = "<stream>");
std::vector<Ranking> read_rankings_file(const std::string &path);
void write_ranking(std::ostream &out, const Ranking &ranking);
void write_rankings(std::ostream &out, std::span<const Ranking> rankings);

} // namespace skrank

#endif // SKRANK_CORE_RANKING_HPP_
