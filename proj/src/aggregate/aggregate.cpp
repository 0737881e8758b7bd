#include <skrank/aggregate/aggregate.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <skrank/core/error.hpp>
#include <skrank/core/random.hpp>

namespace skrank {

namespace {

// Borda scores that differ by less than this fraction of the largest score
// are treated as tied, so rescaling the weights cannot reorder them.
constexpr double kBordaTieTolerance = 1e-12;

void require_comparable_totals(std::span<const Ranking> rankings, const char *what) {
    if (rankings.empty()) {
        throw InvalidArgument(std::string(what) + ": empty ranker list");
    }
    for (const auto &r : rankings) {
        if (!r.is_total()) {
            throw InvalidArgument(std::string(what) + ": rankings must be total orderings");
        }
        require_same_candidates(rankings.front(), r, what);
    }
}

void require_weights(std::span<const Ranking> rankings, std::span<const double> weights, const char *what) {
    if (weights.size() != rankings.size()) {
        throw InvalidArgument(std::string(what) + ": " + std::to_string(weights.size()) + " weights for " +
                              std::to_string(rankings.size()) + " rankings");
    }
    for (double w : weights) {
        if (!std::isfinite(w) || w < 0.0) {
            throw InvalidArgument(std::string(what) + ": weights must be finite and non-negative");
        }
    }
}

std::vector<std::pair<CandidateId, double>> weighted_borda_scores(std::span<const Ranking> rankings,
                                                                  std::span<const double> weights) {
    const auto &first = rankings.front();
    const double m = static_cast<double>(first.size());
    std::vector<std::pair<CandidateId, double>> scores;
    scores.reserve(first.size());
    for (const auto &id : first) {
        double s = 0.0;
        for (std::size_t p = 0; p < rankings.size(); ++p) {
            s += weights[p] * (m - static_cast<double>(rankings[p].position(id)));
        }
        scores.emplace_back(id, s);
    }
    return scores;
}

class QuickSorter {
public:
    QuickSorter(const MajorityTable &table, const Ranking &initial, std::uint64_t seed)
        : table_(table), rng_(seed) {
        index_.reserve(initial.size());
        for (const auto &id : initial) {
            index_.push_back(table.index_of(id));
        }
    }

    std::vector<std::size_t> run(std::size_t n) {
        std::vector<std::size_t> items(n);
        for (std::size_t i = 0; i < n; ++i) items[i] = i;
        std::vector<std::size_t> out;
        out.reserve(n);
        sort(std::move(items), out);
        return out;
    }

private:
    // +1 when the candidate at initial position a should precede the one at b.
    int compare(std::size_t a, std::size_t b) const {
        if (index_[a] && index_[b]) {
            if (int c = table_.compare(*index_[a], *index_[b]); c != 0) {
                return c;
            }
        }
        return a < b ? 1 : -1;
    }

    void sort(std::vector<std::size_t> items, std::vector<std::size_t> &out) {
        if (items.size() <= 1) {
            out.insert(out.end(), items.begin(), items.end());
            return;
        }
        std::uniform_int_distribution<std::size_t> pick(0, items.size() - 1);
        const std::size_t pivot = items[pick(rng_)];
        std::vector<std::size_t> before, after;
        for (std::size_t x : items) {
            if (x == pivot) continue;
            (compare(x, pivot) > 0 ? before : after).push_back(x);
        }
        sort(std::move(before), out);
        out.push_back(pivot);
        sort(std::move(after), out);
    }

    const MajorityTable &table_;
    std::vector<std::optional<MajorityTable::Index>> index_;
    Rng rng_;
};

std::vector<std::size_t> bubble_sort(const MajorityTable &table, const Ranking &initial) {
    std::vector<std::optional<MajorityTable::Index>> index;
    index.reserve(initial.size());
    for (const auto &id : initial) {
        index.push_back(table.index_of(id));
    }
    std::vector<std::size_t> items(initial.size());
    for (std::size_t i = 0; i < items.size(); ++i) items[i] = i;

    // Every swap strictly lowers the weighted disagreement, so the passes
    // reach a fixpoint.
    bool swapped = true;
    while (swapped) {
        swapped = false;
        for (std::size_t i = 0; i + 1 < items.size(); ++i) {
            const auto &a = index[items[i]];
            const auto &b = index[items[i + 1]];
            if (a && b && table.compare(*a, *b) < 0) {
                std::swap(items[i], items[i + 1]);
                swapped = true;
            }
        }
    }
    return items;
}

Ranking kemeny_family(std::span<const Ranking> rankings, std::span<const double> weights, std::size_t top_k,
                      const Ranking &initial, std::uint64_t seed, SortKind kind, const char *what) {
    if (rankings.empty()) {
        throw InvalidArgument(std::string(what) + ": empty ranker list");
    }
    require_weights(rankings, weights, what);
    if (!initial.is_total()) {
        throw InvalidArgument(std::string(what) + ": initial ordering must be total");
    }
    if (top_k == 0 || top_k > initial.size()) {
        throw InvalidArgument(std::string(what) + ": top_k=" + std::to_string(top_k) + " outside [1, " +
                              std::to_string(initial.size()) + "]");
    }
    for (std::size_t p = 0; p < rankings.size(); ++p) {
        if (rankings[p].size() < top_k) {
            throw InvalidArgument(std::string(what) + ": ranking " + std::to_string(p) + " has " +
                                  std::to_string(rankings[p].size()) + " entries, fewer than top_k=" +
                                  std::to_string(top_k));
        }
        for (const auto &id : rankings[p]) {
            if (!initial.contains(id)) {
                throw InvalidArgument(std::string(what) + ": candidate '" + id.str() + "' of ranking " +
                                      std::to_string(p) + " is missing from the initial ordering");
            }
        }
    }
    const MajorityTable table = build_majority_table(rankings, weights, top_k);
    return majority_sort(table, initial, kind, seed);
}

} // namespace

std::string_view to_string(AggregationMethod method) {
    switch (method) {
    case AggregationMethod::borda: return "borda";
    case AggregationMethod::supervised_borda: return "supervised_borda";
    case AggregationMethod::local_kemenization: return "local_kemenization";
    case AggregationMethod::kemeny_quicksort: return "kemeny_quicksort";
    case AggregationMethod::skr: return "skr";
    }
    return "?";
}

std::string_view to_string(SortKind kind) {
    return kind == SortKind::quick ? "quick" : "bubble";
}

AggregationMethod parse_aggregation_method(std::string_view name) {
    for (auto m : {AggregationMethod::borda, AggregationMethod::supervised_borda,
                   AggregationMethod::local_kemenization, AggregationMethod::kemeny_quicksort,
                   AggregationMethod::skr}) {
        if (to_string(m) == name) return m;
    }
    throw InvalidArgument("unknown aggregation method '" + std::string(name) + "'");
}

SortKind parse_sort_kind(std::string_view name) {
    if (name == "quick") return SortKind::quick;
    if (name == "bubble") return SortKind::bubble;
    throw InvalidArgument("unknown sort kind '" + std::string(name) + "'");
}

TopK TopK::count(std::size_t k) {
    if (k == 0) {
        throw InvalidArgument("top_k count must be positive");
    }
    TopK t;
    t.count_ = k;
    return t;
}

TopK TopK::fraction(double f) {
    if (!(f > 0.0 && f <= 1.0)) {
        throw InvalidArgument("top_k fraction must lie in (0, 1]");
    }
    TopK t;
    t.fraction_ = f;
    return t;
}

std::size_t TopK::resolve(std::size_t candidates) const {
    if (fraction_) {
        const auto k = static_cast<std::size_t>(std::lround(*fraction_ * static_cast<double>(candidates)));
        return std::clamp<std::size_t>(k, 1, std::max<std::size_t>(candidates, 1));
    }
    if (count_ > candidates) {
        throw InvalidArgument("top_k " + std::to_string(count_) + " exceeds the " + std::to_string(candidates) +
                              " candidates");
    }
    return count_;
}

std::vector<std::pair<CandidateId, double>> borda_scores(std::span<const Ranking> rankings) {
    require_comparable_totals(rankings, "borda");
    const std::vector<double> unit(rankings.size(), 1.0);
    auto scores = weighted_borda_scores(rankings, unit);
    for (auto &[id, s] : scores) {
        s /= static_cast<double>(rankings.size());
    }
    return scores;
}

Ranking borda(std::span<const Ranking> rankings, std::uint64_t seed) {
    return order_by_score(borda_scores(rankings), seed, kBordaTieTolerance);
}

Ranking supervised_borda(std::span<const Ranking> rankings, std::span<const double> weights, std::uint64_t seed) {
    require_comparable_totals(rankings, "supervised_borda");
    require_weights(rankings, weights, "supervised_borda");
    if (std::all_of(weights.begin(), weights.end(), [](double w) { return w == 0.0; })) {
        throw InvalidArgument("supervised_borda: all weights are zero");
    }
    return order_by_score(weighted_borda_scores(rankings, weights), seed, kBordaTieTolerance);
}

Ranking majority_sort(const MajorityTable &table, const Ranking &initial, SortKind kind, std::uint64_t seed) {
    std::vector<std::size_t> positions;
    if (kind == SortKind::quick) {
        positions = QuickSorter(table, initial, seed).run(initial.size());
    } else {
        positions = bubble_sort(table, initial);
    }
    std::vector<CandidateId> order;
    order.reserve(positions.size());
    for (std::size_t p : positions) {
        order.push_back(initial[p]);
    }
    return Ranking(std::move(order));
}

Ranking skr(std::span<const Ranking> rankings, std::span<const double> weights, std::size_t top_k,
            const Ranking &initial, std::uint64_t seed, SortKind kind) {
    return kemeny_family(rankings, weights, top_k, initial, seed, kind, "skr");
}

Ranking kemeny_quicksort(std::span<const Ranking> rankings, std::size_t top_k, const Ranking &initial,
                         std::uint64_t seed) {
    const std::vector<double> unit(rankings.size(), 1.0);
    return kemeny_family(rankings, unit, top_k, initial, seed, SortKind::quick, "kemeny_quicksort");
}

Ranking local_kemenization(std::span<const Ranking> rankings, std::span<const double> weights, std::size_t top_k,
                           const Ranking &initial) {
    return kemeny_family(rankings, weights, top_k, initial, 0, SortKind::bubble, "local_kemenization");
}

Ranking aggregate(std::span<const Ranking> rankings, const AggregationSpec &spec) {
    if (rankings.empty()) {
        throw InvalidArgument("aggregate: empty ranker list");
    }
    std::vector<double> weights = spec.weights;
    if (weights.empty() || spec.method == AggregationMethod::kemeny_quicksort ||
        spec.method == AggregationMethod::borda) {
        weights.assign(rankings.size(), 1.0);
    }
    switch (spec.method) {
    case AggregationMethod::borda:
        return borda(rankings, spec.seed);
    case AggregationMethod::supervised_borda:
        return supervised_borda(rankings, weights, spec.seed);
    default:
        break;
    }
    const Ranking initial = spec.initial ? *spec.initial : supervised_borda(rankings, weights, spec.seed);
    const std::size_t k = spec.top_k.resolve(initial.size());
    switch (spec.method) {
    case AggregationMethod::local_kemenization:
        return local_kemenization(rankings, weights, k, initial);
    case AggregationMethod::kemeny_quicksort:
        return kemeny_quicksort(rankings, k, initial, spec.seed);
    default:
        return skr(rankings, weights, k, initial, spec.seed, spec.sort_kind);
    }
}

std::vector<double> read_weights_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open weights file '" + path + "'");
    }
    std::vector<double> weights;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream tokens(line);
        std::string token;
        while (tokens >> token) {
            std::size_t used = 0;
            double w = 0.0;
            try {
                w = std::stod(token, &used);
            } catch (const std::exception &) {
                used = 0;
            }
            if (used != token.size() || !std::isfinite(w) || w < 0.0) {
                throw ParseError(path, line_no, "malformed weight '" + token + "'");
            }
            weights.push_back(w);
        }
    }
    return weights;
}

} // namespace skrank
