#include <skrank/core/majority_table.hpp>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>

#include <skrank/core/error.hpp>

namespace skrank {

std::optional<MajorityTable::Index> MajorityTable::index_of(const CandidateId &id) const {
    auto it = index_.find(id);
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

double MajorityTable::weight(Index i, Index j) const {
    auto it = weights_.find(key(i, j));
    return it == weights_.end() ? 0.0 : it->second;
}

double MajorityTable::weight(const CandidateId &i, const CandidateId &j) const {
    auto a = index_of(i);
    auto b = index_of(j);
    if (!a || !b) {
        return 0.0;
    }
    return weight(*a, *b);
}

int MajorityTable::compare(Index i, Index j) const {
    const double forward = weight(i, j);
    const double backward = weight(j, i);
    const double margin = forward - backward;
    const double slack = kRelativeTieTolerance * (forward + backward);
    if (margin > slack) return 1;
    if (margin < -slack) return -1;
    return 0;
}

int MajorityTable::compare(const CandidateId &i, const CandidateId &j) const {
    auto a = index_of(i);
    auto b = index_of(j);
    if (!a || !b) {
        return 0;
    }
    return compare(*a, *b);
}

std::vector<MajorityTable::Entry> MajorityTable::entries() const {
    std::vector<std::pair<std::uint64_t, double>> raw(weights_.begin(), weights_.end());
    std::sort(raw.begin(), raw.end());
    std::vector<Entry> out;
    out.reserve(raw.size());
    for (const auto &[k, w] : raw) {
        out.push_back({candidates_[k >> 32], candidates_[k & 0xFFFFFFFFULL], w});
    }
    return out;
}

MajorityTable build_majority_table(std::span<const Ranking> rankings, std::span<const double> weights,
                                   std::size_t k) {
    if (rankings.size() != weights.size()) {
        throw InvalidArgument("build_majority_table: " + std::to_string(weights.size()) +
                              " weights for " + std::to_string(rankings.size()) + " rankings");
    }
    if (k == 0) {
        throw InvalidArgument("build_majority_table: k must be positive");
    }
    for (std::size_t p = 0; p < weights.size(); ++p) {
        if (!std::isfinite(weights[p]) || weights[p] < 0.0) {
            throw InvalidArgument("build_majority_table: weight " + std::to_string(p) +
                                  " is negative or not finite");
        }
        if (k > rankings[p].size()) {
            throw InvalidArgument("build_majority_table: k=" + std::to_string(k) + " exceeds length " +
                                  std::to_string(rankings[p].size()) + " of ranking " + std::to_string(p));
        }
    }

    MajorityTable table;
    for (const auto &ranking : rankings) {
        for (const auto &id : ranking) {
            if (table.index_.emplace(id, static_cast<MajorityTable::Index>(table.candidates_.size())).second) {
                table.candidates_.push_back(id);
            }
        }
    }
    if (table.candidates_.size() > std::numeric_limits<MajorityTable::Index>::max()) {
        throw InvalidArgument("build_majority_table: too many candidates");
    }

    std::size_t positive = 0;
    for (double w : weights) positive += w > 0.0 ? 1 : 0;
    table.weights_.reserve(std::min<std::size_t>(positive * k * (k - 1) / 2, k * (k - 1)));

    std::vector<MajorityTable::Index> prefix(k);
    for (std::size_t p = 0; p < rankings.size(); ++p) {
        if (weights[p] == 0.0) {
            continue;
        }
        for (std::size_t i = 0; i < k; ++i) {
            prefix[i] = table.index_.at(rankings[p][i]);
        }
        for (std::size_t i = 0; i + 1 < k; ++i) {
            for (std::size_t j = i + 1; j < k; ++j) {
                table.weights_[MajorityTable::key(prefix[i], prefix[j])] += weights[p];
            }
        }
    }
    return table;
}

void write_majority_csv(std::ostream &out, const MajorityTable &table) {
    out << "preferred,other,weight\n";
    const auto old_precision = out.precision(17);
    for (const auto &e : table.entries()) {
        out << e.preferred << ',' << e.other << ',' << e.weight << '\n';
    }
    out.precision(old_precision);
}

} // namespace skrank
