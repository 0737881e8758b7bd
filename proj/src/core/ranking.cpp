#include <skrank/core/ranking.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <skrank/core/error.hpp>
#include <skrank/core/random.hpp>

namespace skrank {

Ranking::Ranking(std::vector<CandidateId> order) : Ranking(order, order.size()) {}

Ranking::Ranking(std::vector<CandidateId> order, std::size_t universe_size)
    : order_(std::move(order)), universe_size_(universe_size) {
    if (universe_size_ < order_.size()) {
        throw InvalidArgument("ranking of length " + std::to_string(order_.size()) +
                              " exceeds its universe size " + std::to_string(universe_size_));
    }
    position_.reserve(order_.size());
    for (std::size_t i = 0; i < order_.size(); ++i) {
        if (!position_.emplace(order_[i], i + 1).second) {
            throw InvalidArgument("duplicate candidate '" + order_[i].str() + "' in ranking");
        }
    }
}

Ranking Ranking::of(std::initializer_list<std::string_view> ids) {
    std::vector<CandidateId> order;
    order.reserve(ids.size());
    for (auto id : ids) {
        order.emplace_back(id);
    }
    return Ranking(std::move(order));
}

std::size_t Ranking::position(const CandidateId &id) const {
    auto it = position_.find(id);
    if (it == position_.end()) {
        throw InvalidArgument("candidate '" + id.str() + "' is not ranked");
    }
    return it->second;
}

std::optional<std::size_t> Ranking::find(const CandidateId &id) const {
    auto it = position_.find(id);
    if (it == position_.end()) {
        return std::nullopt;
    }
    return it->second;
}

Ranking Ranking::restricted_to(const std::unordered_set<CandidateId> &keep) const {
    std::vector<CandidateId> kept;
    kept.reserve(std::min(keep.size(), order_.size()));
    for (const auto &id : order_) {
        if (keep.contains(id)) {
            kept.push_back(id);
        }
    }
    return Ranking(std::move(kept));
}

Ranking Ranking::prefix(std::size_t k) const {
    if (k > order_.size()) {
        throw InvalidArgument("prefix length " + std::to_string(k) + " exceeds ranking length " +
                              std::to_string(order_.size()));
    }
    return Ranking(std::vector<CandidateId>(order_.begin(), order_.begin() + static_cast<std::ptrdiff_t>(k)),
                   universe_size_);
}

Ranking Ranking::reversed() const {
    return Ranking(std::vector<CandidateId>(order_.rbegin(), order_.rend()), universe_size_);
}

std::unordered_set<CandidateId> Ranking::candidate_set() const {
    return {order_.begin(), order_.end()};
}

std::ostream &operator<<(std::ostream &os, const Ranking &ranking) {
    os << '[';
    for (std::size_t i = 0; i < ranking.size(); ++i) {
        os << (i ? "," : "") << ranking[i];
    }
    return os << ']';
}

void require_same_candidates(const Ranking &a, const Ranking &b, std::string_view context) {
    bool same = a.size() == b.size() &&
                std::all_of(a.begin(), a.end(), [&](const CandidateId &id) { return b.contains(id); });
    if (same) {
        return;
    }
    std::vector<std::string> only_a, only_b;
    for (const auto &id : a) {
        if (!b.contains(id)) only_a.push_back(id.str());
    }
    for (const auto &id : b) {
        if (!a.contains(id)) only_b.push_back(id.str());
    }
    std::sort(only_a.begin(), only_a.end());
    std::sort(only_b.begin(), only_b.end());
    auto join = [](const std::vector<std::string> &v) {
        std::string s;
        for (std::size_t i = 0; i < v.size() && i < 8; ++i) {
            s += (i ? " " : "") + v[i];
        }
        if (v.size() > 8) s += " ...";
        return s.empty() ? std::string("(none)") : s;
    };
    throw InvalidArgument(std::string(context) + ": candidate sets differ; only in first: " +
                          join(only_a) + "; only in second: " + join(only_b));
}

Ranking order_by_score(std::span<const std::pair<CandidateId, double>> scores, std::uint64_t seed,
                       double relative_tolerance) {
    std::vector<std::pair<CandidateId, double>> items(scores.begin(), scores.end());
    double scale = 0.0;
    for (const auto &[id, score] : items) {
        if (std::isnan(score)) {
            throw InvalidArgument("NaN score for candidate '" + id.str() + "'");
        }
        scale = std::max(scale, std::abs(score));
    }
    std::sort(items.begin(), items.end(), [](const auto &x, const auto &y) {
        return x.second > y.second || (x.second == y.second && x.first < y.first);
    });
    const double slack = relative_tolerance * scale;
    Rng rng(seed);
    for (std::size_t lo = 0; lo < items.size();) {
        std::size_t hi = lo + 1;
        while (hi < items.size() && items[hi - 1].second - items[hi].second <= slack) {
            ++hi;
        }
        const auto first = items.begin() + static_cast<std::ptrdiff_t>(lo);
        const auto last = items.begin() + static_cast<std::ptrdiff_t>(hi);
        // Scores inside a group may differ by rounding; start the shuffle from id order.
        std::sort(first, last, [](const auto &x, const auto &y) { return x.first < y.first; });
        std::shuffle(first, last, rng);
        lo = hi;
    }
    std::vector<CandidateId> order;
    order.reserve(items.size());
    for (auto &item : items) {
        order.push_back(std::move(item.first));
    }
    return Ranking(std::move(order));
}

std::vector<Ranking> read_rankings(std::istream &in, const std::string &source) {
    std::vector<Ranking> rankings;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream tokens(line);
        std::vector<CandidateId> order;
        std::string token;
        while (tokens >> token) {
            order.emplace_back(std::move(token));
        }
        if (order.empty() || order.front().str().starts_with('#')) {
            continue;
        }
        try {
            rankings.emplace_back(std::move(order));
        } catch (const InvalidArgument &e) {
            throw ParseError(source, line_no, e.what());
        }
    }
    return rankings;
}

std::vector<Ranking> read_rankings_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open ranking file '" + path + "'");
    }
    return read_rankings(in, path);
}

void write_ranking(std::ostream &out, const Ranking &ranking) {
    for (std::size_t i = 0; i < ranking.size(); ++i) {
        out << (i ? " " : "") << ranking[i];
    }
    out << '\n';
}

void write_rankings(std::ostream &out, std::span<const Ranking> rankings) {
    for (const auto &r : rankings) {
        write_ranking(out, r);
    }
}

} // namespace skrank
