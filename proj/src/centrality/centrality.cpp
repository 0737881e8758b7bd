#include <skrank/centrality/centrality.hpp>

#include <cmath>
#include <numeric>

#include <skrank/core/error.hpp>

namespace skrank {

ScoreVector::ScoreVector(std::string metric, std::vector<std::pair<CandidateId, double>> scores)
    : metric_(std::move(metric)), scores_(std::move(scores)) {
    index_.reserve(scores_.size());
    for (std::size_t i = 0; i < scores_.size(); ++i) {
        if (!index_.emplace(scores_[i].first, i).second) {
            throw InvalidArgument("duplicate score for candidate '" + scores_[i].first.str() + "'");
        }
    }
}

std::optional<double> ScoreVector::find(const CandidateId &id) const {
    auto it = index_.find(id);
    if (it == index_.end()) {
        return std::nullopt;
    }
    return scores_[it->second].second;
}

double ScoreVector::at(const CandidateId &id) const {
    auto s = find(id);
    if (!s) {
        throw InvalidArgument(metric_ + ": no score for candidate '" + id.str() + "'");
    }
    return *s;
}

ScoreVector ScoreVector::select(std::span<const CandidateId> candidates, double missing) const {
    std::vector<std::pair<CandidateId, double>> out;
    out.reserve(candidates.size());
    for (const auto &id : candidates) {
        out.emplace_back(id, find(id).value_or(missing));
    }
    return ScoreVector(metric_, std::move(out));
}

namespace {

ScoreVector make_scores(const Graph &graph, std::string metric, const std::vector<double> &values) {
    std::vector<std::pair<CandidateId, double>> out;
    out.reserve(values.size());
    for (Graph::Node u = 0; u < graph.node_count(); ++u) {
        out.emplace_back(graph.name(u), values[u]);
    }
    return ScoreVector(std::move(metric), std::move(out));
}

double l1_distance(const std::vector<double> &a, const std::vector<double> &b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        d += std::abs(a[i] - b[i]);
    }
    return d;
}

void l2_normalize(std::vector<double> &v) {
    const double norm = std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
    if (norm > 0.0) {
        for (double &x : v) x /= norm;
    }
}

} // namespace

ScoreVector degree(const Graph &graph, Direction direction, bool weighted) {
    std::vector<double> values(graph.node_count(), 0.0);
    for (const auto &e : graph.edges()) {
        const Graph::Node u = direction == Direction::in ? e.dst : e.src;
        values[u] += weighted ? e.weight : 1.0;
    }
    std::string name = std::string(weighted ? "weighted_" : "") + (direction == Direction::in ? "indegree" : "outdegree");
    return make_scores(graph, std::move(name), values);
}

ScoreVector pagerank(const Graph &graph, const PageRankOptions &options) {
    if (!(options.damping > 0.0 && options.damping < 1.0)) {
        throw InvalidArgument("pagerank: damping must lie in (0, 1)");
    }
    const std::size_t n = graph.node_count();
    if (n == 0) {
        return ScoreVector("pagerank", {});
    }
    const double inv_n = 1.0 / static_cast<double>(n);
    std::vector<double> out_weight(n, 0.0);
    for (const auto &e : graph.edges()) {
        out_weight[e.src] += e.weight;
    }

    std::vector<double> rank(n, inv_n), next(n);
    double residual = 0.0;
    for (int iter = 0; iter < options.max_iterations; ++iter) {
        double dangling = 0.0;
        for (std::size_t u = 0; u < n; ++u) {
            if (out_weight[u] == 0.0) dangling += rank[u];
        }
        const double base = (1.0 - options.damping) * inv_n + options.damping * dangling * inv_n;
        for (Graph::Node v = 0; v < n; ++v) {
            double incoming = 0.0;
            for (const auto &arc : graph.in_arcs(v)) {
                incoming += rank[arc.node] * arc.weight / out_weight[arc.node];
            }
            next[v] = base + options.damping * incoming;
        }
        const double total = std::accumulate(next.begin(), next.end(), 0.0);
        for (double &x : next) x /= total;
        residual = l1_distance(rank, next);
        rank.swap(next);
        if (residual < options.tolerance) {
            return make_scores(graph, "pagerank", rank);
        }
    }
    throw ConvergenceError("pagerank did not converge in " + std::to_string(options.max_iterations) + " iterations",
                           residual);
}

HitsScores hits(const Graph &graph, const HitsOptions &options) {
    if (graph.edge_count() == 0) {
        throw InvalidArgument("hits: graph has no edges");
    }
    const std::size_t n = graph.node_count();
    std::vector<double> hub(n, 1.0), auth(n, 0.0);
    l2_normalize(hub);
    std::vector<double> next_hub(n), next_auth(n);
    double residual = 0.0;
    for (int iter = 0; iter < options.max_iterations; ++iter) {
        std::fill(next_auth.begin(), next_auth.end(), 0.0);
        for (const auto &e : graph.edges()) {
            next_auth[e.dst] += e.weight * hub[e.src];
        }
        l2_normalize(next_auth);
        std::fill(next_hub.begin(), next_hub.end(), 0.0);
        for (const auto &e : graph.edges()) {
            next_hub[e.src] += e.weight * next_auth[e.dst];
        }
        l2_normalize(next_hub);
        residual = std::max(l1_distance(hub, next_hub), l1_distance(auth, next_auth));
        hub.swap(next_hub);
        auth.swap(next_auth);
        if (residual < options.tolerance) {
            return {make_scores(graph, "hub", hub), make_scores(graph, "authority", auth)};
        }
    }
    throw ConvergenceError("hits did not converge in " + std::to_string(options.max_iterations) + " iterations",
                           residual);
}

Ranking ranking_from_scores(const ScoreVector &scores, std::uint64_t seed) {
    return order_by_score(scores.entries(), seed);
}

} // namespace skrank
