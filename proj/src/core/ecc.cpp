#include <skrank/core/ecc.hpp>

#include <string>

#include <skrank/core/error.hpp>

namespace skrank {

namespace {

using Index = MajorityTable::Index;

// Iterative DFS over an implicit dense digraph on n vertices. `edge(u, v)`
// answers adjacency; `visit_done(u)` fires when u finishes.
template <class Edge, class Done>
void dense_dfs(std::size_t n, Index root, std::vector<bool> &seen, Edge edge, Done visit_done) {
    std::vector<std::pair<Index, Index>> stack;  // (vertex, next candidate neighbour)
    seen[root] = true;
    stack.emplace_back(root, 0);
    while (!stack.empty()) {
        auto &[u, next] = stack.back();
        bool pushed = false;
        while (next < n) {
            Index v = next++;
            if (v != u && !seen[v] && edge(u, v)) {
                seen[v] = true;
                stack.emplace_back(v, 0);
                pushed = true;
                break;
            }
        }
        if (!pushed) {
            visit_done(stack.back().first);
            stack.pop_back();
        }
    }
}

} // namespace

EccResult ecc_check(const Ranking &aggregate, const MajorityTable &table) {
    const std::size_t n = table.candidate_count();
    if (!aggregate.is_total() || aggregate.size() != n) {
        throw InvalidArgument("ecc_check: aggregate must be a total ordering of the table's " +
                              std::to_string(n) + " candidates");
    }
    for (const auto &id : aggregate) {
        if (!table.index_of(id)) {
            throw InvalidArgument("ecc_check: candidate '" + id.str() + "' is not covered by the table");
        }
    }

    EccResult result;
    if (n == 0) {
        return result;
    }

    // Forward edge u -> v iff u does not strictly beat v; edges point from
    // weaker to stronger, so the sink component holds the winners.
    auto forward = [&](Index u, Index v) { return table.compare(u, v) != 1; };
    auto backward = [&](Index u, Index v) { return table.compare(u, v) != -1; };

    std::vector<bool> seen(n, false);
    std::vector<Index> finish_order;
    finish_order.reserve(n);
    for (Index s = 0; s < n; ++s) {
        if (!seen[s]) {
            dense_dfs(n, s, seen, forward, [&](Index u) { finish_order.push_back(u); });
        }
    }

    // Second pass on the transpose in decreasing finish time yields components
    // in topological order of the forward graph: weakest block first.
    std::vector<int> component(n, -1);
    std::vector<std::vector<CandidateId>> weakest_first;
    std::fill(seen.begin(), seen.end(), false);
    for (auto it = finish_order.rbegin(); it != finish_order.rend(); ++it) {
        if (seen[*it]) continue;
        const int c = static_cast<int>(weakest_first.size());
        weakest_first.emplace_back();
        dense_dfs(n, *it, seen, backward, [&](Index u) {
            component[u] = c;
            weakest_first.back().push_back(table.candidates()[u]);
        });
    }

    const int blocks = static_cast<int>(weakest_first.size());
    result.blocks.assign(weakest_first.rbegin(), weakest_first.rend());

    // Block rank 0 is the strongest. Ranks must be non-decreasing along the aggregate.
    int previous_rank = 0;
    for (std::size_t pos = 0; pos < aggregate.size(); ++pos) {
        const Index u = *table.index_of(aggregate[pos]);
        const int rank = blocks - 1 - component[u];
        if (pos > 0 && rank < previous_rank) {
            result.violation = EccViolation{aggregate[pos], aggregate[pos - 1]};
            break;
        }
        previous_rank = rank;
    }
    return result;
}

} // namespace skrank
