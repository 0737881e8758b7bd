#include <skrank/core/kemeny_oracle.hpp>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

#include <skrank/core/error.hpp>

namespace skrank {

KemenyResult brute_force_kemeny(std::span<const Ranking> inputs, std::size_t max_candidates) {
    if (inputs.empty()) {
        throw InvalidArgument("brute_force_kemeny: empty input list");
    }
    for (const auto &r : inputs) {
        if (!r.is_total()) {
            throw InvalidArgument("brute_force_kemeny: inputs must be total orderings");
        }
        require_same_candidates(inputs.front(), r, "brute_force_kemeny");
    }
    const std::size_t m = inputs.front().size();
    if (m > max_candidates) {
        throw InvalidArgument("brute_force_kemeny: " + std::to_string(m) +
                              " candidates exceed the enumeration cap of " + std::to_string(max_candidates));
    }

    std::vector<CandidateId> ids = inputs.front().order();
    std::sort(ids.begin(), ids.end());

    // before[i][j]: number of inputs ranking ids[i] above ids[j].
    std::vector<std::vector<std::uint64_t>> before(m, std::vector<std::uint64_t>(m, 0));
    for (const auto &r : inputs) {
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                if (i != j && r.position(ids[i]) < r.position(ids[j])) {
                    ++before[i][j];
                }
            }
        }
    }

    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::size_t> best = perm;
    std::uint64_t best_cost = std::numeric_limits<std::uint64_t>::max();
    do {
        std::uint64_t cost = 0;
        for (std::size_t a = 0; a < m && cost < best_cost; ++a) {
            for (std::size_t b = a + 1; b < m; ++b) {
                cost += before[perm[b]][perm[a]];
            }
        }
        if (cost < best_cost) {
            best_cost = cost;
            best = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<CandidateId> order;
    order.reserve(m);
    for (auto i : best) {
        order.push_back(ids[i]);
    }
    return {Ranking(std::move(order)), static_cast<double>(best_cost) / static_cast<double>(inputs.size())};
}

} // namespace skrank
