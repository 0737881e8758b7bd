#include <skrank/core/kendall.hpp>

#include <vector>

#include <skrank/core/error.hpp>

namespace skrank {

namespace {

std::uint64_t count_inversions(std::vector<std::size_t> &v, std::vector<std::size_t> &scratch,
                               std::size_t lo, std::size_t hi) {
    if (hi - lo < 2) {
        return 0;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    std::uint64_t inversions = count_inversions(v, scratch, lo, mid) + count_inversions(v, scratch, mid, hi);
    std::size_t i = lo, j = mid, out = lo;
    while (i < mid && j < hi) {
        if (v[j] < v[i]) {
            inversions += mid - i;
            scratch[out++] = v[j++];
        } else {
            scratch[out++] = v[i++];
        }
    }
    while (i < mid) scratch[out++] = v[i++];
    while (j < hi) scratch[out++] = v[j++];
    std::copy(scratch.begin() + static_cast<std::ptrdiff_t>(lo),
              scratch.begin() + static_cast<std::ptrdiff_t>(hi),
              v.begin() + static_cast<std::ptrdiff_t>(lo));
    return inversions;
}

void require_total(const Ranking &r, const char *what) {
    if (!r.is_total()) {
        throw InvalidArgument(std::string(what) + " requires total orderings");
    }
}

} // namespace

std::uint64_t kendall_tau(const Ranking &a, const Ranking &b) {
    require_total(a, "kendall_tau");
    require_total(b, "kendall_tau");
    require_same_candidates(a, b, "kendall_tau");
    // Positions in b, listed in a's order; discordant pairs are inversions.
    std::vector<std::size_t> seq;
    seq.reserve(a.size());
    for (const auto &id : a) {
        seq.push_back(b.position(id));
    }
    std::vector<std::size_t> scratch(seq.size());
    return count_inversions(seq, scratch, 0, seq.size());
}

std::uint64_t kendall_concordant(const Ranking &a, const Ranking &b) {
    const std::uint64_t m = a.size();
    return m * (m - (m > 0 ? 1 : 0)) / 2 - kendall_tau(a, b);
}

double mean_kendall(const Ranking &candidate, std::span<const Ranking> inputs) {
    if (inputs.empty()) {
        throw InvalidArgument("mean_kendall: empty input list");
    }
    double total = 0.0;
    for (const auto &input : inputs) {
        total += static_cast<double>(kendall_tau(candidate, input));
    }
    return total / static_cast<double>(inputs.size());
}

} // namespace skrank
