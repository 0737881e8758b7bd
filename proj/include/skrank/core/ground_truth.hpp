#ifndef SKRANK_CORE_GROUND_TRUTH_HPP_
#define SKRANK_CORE_GROUND_TRUTH_HPP_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include <skrank/core/candidate.hpp>

namespace skrank {

/**
 * Ground-truth outcome per candidate (future retweets, downloads, ...) and
 * the binary label derived from it: positive iff value >= threshold.
 */
class GroundTruth {
public:
    struct Record {
        CandidateId id;
        double value = 0.0;
        bool positive = false;
    };

    GroundTruth() = default;

    /// Labels derived from values; throws InvalidArgument on duplicate ids or a
    /// non-finite threshold/value.
    static GroundTruth from_values(std::span<const std::pair<CandidateId, double>> values, double threshold);

    /// Explicit labels; values are set to 1 (positive) or 0 with threshold 1.
    static GroundTruth from_labels(std::span<const std::pair<CandidateId, bool>> labels);

    bool contains(const CandidateId &id) const { return index_.contains(id); }
    /// Throws InvalidArgument for unknown ids.
    bool is_positive(const CandidateId &id) const;
    double value(const CandidateId &id) const;

    double threshold() const noexcept { return threshold_; }
    std::size_t size() const noexcept { return records_.size(); }
    std::size_t positive_count() const noexcept { return positives_; }
    std::size_t negative_count() const noexcept { return records_.size() - positives_; }

    /// Records sorted by candidate id.
    const std::vector<Record> &records() const noexcept { return records_; }

    /// The records whose id is in `keep`.
    GroundTruth subset(const std::unordered_set<CandidateId> &keep) const;

private:
    void index();

    std::vector<Record> records_;
    std::unordered_map<CandidateId, std::size_t> index_;
    std::size_t positives_ = 0;
    double threshold_ = 0.0;
};

/// Parses `candidate_id<TAB>value` lines; '#' comment and blank lines skipped.
/// Throws ParseError with the offending line number.
std::vector<std::pair<CandidateId, double>> read_truth_values(std::istream &in,
                                                              const std::string &source = "<stream>");
std::vector<std::pair<CandidateId, double>> read_truth_values_file(const std::string &path);

} // namespace skrank

#endif // SKRANK_CORE_GROUND_TRUTH_HPP_
