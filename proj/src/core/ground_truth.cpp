#include <skrank/core/ground_truth.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

#include <skrank/core/error.hpp>

namespace skrank {

GroundTruth GroundTruth::from_values(std::span<const std::pair<CandidateId, double>> values, double threshold) {
    if (!std::isfinite(threshold)) {
        throw InvalidArgument("ground truth threshold must be finite");
    }
    GroundTruth truth;
    truth.threshold_ = threshold;
    truth.records_.reserve(values.size());
    for (const auto &[id, value] : values) {
        if (!std::isfinite(value)) {
            throw InvalidArgument("ground truth value for '" + id.str() + "' is not finite");
        }
        truth.records_.push_back({id, value, value >= threshold});
    }
    truth.index();
    return truth;
}

GroundTruth GroundTruth::from_labels(std::span<const std::pair<CandidateId, bool>> labels) {
    GroundTruth truth;
    truth.threshold_ = 1.0;
    truth.records_.reserve(labels.size());
    for (const auto &[id, positive] : labels) {
        truth.records_.push_back({id, positive ? 1.0 : 0.0, positive});
    }
    truth.index();
    return truth;
}

void GroundTruth::index() {
    std::sort(records_.begin(), records_.end(), [](const Record &a, const Record &b) { return a.id < b.id; });
    index_.clear();
    index_.reserve(records_.size());
    positives_ = 0;
    for (std::size_t i = 0; i < records_.size(); ++i) {
        if (!index_.emplace(records_[i].id, i).second) {
            throw InvalidArgument("duplicate ground truth entry for '" + records_[i].id.str() + "'");
        }
        positives_ += records_[i].positive ? 1 : 0;
    }
}

bool GroundTruth::is_positive(const CandidateId &id) const {
    auto it = index_.find(id);
    if (it == index_.end()) {
        throw InvalidArgument("no ground truth for candidate '" + id.str() + "'");
    }
    return records_[it->second].positive;
}

double GroundTruth::value(const CandidateId &id) const {
    auto it = index_.find(id);
    if (it == index_.end()) {
        throw InvalidArgument("no ground truth for candidate '" + id.str() + "'");
    }
    return records_[it->second].value;
}

GroundTruth GroundTruth::subset(const std::unordered_set<CandidateId> &keep) const {
    GroundTruth out;
    out.threshold_ = threshold_;
    for (const auto &r : records_) {
        if (keep.contains(r.id)) {
            out.records_.push_back(r);
        }
    }
    out.index();
    return out;
}

std::vector<std::pair<CandidateId, double>> read_truth_values(std::istream &in, const std::string &source) {
    std::vector<std::pair<CandidateId, double>> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        std::istringstream fields(line);
        std::string id, value_text, extra;
        if (!(fields >> id)) continue;
        if (!(fields >> value_text)) {
            throw ParseError(source, line_no, "expected 'candidate_id<TAB>value'");
        }
        if (fields >> extra) {
            throw ParseError(source, line_no, "unexpected trailing field '" + extra + "'");
        }
        double value = 0.0;
        auto [ptr, ec] = std::from_chars(value_text.data(), value_text.data() + value_text.size(), value);
        if (ec != std::errc() || ptr != value_text.data() + value_text.size() || !std::isfinite(value)) {
            throw ParseError(source, line_no, "malformed value '" + value_text + "'");
        }
        out.emplace_back(CandidateId(id), value);
    }
    return out;
}

std::vector<std::pair<CandidateId, double>> read_truth_values_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open ground truth file '" + path + "'");
    }
    return read_truth_values(in, path);
}

} // namespace skrank
