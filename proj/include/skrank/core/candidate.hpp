#ifndef SKRANK_CORE_CANDIDATE_HPP_
#define SKRANK_CORE_CANDIDATE_HPP_

#include <compare>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace skrank {

/// Opaque candidate token (a paper id, a user handle, ...).
class CandidateId {
public:
    CandidateId() = default;
    explicit CandidateId(std::string value) : value_(std::move(value)) {}
    explicit CandidateId(std::string_view value) : value_(value) {}
    explicit CandidateId(const char *value) : value_(value) {}

    const std::string &str() const noexcept { return value_; }

    friend bool operator==(const CandidateId &, const CandidateId &) = default;
    friend std::strong_ordering operator<=>(const CandidateId &a, const CandidateId &b) {
        return a.value_.compare(b.value_) <=> 0;
    }

    friend std::ostream &operator<<(std::ostream &os, const CandidateId &id) {
        return os << id.value_;
    }

private:
    std::string value_;
};

} // namespace skrank

template <>
struct std::hash<skrank::CandidateId> {
    std::size_t operator()(const skrank::CandidateId &id) const noexcept {
        return std::hash<std::string>{}(id.str());
    }
};

#endif // SKRANK_CORE_CANDIDATE_HPP_
