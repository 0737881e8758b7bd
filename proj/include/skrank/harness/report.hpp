#ifndef SKRANK_HARNESS_REPORT_HPP_
#define SKRANK_HARNESS_REPORT_HPP_

#include <ostream>
#include <string>

#include <nlohmann/json.hpp>

#include <skrank/harness/experiment.hpp>

namespace skrank {

inline constexpr int kReportSchemaVersion = 1;

/// The machine-readable report. `timing` is only present when requested so
/// that two runs of the same config can be compared byte for byte.
nlohmann::json report_to_json(const ExperimentReport &report, bool include_timing = true);

/// One row per ranker or method and metric:
/// `kind,name,source,metric,k,mean,stddev,min,max,trials`.
void write_report_csv(std::ostream &out, const ExperimentReport &report);

void write_report_json_file(const std::string &path, const ExperimentReport &report, bool include_timing = true);
void write_report_csv_file(const std::string &path, const ExperimentReport &report);

} // namespace skrank

#endif // SKRANK_HARNESS_REPORT_HPP_
