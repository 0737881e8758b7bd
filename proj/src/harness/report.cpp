#include <skrank/harness/report.hpp>

#include <fstream>
#include <iomanip>

#include <skrank/core/error.hpp>

namespace skrank {

namespace {

using nlohmann::json;

json summary_json(const MetricSummary &s) {
    return json{{"mean", s.mean}, {"stddev", s.stddev}, {"min", s.min},
                {"max", s.max},   {"per_trial", s.per_trial}};
}

json entry_json(const ScoredEntry &e, std::size_t ap_k) {
    json out{{"name", e.name},
             {"kind", e.kind},
             {"auc", summary_json(e.auc)},
             {"ap_at_k", summary_json(e.ap_at_k)},
             {"k", ap_k}};
    if (e.roc) {
        out["roc"] = json{{"fpr", e.roc->false_positive_rate}, {"tpr", e.roc->true_positive_rate}};
    }
    return out;
}

json trial_json(const TrialRecord &t) {
    json out{{"index", t.index},
             {"seed", t.seed},
             {"train_size", t.train_size},
             {"test_size", t.test_size},
             {"ap_k", t.ap_k},
             {"weights", t.weights},
             {"weight_metric_values", t.weight_metric_values},
             {"warnings", t.warnings}};
    out["error"] = t.error ? json(*t.error) : json(nullptr);
    return out;
}

std::string csv_field(const std::string &text) {
    if (text.find_first_of(",\"\n") == std::string::npos) {
        return text;
    }
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

void write_csv_rows(std::ostream &out, const char *kind, const ScoredEntry &e, std::size_t ap_k) {
    auto row = [&](const char *metric, std::size_t k, const MetricSummary &s) {
        out << kind << ',' << csv_field(e.name) << ',' << csv_field(e.kind) << ',' << metric << ',';
        if (k > 0) out << k;
        out << ',' << s.mean << ',' << s.stddev << ',' << s.min << ',' << s.max << ',' << s.per_trial.size()
            << '\n';
    };
    row("auc", 0, e.auc);
    row("ap_at_k", ap_k, e.ap_at_k);
}

} // namespace

json report_to_json(const ExperimentReport &report, bool include_timing) {
    json ingest = json::array();
    for (const auto &[name, stats] : report.ingest) {
        ingest.push_back(json{{"graph", name},
                              {"edges_read", stats.edges_read},
                              {"self_loops_dropped", stats.self_loops_dropped},
                              {"parallel_merged", stats.parallel_merged}});
    }
    json rankers = json::array();
    for (std::size_t i = 0; i < report.rankers.size(); ++i) {
        json r = entry_json(report.rankers[i], report.ap_k);
        if (i < report.missing_from_graph.size()) {
            r["missing_from_graph"] = report.missing_from_graph[i];
        }
        rankers.push_back(std::move(r));
    }
    json methods = json::array();
    for (const auto &m : report.methods) {
        methods.push_back(entry_json(m, report.ap_k));
    }
    json trials = json::array();
    for (const auto &t : report.trials) {
        trials.push_back(trial_json(t));
    }

    json out{{"schema_version", kReportSchemaVersion},
             {"software_version", report.software_version},
             {"seed", report.seed},
             {"config", report.config},
             {"dataset",
              {{"kind", report.dataset_kind},
               {"candidates", report.candidates},
               {"positives", report.positives},
               {"dropped_unlabeled", report.dropped_unlabeled},
               {"ingest", ingest}}},
             {"rankers", rankers},
             {"methods", methods},
             {"trials", trials},
             {"warnings", report.warnings}};
    if (include_timing) {
        out["timing"] = json{{"prepare_seconds", report.timing.prepare_seconds},
                             {"trials_seconds", report.timing.trials_seconds},
                             {"total_seconds", report.timing.total_seconds}};
    }
    return out;
}

void write_report_csv(std::ostream &out, const ExperimentReport &report) {
    const auto flags = out.flags();
    const auto precision = out.precision();
    out << std::setprecision(10);
    out << "kind,name,source,metric,k,mean,stddev,min,max,trials\n";
    for (const auto &r : report.rankers) write_csv_rows(out, "ranker", r, report.ap_k);
    for (const auto &m : report.methods) write_csv_rows(out, "method", m, report.ap_k);
    out.flags(flags);
    out.precision(precision);
}

void write_report_json_file(const std::string &path, const ExperimentReport &report, bool include_timing) {
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot write report '" + path + "'");
    }
    out << report_to_json(report, include_timing).dump(2) << '\n';
}

void write_report_csv_file(const std::string &path, const ExperimentReport &report) {
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot write report '" + path + "'");
    }
    write_report_csv(out, report);
}

} // namespace skrank
