#include <skrank/harness/experiment.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <set>
#include <thread>
#include <unordered_set>

#include <skrank/aggregate/aggregate.hpp>
#include <skrank/aggregate/weights.hpp>
#include <skrank/core/error.hpp>
#include <skrank/core/random.hpp>
#include <skrank/eval/logistic.hpp>
#include <skrank/eval/split.hpp>

namespace skrank {

namespace {

// Seed streams derived from the master seed.
constexpr std::uint64_t kSyntheticStream = 1;
constexpr std::uint64_t kTrialStreamBase = 100;
constexpr std::uint64_t kRankerTieStreamBase = 1000;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

class StageError : public Error {
public:
    StageError(const std::string &stage, const std::string &what) : Error(stage + ": " + what) {}
};

template <class F>
auto in_stage(const std::string &stage, F &&f) -> decltype(f()) {
    try {
        return f();
    } catch (const StageError &) {
        throw;
    } catch (const std::exception &e) {
        throw StageError(stage, e.what());
    }
}

ScoreVector compute_metric(const Graph &graph, const std::string &metric, const GraphDataset &cfg,
                           std::map<std::string, ScoreVector> &cache) {
    if (auto it = cache.find(metric); it != cache.end()) {
        return it->second;
    }
    if (metric == "indegree") return cache[metric] = degree(graph, Direction::in, false);
    if (metric == "outdegree") return cache[metric] = degree(graph, Direction::out, false);
    if (metric == "weighted_indegree") return cache[metric] = degree(graph, Direction::in, true);
    if (metric == "weighted_outdegree") return cache[metric] = degree(graph, Direction::out, true);
    if (metric == "pagerank") return cache[metric] = pagerank(graph, cfg.pagerank);
    if (metric == "hub" || metric == "authority") {
        auto h = hits(graph, cfg.hits);
        cache["hub"] = std::move(h.hub);
        cache["authority"] = std::move(h.authority);
        return cache[metric];
    }
    throw InvalidArgument("unknown centrality metric '" + metric + "'");
}

PreparedDataset prepare_graph_dataset(const GraphDataset &cfg, std::uint64_t seed) {
    PreparedDataset out;
    out.kind = "graph";

    const auto values = in_stage("load truth", [&] { return read_truth_values_file(cfg.truth_path); });
    out.truth = in_stage("load truth", [&] { return GroundTruth::from_values(values, cfg.threshold); });
    std::vector<CandidateId> labelled;
    labelled.reserve(out.truth.size());
    for (const auto &r : out.truth.records()) {
        labelled.push_back(r.id);
    }

    std::map<std::string, Graph> graphs;
    std::unordered_set<CandidateId> unlabeled;
    for (const auto &g : cfg.graphs) {
        IngestStats stats;
        Graph graph = in_stage("load graph " + g.name, [&] { return read_edge_list_file(g.path, g.mode, &stats); });
        for (const auto &name : graph.names()) {
            if (!out.truth.contains(name)) unlabeled.insert(name);
        }
        out.ingest.emplace_back(g.name, stats);
        graphs.emplace(g.name, std::move(graph));
    }
    out.dropped_unlabeled = unlabeled.size();

    std::map<std::string, std::map<std::string, ScoreVector>> caches;
    for (std::size_t i = 0; i < cfg.rankers.size(); ++i) {
        const auto &r = cfg.rankers[i];
        const Graph &graph = graphs.at(r.graph);
        const ScoreVector full = in_stage("centrality " + r.name,
                                          [&] { return compute_metric(graph, r.metric, cfg, caches[r.graph]); });
        std::size_t missing = 0;
        for (const auto &id : labelled) {
            if (!graph.find(id)) ++missing;
        }
        out.missing_from_graph.push_back(missing);
        ScoreVector selected = full.select(labelled, 0.0);
        out.rankings.push_back(ranking_from_scores(selected, derive_seed(seed, kRankerTieStreamBase + i)));
        out.scores.push_back(std::move(selected));
        out.ranker_names.push_back(r.name);
    }
    return out;
}

PreparedDataset prepare_synthetic_dataset(const SyntheticStudy &study, std::uint64_t seed) {
    auto data = in_stage("synthetic", [&] { return make_synthetic_dataset(study, derive_seed(seed, kSyntheticStream)); });
    PreparedDataset out;
    out.kind = "synthetic";
    out.ranker_names = std::move(data.ranker_names);
    out.scores = std::move(data.scores);
    out.rankings = std::move(data.rankings);
    out.truth = std::move(data.truth);
    out.missing_from_graph.assign(out.rankings.size(), 0);
    return out;
}

struct Evaluation {
    double auc = 0.0;
    double ap = 0.0;
    std::optional<RocCurve> roc;
};

struct TrialOutcome {
    TrialRecord record;
    std::vector<Evaluation> rankers;
    std::vector<Evaluation> methods;
};

Evaluation evaluate_on(const Ranking &ranking, const GroundTruth &test_truth,
                       const std::unordered_set<CandidateId> &test_ids, std::size_t k, ApDenominator denominator,
                       bool want_roc) {
    const Ranking on_test = ranking.restricted_to(test_ids);
    if (on_test.size() != test_ids.size()) {
        throw InvalidArgument("ranking covers " + std::to_string(on_test.size()) + " of " +
                              std::to_string(test_ids.size()) + " test candidates");
    }
    Evaluation e;
    e.auc = auc(on_test, test_truth);
    e.ap = average_precision_at_k(on_test, test_truth, k, denominator);
    if (want_roc) {
        e.roc = roc_curve(on_test, test_truth);
    }
    return e;
}

TrialOutcome run_trial(const ExperimentConfig &config, const PreparedDataset &data, const Split &split, int index) {
    TrialOutcome out;
    TrialRecord &rec = out.record;
    rec.index = index;
    rec.seed = derive_seed(config.seed, kTrialStreamBase + static_cast<std::uint64_t>(index));
    rec.train_size = split.train.size();
    rec.test_size = split.test.size();
    rec.ap_k = std::min(config.ap_k, split.test.size());
    const bool want_roc = config.include_roc && index == 0;

    const std::unordered_set<CandidateId> train_ids(split.train.begin(), split.train.end());
    const std::unordered_set<CandidateId> test_ids(split.test.begin(), split.test.end());
    // The weight path only ever sees this restricted view of the labels.
    const GroundTruth train_truth = data.truth.subset(train_ids);
    const GroundTruth test_truth = data.truth.subset(test_ids);

    std::map<std::string, RankerWeights> learned;
    auto weights_for = [&](WeightMetric metric) -> const std::vector<double> & {
        const std::string key(to_string(metric));
        auto it = learned.find(key);
        if (it == learned.end()) {
            WeightOptions opts = config.weights;
            opts.metric = metric;
            auto w = in_stage("weights", [&] { return compute_ranker_weights(data.rankings, train_truth, opts); });
            for (const auto &warning : w.warnings) rec.warnings.push_back("weights: " + warning);
            rec.weights[key] = w.weights;
            rec.weight_metric_values[key] = w.metric_values;
            it = learned.emplace(key, std::move(w)).first;
        }
        return it->second.weights;
    };
    // Always record the experiment-wide weights so every trial carries them.
    weights_for(config.weights.metric);

    for (std::size_t p = 0; p < data.rankings.size(); ++p) {
        out.rankers.push_back(in_stage("evaluate " + data.ranker_names[p], [&] {
            return evaluate_on(data.rankings[p], test_truth, test_ids, rec.ap_k, config.ap_denominator, want_roc);
        }));
    }

    for (std::size_t mi = 0; mi < config.methods.size(); ++mi) {
        const MethodConfig &m = config.methods[mi];
        const std::uint64_t method_seed = derive_seed(rec.seed, mi);
        Ranking result;
        if (m.logistic_regression) {
            auto lr = in_stage("method " + m.name, [&] {
                return logistic_regression_baseline(data.scores, data.truth, split.train, split.test, method_seed,
                                                    config.logistic);
            });
            for (const auto &warning : lr.warnings) rec.warnings.push_back(m.name + ": " + warning);
            result = std::move(lr.ranking);
        } else {
            AggregationSpec spec;
            spec.method = *m.method;
            if (m.supervised) {
                spec.weights = weights_for(m.weight_metric.value_or(config.weights.metric));
            }
            spec.top_k = m.top_k;
            spec.sort_kind = m.sort;
            spec.seed = method_seed;
            if (m.initial == InitialOrdering::borda) {
                spec.initial = borda(data.rankings, method_seed);
            }
            result = in_stage("method " + m.name, [&] { return aggregate(data.rankings, spec); });
        }
        out.methods.push_back(in_stage("evaluate " + m.name, [&] {
            return evaluate_on(result, test_truth, test_ids, rec.ap_k, config.ap_denominator, want_roc);
        }));
    }
    return out;
}

ScoredEntry summarize_entry(std::string name, std::string kind, const std::vector<TrialOutcome> &outcomes,
                            std::vector<Evaluation> TrialOutcome::*member, std::size_t index) {
    ScoredEntry entry;
    entry.name = std::move(name);
    entry.kind = std::move(kind);
    std::vector<double> aucs, aps;
    for (const auto &o : outcomes) {
        if (o.record.error) continue;
        const Evaluation &e = (o.*member)[index];
        aucs.push_back(e.auc);
        aps.push_back(e.ap);
        if (e.roc && !entry.roc) entry.roc = e.roc;
    }
    entry.auc = summarize(aucs);
    entry.ap_at_k = summarize(aps);
    return entry;
}

} // namespace

PreparedDataset prepare_dataset(const ExperimentConfig &config) {
    if (const auto *graph = std::get_if<GraphDataset>(&config.dataset)) {
        return prepare_graph_dataset(*graph, config.seed);
    }
    return prepare_synthetic_dataset(std::get<SyntheticStudy>(config.dataset), config.seed);
}

ExperimentReport run_experiment(const ExperimentConfig &config) {
    const auto start = Clock::now();
    validate_config(config);
    const PreparedDataset data = prepare_dataset(config);
    const double prepare_seconds = seconds_since(start);
    ExperimentReport report = run_experiment(config, data);
    report.timing.prepare_seconds = prepare_seconds;
    report.timing.total_seconds = seconds_since(start);
    return report;
}

ExperimentReport run_experiment(const ExperimentConfig &config, const PreparedDataset &data) {
    const auto start = Clock::now();
    ExperimentReport report;
    report.software_version = SKRANK_VERSION;
    report.config = config.source;
    report.seed = config.seed;
    report.dataset_kind = data.kind;
    report.candidates = data.truth.size();
    report.positives = data.truth.positive_count();
    report.dropped_unlabeled = data.dropped_unlabeled;
    report.missing_from_graph = data.missing_from_graph;
    report.ingest = data.ingest;
    report.ap_k = config.ap_k;

    if (data.dropped_unlabeled > 0) {
        report.warnings.push_back(std::to_string(data.dropped_unlabeled) +
                                  " graph nodes have no ground-truth record and were dropped");
    }
    for (std::size_t p = 0; p < data.missing_from_graph.size(); ++p) {
        if (data.missing_from_graph[p] > 0) {
            report.warnings.push_back(data.ranker_names[p] + ": " + std::to_string(data.missing_from_graph[p]) +
                                      " labelled candidates are not in the graph and score 0");
        }
    }

    const std::vector<Split> splits = in_stage("split", [&] { return stratified_split(data.truth, config.split); });
    std::vector<TrialOutcome> outcomes(splits.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t t = next++; t < splits.size(); t = next++) {
            try {
                outcomes[t] = run_trial(config, data, splits[t], static_cast<int>(t));
            } catch (const std::exception &e) {
                TrialOutcome failed;
                failed.record.index = static_cast<int>(t);
                failed.record.seed = derive_seed(config.seed, kTrialStreamBase + t);
                failed.record.train_size = splits[t].train.size();
                failed.record.test_size = splits[t].test.size();
                failed.record.error = e.what();
                outcomes[t] = std::move(failed);
            }
        }
    };
    const std::size_t threads =
        std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(splits.size(), 1));
    {
        std::vector<std::jthread> pool;
        for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
    }

    std::size_t failed = 0;
    for (const auto &o : outcomes) {
        if (o.record.error) {
            ++failed;
            report.warnings.push_back("trial " + std::to_string(o.record.index) + " aborted: " + *o.record.error);
        }
        report.trials.push_back(o.record);
    }
    if (failed == outcomes.size()) {
        report.warnings.push_back("every trial was aborted; summaries are empty");
    }

    for (std::size_t p = 0; p < data.rankings.size(); ++p) {
        report.rankers.push_back(summarize_entry(data.ranker_names[p], data.scores[p].metric(), outcomes,
                                                 &TrialOutcome::rankers, p));
    }
    for (std::size_t mi = 0; mi < config.methods.size(); ++mi) {
        const auto &m = config.methods[mi];
        const std::string kind = m.logistic_regression ? "logistic_regression" : std::string(to_string(*m.method));
        report.methods.push_back(summarize_entry(m.name, kind, outcomes, &TrialOutcome::methods, mi));
    }
    report.timing.trials_seconds = seconds_since(start);
    report.timing.total_seconds = report.timing.trials_seconds;
    return report;
}

} // namespace skrank
