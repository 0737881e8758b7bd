#include <skrank/harness/config.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <set>

#include <skrank/core/error.hpp>
#include <skrank/core/random.hpp>

namespace skrank {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// Split seeds are derived from the master seed on this stream.
constexpr std::uint64_t kSplitStream = 2;

void reject_unknown(const json &obj, const std::string &where, std::initializer_list<const char *> known) {
    if (!obj.is_object()) {
        throw InvalidArgument(where + ": expected an object");
    }
    for (const auto &[key, value] : obj.items()) {
        if (std::none_of(known.begin(), known.end(), [&](const char *k) { return key == k; })) {
            throw InvalidArgument(where + ": unknown key '" + key + "'");
        }
    }
}

template <class T>
T get_or(const json &obj, const char *key, T fallback, const std::string &where) {
    if (!obj.contains(key)) {
        return fallback;
    }
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception &e) {
        throw InvalidArgument(where + "." + key + ": " + e.what());
    }
}

template <class T>
T require(const json &obj, const char *key, const std::string &where) {
    if (!obj.contains(key)) {
        throw InvalidArgument(where + ": missing required key '" + key + "'");
    }
    return get_or<T>(obj, key, T{}, where);
}

std::string resolve_path(const std::string &path, const std::string &base_dir) {
    fs::path p(path);
    if (p.is_relative()) {
        p = fs::path(base_dir) / p;
    }
    return p.lexically_normal().string();
}

ParallelEdges parse_parallel_edges(const std::string &name, const std::string &where) {
    if (name == "collapse") return ParallelEdges::collapse;
    if (name == "sum") return ParallelEdges::sum;
    throw InvalidArgument(where + ": parallel_edges must be 'collapse' or 'sum'");
}

TopK parse_top_k(const json &value, const std::string &where) {
    try {
        if (value.is_string() && value.get<std::string>() == "all") {
            return TopK::all();
        }
        if (value.is_number_unsigned() || value.is_number_integer()) {
            const auto k = value.get<long long>();
            if (k <= 0) throw InvalidArgument("top_k must be positive");
            return TopK::count(static_cast<std::size_t>(k));
        }
        if (value.is_number_float()) {
            return TopK::fraction(value.get<double>());
        }
    } catch (const InvalidArgument &e) {
        throw InvalidArgument(where + ".top_k: " + e.what());
    }
    throw InvalidArgument(where + ".top_k: expected a positive integer, a fraction in (0, 1] or \"all\"");
}

const std::set<std::string> &known_metrics() {
    static const std::set<std::string> metrics{"indegree",  "outdegree", "weighted_indegree", "weighted_outdegree",
                                               "pagerank", "hub",       "authority"};
    return metrics;
}

GraphDataset parse_graph_dataset(const json &doc, const std::string &base_dir) {
    const std::string where = "dataset";
    reject_unknown(doc, where, {"kind", "graphs", "rankers", "truth", "pagerank", "hits"});
    GraphDataset out;
    const json graphs = require<json>(doc, "graphs", where);
    if (!graphs.is_array() || graphs.empty()) {
        throw InvalidArgument(where + ".graphs: expected a non-empty array");
    }
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const std::string w = where + ".graphs[" + std::to_string(i) + "]";
        reject_unknown(graphs[i], w, {"name", "path", "parallel_edges"});
        GraphInput g;
        g.name = require<std::string>(graphs[i], "name", w);
        g.path = resolve_path(require<std::string>(graphs[i], "path", w), base_dir);
        g.mode = parse_parallel_edges(get_or<std::string>(graphs[i], "parallel_edges", "collapse", w), w);
        out.graphs.push_back(std::move(g));
    }
    const json rankers = require<json>(doc, "rankers", where);
    if (!rankers.is_array() || rankers.empty()) {
        throw InvalidArgument(where + ".rankers: expected a non-empty array");
    }
    for (std::size_t i = 0; i < rankers.size(); ++i) {
        const std::string w = where + ".rankers[" + std::to_string(i) + "]";
        reject_unknown(rankers[i], w, {"name", "graph", "metric"});
        RankerInput r;
        r.metric = require<std::string>(rankers[i], "metric", w);
        if (!known_metrics().contains(r.metric)) {
            throw InvalidArgument(w + ": unknown metric '" + r.metric + "'");
        }
        r.graph = get_or<std::string>(rankers[i], "graph", out.graphs.front().name, w);
        r.name = get_or<std::string>(rankers[i], "name", r.graph + ":" + r.metric, w);
        out.rankers.push_back(std::move(r));
    }
    const json truth = require<json>(doc, "truth", where);
    reject_unknown(truth, where + ".truth", {"path", "threshold"});
    out.truth_path = resolve_path(require<std::string>(truth, "path", where + ".truth"), base_dir);
    out.threshold = require<double>(truth, "threshold", where + ".truth");
    if (doc.contains("pagerank")) {
        const json &pr = doc["pagerank"];
        reject_unknown(pr, where + ".pagerank", {"damping", "tolerance", "max_iterations"});
        out.pagerank.damping = get_or(pr, "damping", out.pagerank.damping, where + ".pagerank");
        out.pagerank.tolerance = get_or(pr, "tolerance", out.pagerank.tolerance, where + ".pagerank");
        out.pagerank.max_iterations = get_or(pr, "max_iterations", out.pagerank.max_iterations, where + ".pagerank");
    }
    if (doc.contains("hits")) {
        const json &h = doc["hits"];
        reject_unknown(h, where + ".hits", {"tolerance", "max_iterations"});
        out.hits.tolerance = get_or(h, "tolerance", out.hits.tolerance, where + ".hits");
        out.hits.max_iterations = get_or(h, "max_iterations", out.hits.max_iterations, where + ".hits");
    }
    return out;
}

SyntheticStudy parse_synthetic(const json &doc) {
    const std::string where = "dataset";
    reject_unknown(doc, where, {"kind", "candidates", "faithful", "adversarial", "swap_prob", "positive_fraction"});
    SyntheticStudy s;
    s.candidates = get_or(doc, "candidates", s.candidates, where);
    s.faithful = get_or(doc, "faithful", s.faithful, where);
    s.adversarial = get_or(doc, "adversarial", s.adversarial, where);
    s.swap_prob = get_or(doc, "swap_prob", s.swap_prob, where);
    s.positive_fraction = get_or(doc, "positive_fraction", s.positive_fraction, where);
    return s;
}

MethodConfig parse_method(const json &doc, std::size_t i) {
    const std::string where = "methods[" + std::to_string(i) + "]";
    reject_unknown(doc, where, {"name", "method", "supervised", "top_k", "sort", "initial", "weight_metric"});
    MethodConfig m;
    const auto method = require<std::string>(doc, "method", where);
    if (method == "logistic_regression") {
        m.logistic_regression = true;
        m.supervised = true;
    } else {
        try {
            m.method = parse_aggregation_method(method);
        } catch (const InvalidArgument &e) {
            throw InvalidArgument(where + ": " + e.what());
        }
        m.supervised = *m.method == AggregationMethod::skr || *m.method == AggregationMethod::supervised_borda;
        m.supervised = get_or(doc, "supervised", m.supervised, where);
        if (*m.method == AggregationMethod::borda || *m.method == AggregationMethod::kemeny_quicksort) {
            if (m.supervised) {
                throw InvalidArgument(where + ": method '" + method + "' is unsupervised by definition");
            }
        }
        if (doc.contains("top_k")) m.top_k = parse_top_k(doc["top_k"], where);
        if (doc.contains("sort")) {
            if (*m.method != AggregationMethod::skr) {
                throw InvalidArgument(where + ": 'sort' only applies to method 'skr'");
            }
            m.sort = parse_sort_kind(get_or<std::string>(doc, "sort", "quick", where));
        }
        const auto initial = get_or<std::string>(doc, "initial", "supervised_borda", where);
        if (initial == "supervised_borda") {
            m.initial = InitialOrdering::supervised_borda;
        } else if (initial == "borda") {
            m.initial = InitialOrdering::borda;
        } else {
            throw InvalidArgument(where + ".initial: expected 'supervised_borda' or 'borda'");
        }
    }
    if (doc.contains("weight_metric")) {
        m.weight_metric = parse_weight_metric(get_or<std::string>(doc, "weight_metric", "auc", where));
    }
    m.name = get_or<std::string>(doc, "name", method, where);
    return m;
}

} // namespace

ExperimentConfig parse_config(const json &doc, const std::string &base_dir) {
    reject_unknown(doc, "config",
                   {"schema_version", "seed", "dataset", "split", "evaluation", "methods", "logistic_regression",
                    "output"});
    const int version = get_or(doc, "schema_version", kConfigSchemaVersion, "config");
    if (version != kConfigSchemaVersion) {
        throw InvalidArgument("config: unsupported schema_version " + std::to_string(version));
    }
    ExperimentConfig cfg;
    cfg.source = doc;

    const json dataset = require<json>(doc, "dataset", "config");
    const auto kind = require<std::string>(dataset, "kind", "dataset");
    if (kind == "graph") {
        cfg.dataset = parse_graph_dataset(dataset, base_dir);
    } else if (kind == "synthetic") {
        cfg.dataset = parse_synthetic(dataset);
    } else {
        throw InvalidArgument("dataset.kind: expected 'graph' or 'synthetic'");
    }

    const json split = get_or<json>(doc, "split", json::object(), "config");
    reject_unknown(split, "split", {"train_fraction", "train_count", "trials", "stratified"});
    if (split.contains("train_count")) {
        cfg.split.train_count = get_or<std::size_t>(split, "train_count", 0, "split");
    }
    if (split.contains("train_fraction") || !cfg.split.train_count) {
        cfg.split.train_fraction = get_or(split, "train_fraction", 0.2, "split");
    }
    cfg.split.trials = get_or(split, "trials", 10, "split");
    cfg.split.stratified = get_or(split, "stratified", true, "split");
    set_master_seed(cfg, get_or<std::uint64_t>(doc, "seed", 0, "config"));

    const json eval = get_or<json>(doc, "evaluation", json::object(), "config");
    reject_unknown(eval, "evaluation", {"ap_k", "ap_denominator", "weight_metric", "weight_scheme", "roc"});
    cfg.ap_k = get_or<std::size_t>(eval, "ap_k", 100, "evaluation");
    const auto denom = get_or<std::string>(eval, "ap_denominator", "min_k_positives", "evaluation");
    if (denom == "min_k_positives") {
        cfg.ap_denominator = ApDenominator::min_k_positives;
    } else if (denom == "k") {
        cfg.ap_denominator = ApDenominator::k;
    } else {
        throw InvalidArgument("evaluation.ap_denominator: expected 'min_k_positives' or 'k'");
    }
    cfg.weights.metric = parse_weight_metric(get_or<std::string>(eval, "weight_metric", "auc", "evaluation"));
    cfg.weights.scheme = parse_weight_scheme(get_or<std::string>(eval, "weight_scheme", "plain", "evaluation"));
    cfg.weights.ap_k = cfg.ap_k;
    cfg.weights.ap_denominator = cfg.ap_denominator;
    cfg.include_roc = get_or(eval, "roc", true, "evaluation");

    const json methods = require<json>(doc, "methods", "config");
    if (!methods.is_array() || methods.empty()) {
        throw InvalidArgument("config.methods: expected a non-empty array");
    }
    for (std::size_t i = 0; i < methods.size(); ++i) {
        cfg.methods.push_back(parse_method(methods[i], i));
    }

    if (doc.contains("logistic_regression")) {
        const json &lr = doc["logistic_regression"];
        reject_unknown(lr, "logistic_regression", {"l2_penalty", "max_iterations", "gradient_tolerance"});
        cfg.logistic.l2_penalty = get_or(lr, "l2_penalty", cfg.logistic.l2_penalty, "logistic_regression");
        cfg.logistic.max_iterations = get_or(lr, "max_iterations", cfg.logistic.max_iterations, "logistic_regression");
        cfg.logistic.gradient_tolerance =
            get_or(lr, "gradient_tolerance", cfg.logistic.gradient_tolerance, "logistic_regression");
    }

    if (doc.contains("output")) {
        const json &out = doc["output"];
        reject_unknown(out, "output", {"json", "csv"});
        if (out.contains("json")) cfg.json_output = resolve_path(get_or<std::string>(out, "json", "", "output"), base_dir);
        if (out.contains("csv")) cfg.csv_output = resolve_path(get_or<std::string>(out, "csv", "", "output"), base_dir);
    }
    return cfg;
}

ExperimentConfig load_config_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open config file '" + path + "'");
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error &e) {
        throw ParseError(path, 0, e.what());
    }
    const auto base = fs::path(path).parent_path().string();
    return parse_config(doc, base.empty() ? "." : base);
}

void set_master_seed(ExperimentConfig &config, std::uint64_t seed) {
    config.seed = seed;
    config.split.seed = derive_seed(seed, kSplitStream);
    config.source["seed"] = seed;
}

void validate_config(const ExperimentConfig &config) {
    if (const auto *graph = std::get_if<GraphDataset>(&config.dataset)) {
        std::set<std::string> names;
        for (const auto &g : graph->graphs) {
            if (!names.insert(g.name).second) {
                throw InvalidArgument("dataset.graphs: duplicate graph name '" + g.name + "'");
            }
            if (!fs::exists(g.path)) {
                throw InvalidArgument("dataset.graphs: file '" + g.path + "' does not exist");
            }
        }
        std::set<std::string> ranker_names;
        for (const auto &r : graph->rankers) {
            if (!names.contains(r.graph)) {
                throw InvalidArgument("dataset.rankers: '" + r.name + "' refers to unknown graph '" + r.graph + "'");
            }
            if (!ranker_names.insert(r.name).second) {
                throw InvalidArgument("dataset.rankers: duplicate ranker name '" + r.name + "'");
            }
        }
        if (!fs::exists(graph->truth_path)) {
            throw InvalidArgument("dataset.truth: file '" + graph->truth_path + "' does not exist");
        }
        if (!std::isfinite(graph->threshold)) {
            throw InvalidArgument("dataset.truth.threshold must be finite");
        }
    }
    if (config.split.trials < 1) {
        throw InvalidArgument("split.trials must be >= 1");
    }
    if (config.split.train_fraction && !(*config.split.train_fraction > 0.0 && *config.split.train_fraction < 1.0)) {
        throw InvalidArgument("split.train_fraction must lie in (0, 1)");
    }
    if (config.ap_k == 0) {
        throw InvalidArgument("evaluation.ap_k must be positive");
    }
    std::set<std::string> method_names;
    for (const auto &m : config.methods) {
        if (!method_names.insert(m.name).second) {
            throw InvalidArgument("methods: duplicate method name '" + m.name + "'");
        }
    }
}

} // namespace skrank
