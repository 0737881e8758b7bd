// Command-line front end: centrality, aggregate, evaluate, experiment, synth.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <skrank/aggregate/aggregate.hpp>
#include <skrank/centrality/centrality.hpp>
#include <skrank/centrality/graph.hpp>
#include <skrank/core/error.hpp>
#include <skrank/core/ground_truth.hpp>
#include <skrank/core/random.hpp>
#include <skrank/core/ranking.hpp>
#include <skrank/eval/metrics.hpp>
#include <skrank/harness/config.hpp>
#include <skrank/harness/experiment.hpp>
#include <skrank/harness/report.hpp>
#include <skrank/harness/synthetic.hpp>

namespace {

using namespace skrank;

// Writes to `path`, or stdout when it is empty or "-".
template <class F>
void with_output(const std::string &path, F &&write) {
    if (path.empty() || path == "-") {
        write(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot write '" + path + "'");
    }
    write(out);
}

struct CentralityArgs {
    std::string graph;
    std::vector<std::string> metrics{"pagerank"};
    std::string parallel = "collapse";
    std::string scores_out;
    std::string ranking_out;
    std::uint64_t seed = 0;
    double damping = 0.85;
};

void run_centrality(const CentralityArgs &args) {
    const ParallelEdges mode = args.parallel == "sum" ? ParallelEdges::sum : ParallelEdges::collapse;
    IngestStats stats;
    const Graph graph = read_edge_list_file(args.graph, mode, &stats);
    std::cerr << "read " << stats.edges_read << " edges (" << stats.self_loops_dropped << " self loops dropped, "
              << stats.parallel_merged << " parallel merged), " << graph.node_count() << " nodes\n";

    std::vector<ScoreVector> vectors;
    std::optional<HitsScores> hub_auth;
    for (const auto &metric : args.metrics) {
        if (metric == "indegree") vectors.push_back(degree(graph, Direction::in, false));
        else if (metric == "outdegree") vectors.push_back(degree(graph, Direction::out, false));
        else if (metric == "weighted_indegree") vectors.push_back(degree(graph, Direction::in, true));
        else if (metric == "weighted_outdegree") vectors.push_back(degree(graph, Direction::out, true));
        else if (metric == "pagerank") vectors.push_back(pagerank(graph, PageRankOptions{.damping = args.damping}));
        else if (metric == "hub" || metric == "authority") {
            if (!hub_auth) hub_auth = hits(graph);
            vectors.push_back(metric == "hub" ? hub_auth->hub : hub_auth->authority);
        } else {
            throw InvalidArgument("unknown metric '" + metric + "'");
        }
    }

    with_output(args.scores_out, [&](std::ostream &out) {
        out << "id";
        for (const auto &v : vectors) out << '\t' << v.metric();
        out << '\n' << std::setprecision(17);
        for (const auto &id : graph.names()) {
            out << id;
            for (const auto &v : vectors) out << '\t' << v.at(id);
            out << '\n';
        }
    });
    if (!args.ranking_out.empty()) {
        with_output(args.ranking_out, [&](std::ostream &out) {
            for (std::size_t i = 0; i < vectors.size(); ++i) {
                write_ranking(out, ranking_from_scores(vectors[i], derive_seed(args.seed, i)));
            }
        });
    }
}

struct AggregateArgs {
    std::string rankings;
    std::string method = "skr";
    std::string weights;
    std::string top_k;
    std::string sort = "quick";
    std::string initial;
    std::string out;
    std::uint64_t seed = 0;
};

TopK parse_top_k_arg(const std::string &text) {
    if (text.empty()) return TopK::fraction(kDefaultTopKFraction);
    if (text == "all") return TopK::all();
    std::size_t used = 0;
    if (text.find('.') != std::string::npos) {
        const double f = std::stod(text, &used);
        if (used == text.size()) return TopK::fraction(f);
    } else {
        const long long k = std::stoll(text, &used);
        if (used == text.size() && k > 0) return TopK::count(static_cast<std::size_t>(k));
    }
    throw InvalidArgument("--top-k expects a positive count, a fraction like 0.15, or 'all'");
}

void run_aggregate(const AggregateArgs &args) {
    const std::vector<Ranking> rankings = read_rankings_file(args.rankings);
    AggregationSpec spec;
    spec.method = parse_aggregation_method(args.method);
    spec.sort_kind = parse_sort_kind(args.sort);
    spec.seed = args.seed;
    spec.top_k = parse_top_k_arg(args.top_k);
    if (!args.weights.empty()) {
        spec.weights = read_weights_file(args.weights);
        if (spec.weights.size() != rankings.size()) {
            throw InvalidArgument("weights file has " + std::to_string(spec.weights.size()) + " values for " +
                                  std::to_string(rankings.size()) + " rankings");
        }
    }
    if (!args.initial.empty()) {
        auto initial = read_rankings_file(args.initial);
        if (initial.size() != 1) {
            throw InvalidArgument("initial ordering file must hold exactly one ranking");
        }
        spec.initial = std::move(initial.front());
    }
    const Ranking result = aggregate(rankings, spec);
    with_output(args.out, [&](std::ostream &out) { write_ranking(out, result); });
}

struct EvaluateArgs {
    std::string ranking;
    std::string truth;
    double threshold = 1.0;
    std::size_t k = 0;
    std::string denominator = "min_k_positives";
};

void run_evaluate(const EvaluateArgs &args) {
    const auto rankings = read_rankings_file(args.ranking);
    if (rankings.size() != 1) {
        throw InvalidArgument("ranking file must hold exactly one ranking");
    }
    const auto values = read_truth_values_file(args.truth);
    const GroundTruth truth = GroundTruth::from_values(values, args.threshold);
    const Ranking &ranking = rankings.front();
    const std::size_t k = args.k == 0 ? ranking.size() : std::min(args.k, ranking.size());
    const ApDenominator denom = args.denominator == "k" ? ApDenominator::k : ApDenominator::min_k_positives;
    std::cout << std::setprecision(12);
    std::cout << "auc=" << auc(ranking, truth) << '\n';
    std::cout << "ap_at_" << k << '=' << average_precision_at_k(ranking, truth, k, denom) << '\n';
}

struct ExperimentArgs {
    std::string config;
    std::optional<std::uint64_t> seed;
    std::string json_out;
    std::string csv_out;
    bool no_timing = false;
};

void run_experiment_cmd(const ExperimentArgs &args) {
    ExperimentConfig config = load_config_file(args.config);
    if (args.seed) {
        set_master_seed(config, *args.seed);
    }
    if (!args.json_out.empty()) config.json_output = args.json_out;
    if (!args.csv_out.empty()) config.csv_output = args.csv_out;

    const ExperimentReport report = run_experiment(config);
    for (const auto &w : report.warnings) {
        std::cerr << "warning: " << w << '\n';
    }
    if (config.json_output) {
        write_report_json_file(*config.json_output, report, !args.no_timing);
    }
    if (config.csv_output) {
        write_report_csv_file(*config.csv_output, report);
    }
    if (!config.json_output && !config.csv_output) {
        write_report_csv(std::cout, report);
    }
}

struct SynthArgs {
    std::string truth;
    std::size_t candidates = 10;
    std::size_t rankers = 3;
    double swap_prob = 0.1;
    std::uint64_t seed = 0;
    std::string out;
};

void run_synth(const SynthArgs &args) {
    Ranking truth_order;
    if (!args.truth.empty()) {
        auto r = read_rankings_file(args.truth);
        if (r.size() != 1) {
            throw InvalidArgument("truth ordering file must hold exactly one ranking");
        }
        truth_order = std::move(r.front());
    } else {
        std::vector<CandidateId> ids;
        for (std::size_t i = 1; i <= args.candidates; ++i) ids.emplace_back("c" + std::to_string(i));
        truth_order = Ranking(std::move(ids));
    }
    const auto rankings = generate_synthetic(truth_order, args.rankers, args.swap_prob, args.seed);
    with_output(args.out, [&](std::ostream &out) { write_rankings(out, rankings); });
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Centrality rankings and supervised rank aggregation"};
    app.require_subcommand(1);
    app.set_version_flag("--version", SKRANK_VERSION);

    CentralityArgs centrality_args;
    auto *centrality = app.add_subcommand("centrality", "Score the nodes of an edge-list graph");
    centrality->add_option("--graph", centrality_args.graph, "Edge list: src dst [weight] per line")
        ->required()
        ->check(CLI::ExistingFile);
    centrality->add_option("--metric", centrality_args.metrics,
                           "indegree, outdegree, weighted_indegree, weighted_outdegree, pagerank, hub, authority")
        ->check(CLI::IsMember({"indegree", "outdegree", "weighted_indegree", "weighted_outdegree", "pagerank", "hub",
                               "authority"}));
    centrality->add_option("--parallel-edges", centrality_args.parallel, "collapse or sum")
        ->check(CLI::IsMember({"collapse", "sum"}));
    centrality->add_option("--damping", centrality_args.damping, "PageRank damping factor");
    centrality->add_option("--scores-out", centrality_args.scores_out, "Score table (default stdout)");
    centrality->add_option("--ranking-out", centrality_args.ranking_out, "One ranking line per metric");
    centrality->add_option("--seed", centrality_args.seed, "Seed for tie-breaking")->required();

    AggregateArgs aggregate_args;
    auto *agg = app.add_subcommand("aggregate", "Combine rankings into one");
    agg->add_option("--rankings", aggregate_args.rankings, "One ranking per line, best first")
        ->required()
        ->check(CLI::ExistingFile);
    agg->add_option("--method", aggregate_args.method,
                    "borda, supervised_borda, local_kemenization, kemeny_quicksort, skr");
    agg->add_option("--weights", aggregate_args.weights, "One non-negative weight per ranking")
        ->check(CLI::ExistingFile);
    agg->add_option("--top-k", aggregate_args.top_k, "Prefix length: count, fraction, or 'all' (default 0.15)");
    agg->add_option("--sort", aggregate_args.sort, "quick or bubble (skr only)")
        ->check(CLI::IsMember({"quick", "bubble"}));
    agg->add_option("--initial", aggregate_args.initial, "Starting ordering (default: supervised Borda)")
        ->check(CLI::ExistingFile);
    agg->add_option("--out", aggregate_args.out, "Output file (default stdout)");
    agg->add_option("--seed", aggregate_args.seed, "Seed for pivots and tie-breaking")->required();

    EvaluateArgs evaluate_args;
    auto *evaluate = app.add_subcommand("evaluate", "Score a ranking against ground truth");
    evaluate->add_option("--ranking", evaluate_args.ranking, "File with one ranking")
        ->required()
        ->check(CLI::ExistingFile);
    evaluate->add_option("--truth", evaluate_args.truth, "id<TAB>value lines")->required()->check(CLI::ExistingFile);
    evaluate->add_option("--threshold", evaluate_args.threshold, "Positive iff value >= threshold (default 1)");
    evaluate->add_option("--k", evaluate_args.k, "Cutoff for AP@k (default: whole ranking)");
    evaluate->add_option("--ap-denominator", evaluate_args.denominator, "min_k_positives or k")
        ->check(CLI::IsMember({"min_k_positives", "k"}));

    ExperimentArgs experiment_args;
    auto *experiment = app.add_subcommand("experiment", "Run a configured train/test experiment");
    experiment->add_option("--config", experiment_args.config, "JSON config file")
        ->required()
        ->check(CLI::ExistingFile);
    experiment->add_option("--seed", experiment_args.seed, "Overrides the config's master seed");
    experiment->add_option("--json", experiment_args.json_out, "JSON report path");
    experiment->add_option("--csv", experiment_args.csv_out, "CSV summary path");
    experiment->add_flag("--no-timing", experiment_args.no_timing, "Omit wall-clock times from the JSON report");

    SynthArgs synth_args;
    auto *synth = app.add_subcommand("synth", "Generate noisy copies of a ranking");
    synth->add_option("--truth", synth_args.truth, "Ordering to perturb (default c1..cN)")
        ->check(CLI::ExistingFile);
    synth->add_option("--candidates", synth_args.candidates, "N when no --truth is given");
    synth->add_option("--rankers", synth_args.rankers, "Number of rankings to emit");
    synth->add_option("--swap-prob", synth_args.swap_prob, "Adjacent swap probability, below 0.5");
    synth->add_option("--out", synth_args.out, "Output file (default stdout)");
    synth->add_option("--seed", synth_args.seed, "Generator seed")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*centrality) run_centrality(centrality_args);
        else if (*agg) run_aggregate(aggregate_args);
        else if (*evaluate) run_evaluate(evaluate_args);
        else if (*experiment) run_experiment_cmd(experiment_args);
        else if (*synth) run_synth(synth_args);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
