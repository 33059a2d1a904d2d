// Command-line front end: betweenness scores, community detection, scoring,
// repeated-run benchmarks and planted-partition generation.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lpaleb/bench.hpp"
#include "lpaleb/betweenness.hpp"
#include "lpaleb/graph.hpp"
#include "lpaleb/metrics.hpp"
#include "lpaleb/partition.hpp"
#include "lpaleb/propagation.hpp"

namespace fs = std::filesystem;
using namespace lpaleb;

namespace {

// "-" writes to stdout.
template <typename Writer>
void with_output(const std::string& path, Writer&& write) {
    if (path == "-") {
        write(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    write(out);
    if (!out) throw std::runtime_error("error writing '" + path + "'");
}

std::vector<EngineSpec> parse_engines(const std::vector<std::string>& names) {
    std::vector<EngineSpec> engines;
    for (const auto& name : names) engines.push_back(EngineSpec::parse(name));
    return engines;
}

struct DepthOption {
    std::string text = "2";
    Depth value() const { return Depth::parse(text); }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Label propagation community detection with local edge betweenness"};
    app.require_subcommand(1);
    app.option_defaults()->always_capture_default();

    // leb
    auto* leb = app.add_subcommand("leb", "Write per-edge local edge betweenness as CSV");
    std::string leb_input, leb_output = "-";
    DepthOption leb_depth;
    leb->add_option("--input", leb_input, "Edge list file")->required();
    leb->add_option("--depth", leb_depth.text, "Depth bound: positive integer or 'full'");
    leb->add_option("--output", leb_output, "Output CSV ('-' for stdout)");

    // detect
    auto* detect = app.add_subcommand("detect", "Run one community detection pass");
    std::string det_input, det_output = "-", det_algo = "lpa-leb";
    DepthOption det_depth;
    AlgorithmConfig det_cfg;
    detect->add_option("--input", det_input, "Edge list file")->required();
    detect->add_option("--algo", det_algo, "lpa | lpa-leb | lpac");
    detect->add_option("--depth", det_depth.text, "Betweenness depth for lpa-leb");
    detect->add_option("--max-iter", det_cfg.max_iterations, "Iteration cap")->check(CLI::PositiveNumber);
    detect->add_option("--seed", det_cfg.seed, "RNG seed");
    detect->add_option("--output", det_output, "Output CSV ('-' for stdout)");

    // score
    auto* score = app.add_subcommand("score", "Modularity (and NMI) of a community file");
    std::string sc_input, sc_communities, sc_truth;
    score->add_option("--input", sc_input, "Edge list file")->required();
    score->add_option("--communities", sc_communities, "node,community CSV")->required();
    score->add_option("--ground-truth", sc_truth, "node,community CSV of reference communities");

    // bench
    auto* bench = app.add_subcommand("bench", "Repeated seeded runs with summary statistics");
    std::string b_input, b_truth, b_report;
    std::vector<std::string> b_algos{"lpa-leb"};
    std::size_t b_runs = 1000;
    unsigned b_threads = 0;
    DepthOption b_depth;
    AlgorithmConfig b_cfg;
    std::vector<double> b_mixing;
    PlantedPartitionParams b_planted;
    b_planted.n = 1000;
    b_planted.communities = 25;
    double b_degree = 20.0;
    bench->add_option("--input", b_input, "Edge list file");
    bench->add_option("--algo", b_algos, "Engines, comma separated; '<algo>:<k>' caps iterations at k")
        ->delimiter(',');
    bench->add_option("--runs", b_runs, "Runs per engine")->check(CLI::PositiveNumber);
    bench->add_option("--max-iter", b_cfg.max_iterations, "Iteration cap")->check(CLI::PositiveNumber);
    bench->add_option("--seed", b_cfg.seed, "Base seed; run i uses seed + i");
    bench->add_option("--depth", b_depth.text, "Betweenness depth for lpa-leb");
    bench->add_option("--ground-truth", b_truth, "node,community CSV for NMI");
    bench->add_option("--report", b_report, "Report directory")->required();
    bench->add_option("--threads", b_threads, "Worker threads (0 = all cores)");
    auto* mixing_opt = bench->add_option("--mixing", b_mixing, "Mixing sweep on planted partitions, comma separated")
                           ->delimiter(',');
    bench->add_option("--n", b_planted.n, "Sweep: node count");
    bench->add_option("--communities", b_planted.communities, "Sweep: block count");
    bench->add_option("--degree", b_degree, "Sweep: expected degree");
    bench->add_option("--graph-seed", b_planted.seed, "Sweep: generator seed");
    mixing_opt->excludes(bench->get_option("--input"));

    // gen-planted
    auto* gen = app.add_subcommand("gen-planted", "Generate a planted-partition graph with ground truth");
    PlantedPartitionParams g_params;
    std::string g_prefix;
    gen->add_option("--n", g_params.n, "Node count")->required();
    gen->add_option("--communities", g_params.communities, "Number of equal blocks")->required();
    gen->add_option("--p-in", g_params.p_in, "Intra-block edge probability")->required();
    gen->add_option("--p-out", g_params.p_out, "Inter-block edge probability")->required();
    gen->add_option("--seed", g_params.seed, "RNG seed");
    gen->add_option("--output-prefix", g_prefix, "Writes <prefix>.edges and <prefix>.truth")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*leb) {
            const auto g = load_edge_list_file(leb_input);
            const auto scores = local_edge_betweenness(g, leb_depth.value());
            with_output(leb_output, [&](std::ostream& out) { write_edge_scores_csv(out, g, scores); });
        } else if (*detect) {
            const auto g = load_edge_list_file(det_input);
            const auto algo = parse_algorithm(det_algo);
            det_cfg.depth = det_depth.value();
            std::optional<EdgeScoreMap> scores;
            if (algo == Algorithm::lpa_leb) scores = local_edge_betweenness(g, det_cfg.depth);
            const auto p = detect_communities(g, algo, scores ? &*scores : nullptr, det_cfg);
            with_output(det_output, [&](std::ostream& out) { write_partition_csv(out, p); });
        } else if (*score) {
            const auto g = load_edge_list_file(sc_input);
            const auto p = read_partition_csv_file(sc_communities, g.node_count());
            std::printf("modularity=%.6f\n", modularity(g, p));
            if (!sc_truth.empty()) {
                const auto truth = read_partition_csv_file(sc_truth, g.node_count());
                std::printf("nmi=%.6f\n", nmi(p, truth));
            }
        } else if (*bench) {
            b_cfg.depth = b_depth.value();
            const auto engines = parse_engines(b_algos);
            fs::create_directories(b_report);
            const fs::path report(b_report);
            if (!b_mixing.empty()) {
                b_planted.p_in = 1.0;
                b_planted.p_out = 0.0;
                // Any (p_in, p_out) with the requested degree works as a base.
                const double block = static_cast<double>(b_planted.n / std::max<std::size_t>(1, b_planted.communities));
                if (block > 1.0) b_planted.p_in = std::min(1.0, b_degree / (block - 1.0));
                if (b_planted.expected_degree() + 1e-12 < b_degree)
                    throw ConfigError("degree too large for the given block size");
                const auto points = sweep_mixing(b_planted, b_mixing, engines, b_cfg, b_runs, b_threads);
                with_output((report / "sweep.csv").string(), [&](std::ostream& out) { write_sweep_csv(out, points); });
            } else {
                if (b_input.empty()) throw ConfigError("bench needs --input or --mixing");
                const auto g = load_edge_list_file(b_input);
                std::optional<GroundTruth> truth;
                if (!b_truth.empty()) truth = read_partition_csv_file(b_truth, g.node_count());
                std::vector<ExperimentResult> results;
                for (const auto& engine : engines) {
                    AlgorithmConfig cfg = b_cfg;
                    if (engine.max_iterations) cfg.max_iterations = *engine.max_iterations;
                    results.push_back(run_experiment(g, engine.algorithm, cfg, b_runs, truth ? &*truth : nullptr,
                                                     b_threads));
                    const auto& s = results.back().summary;
                    std::printf("%s: avg=%.4f best=%.4f worst=%.4f var=%.4f communities=%.2f", engine.name.c_str(),
                                s.average_modularity, s.best_modularity, s.worst_modularity, s.variance_modularity,
                                s.average_community_count);
                    if (s.average_nmi) std::printf(" nmi=%.4f", *s.average_nmi);
                    std::printf(" time=%.3fs\n", s.wall_time_seconds);
                }
                with_output((report / "summary.json").string(),
                            [&](std::ostream& out) { write_summary_json(out, engines, results, b_cfg); });
                with_output((report / "runs.csv").string(),
                            [&](std::ostream& out) { write_runs_csv(out, engines, results); });
            }
        } else if (*gen) {
            const auto planted = generate_planted_partition(g_params);
            with_output(g_prefix + ".edges", [&](std::ostream& out) { write_edge_list(out, planted.graph); });
            with_output(g_prefix + ".truth", [&](std::ostream& out) { write_partition_csv(out, planted.truth); });
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
