#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lpaleb/graph.hpp"
#include "lpaleb/metrics.hpp"
#include "lpaleb/partition.hpp"
#include "lpaleb/propagation.hpp"

namespace lpaleb {

class ConfigError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Failure inside one run of an experiment.
class RunError : public std::runtime_error {
  public:
    RunError(std::size_t run, const std::string& message);
    std::size_t run() const noexcept { return run_; }

  private:
    std::size_t run_;
};

/// One engine with its iteration cap, e.g. "lpa-leb" or "lpa-leb:4".
struct EngineSpec {
    std::string name;
    Algorithm algorithm = Algorithm::lpa_leb;
    std::optional<std::size_t> max_iterations;  // overrides the experiment's cap

    /// Parses "<algo>[:<max-iter>]".
    static EngineSpec parse(std::string_view text);
};

struct RunRecord {
    std::size_t run = 0;
    std::uint64_t seed = 0;
    double modularity = 0.0;
    std::size_t communities = 0;
    std::optional<double> nmi;
};

/// Aggregate over repeated runs. Variance is the population variance.
struct RunSummary {
    std::size_t runs = 0;
    double average_modularity = 0.0;
    double best_modularity = 0.0;
    double worst_modularity = 0.0;
    double variance_modularity = 0.0;
    double average_community_count = 0.0;
    std::optional<double> average_nmi;
    double wall_time_seconds = 0.0;
};

/// Aggregates in an order-independent way: values are sorted before summing,
/// so any permutation of `records` yields bit-identical statistics.
RunSummary summarize(std::span<const RunRecord> records, double wall_time_seconds = 0.0);

struct ExperimentResult {
    RunSummary summary;
    std::vector<RunRecord> runs;  // indexed by run
};

/// Runs `algo` `runs` times with seeds cfg.seed + i and scores every result.
/// Local edge betweenness is computed once at cfg.depth when needed. Runs
/// are spread over `threads` workers (0 = hardware concurrency); results do
/// not depend on the worker count.
ExperimentResult run_experiment(const Graph& g, Algorithm algo, const AlgorithmConfig& cfg, std::size_t runs,
                                const GroundTruth* ground_truth = nullptr, unsigned threads = 0);

/// Dispatches one engine run. `scores` is required for lpa-leb.
Partition detect_communities(const Graph& g, Algorithm algo, const EdgeScoreMap* scores, const AlgorithmConfig& cfg,
                             PropagationTrace* trace = nullptr);

struct PlantedPartitionParams {
    std::size_t n = 0;
    std::size_t communities = 1;
    double p_in = 0.0;
    double p_out = 0.0;
    std::uint64_t seed = 0;

    /// Expected degree p_in (s - 1) + p_out (n - s) with s = n / communities.
    double expected_degree() const;
    /// Expected fraction of a node's edges that leave its block.
    double expected_mixing() const;
};

struct PlantedGraph {
    Graph graph;
    GroundTruth truth;
};

/// Equal contiguous blocks; each intra-block pair is an edge with probability
/// p_in, each inter-block pair with p_out. Edges are drawn by geometric
/// skipping, so the cost is O(n + m). Throws ConfigError on invalid params.
PlantedGraph generate_planted_partition(const PlantedPartitionParams& params);

/// Keeps base's n, communities, seed and expected degree, and solves p_in and
/// p_out so that the expected inter-block edge fraction equals `mixing`.
/// Throws ConfigError if a probability would leave [0, 1].
PlantedPartitionParams planted_params_for_mixing(const PlantedPartitionParams& base, double mixing);

struct SweepPoint {
    double mixing = 0.0;
    std::string engine;
    double average_nmi = 0.0;
};

/// For every mixing level, generates one planted graph and runs every engine
/// `runs` times against its ground truth.
std::vector<SweepPoint> sweep_mixing(const PlantedPartitionParams& base, std::span<const double> mixing_levels,
                                     std::span<const EngineSpec> engines, const AlgorithmConfig& cfg,
                                     std::size_t runs, unsigned threads = 0);

// Report files.
void write_runs_csv(std::ostream& out, std::span<const EngineSpec> engines,
                    std::span<const ExperimentResult> results);
void write_summary_json(std::ostream& out, std::span<const EngineSpec> engines,
                        std::span<const ExperimentResult> results, const AlgorithmConfig& cfg);
void write_sweep_csv(std::ostream& out, std::span<const SweepPoint> points);

}  // namespace lpaleb
