#include "lpaleb/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <numeric>
#include <ostream>
#include <thread>

#include <json.hpp>

#include "lpaleb/betweenness.hpp"
#include "lpaleb/random.hpp"

namespace lpaleb {

RunError::RunError(std::size_t run, const std::string& message)
    : std::runtime_error("run " + std::to_string(run) + ": " + message), run_(run) {}

EngineSpec EngineSpec::parse(std::string_view text) {
    EngineSpec spec;
    spec.name = std::string(text);
    const auto colon = text.find(':');
    spec.algorithm = parse_algorithm(text.substr(0, colon));
    if (colon != std::string_view::npos) {
        const auto digits = text.substr(colon + 1);
        std::size_t cap = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), cap);
        if (ec != std::errc{} || ptr != digits.data() + digits.size() || cap == 0)
            throw ConfigError("bad iteration cap in engine '" + spec.name + "'");
        spec.max_iterations = cap;
    }
    return spec;
}

namespace {

double sorted_sum(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    double sum = 0.0;
    for (const double v : values) sum += v;
    return sum;
}

}  // namespace

RunSummary summarize(std::span<const RunRecord> records, double wall_time_seconds) {
    if (records.empty()) throw ConfigError("cannot summarize zero runs");
    RunSummary s;
    s.runs = records.size();
    s.wall_time_seconds = wall_time_seconds;
    const double count = static_cast<double>(records.size());

    std::vector<double> q;
    q.reserve(records.size());
    std::size_t communities = 0;
    for (const auto& r : records) {
        q.push_back(r.modularity);
        communities += r.communities;
    }
    std::sort(q.begin(), q.end());
    s.worst_modularity = q.front();
    s.best_modularity = q.back();
    s.average_modularity = sorted_sum(q) / count;
    std::vector<double> sq;
    sq.reserve(q.size());
    for (const double x : q) sq.push_back((x - s.average_modularity) * (x - s.average_modularity));
    s.variance_modularity = sorted_sum(std::move(sq)) / count;
    s.average_community_count = static_cast<double>(communities) / count;

    if (std::all_of(records.begin(), records.end(), [](const RunRecord& r) { return r.nmi.has_value(); })) {
        std::vector<double> v;
        v.reserve(records.size());
        for (const auto& r : records) v.push_back(*r.nmi);
        s.average_nmi = sorted_sum(std::move(v)) / count;
    }
    return s;
}

Partition detect_communities(const Graph& g, Algorithm algo, const EdgeScoreMap* scores, const AlgorithmConfig& cfg,
                             PropagationTrace* trace) {
    switch (algo) {
        case Algorithm::lpa: return lpa(g, cfg, trace);
        case Algorithm::lpac: return lpac(g, cfg, trace);
        case Algorithm::lpa_leb:
            if (!scores) throw std::invalid_argument("lpa-leb requires edge scores");
            return lpa_leb(g, *scores, cfg, trace);
    }
    throw std::invalid_argument("unknown algorithm");
}

namespace {

// Calls body(i) for i in [0, count) on up to `threads` workers. The first
// failure by index is rethrown after all workers finish.
template <typename Body>
void parallel_for(std::size_t count, unsigned threads, Body&& body) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));

    std::atomic<std::size_t> next{0};
    std::mutex failure_mutex;
    std::size_t failed_index = count;
    std::exception_ptr failure;

    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                body(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (i < failed_index) {
                    failed_index = i;
                    failure = std::current_exception();
                }
            }
        }
    };

    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);
}

}  // namespace

ExperimentResult run_experiment(const Graph& g, Algorithm algo, const AlgorithmConfig& cfg, std::size_t runs,
                                const GroundTruth* ground_truth, unsigned threads) {
    if (runs == 0) throw ConfigError("runs must be >= 1");
    if (ground_truth && ground_truth->node_count() != g.node_count())
        throw ConfigError("ground truth covers " + std::to_string(ground_truth->node_count()) +
                          " nodes, graph has " + std::to_string(g.node_count()));

    const auto start = std::chrono::steady_clock::now();
    std::optional<EdgeScoreMap> scores;
    if (algo == Algorithm::lpa_leb) scores = local_edge_betweenness(g, cfg.depth);

    ExperimentResult result;
    result.runs.resize(runs);
    parallel_for(runs, threads, [&](std::size_t i) {
        try {
            AlgorithmConfig run_cfg = cfg;
            run_cfg.seed = cfg.seed + i;
            const auto p = detect_communities(g, algo, scores ? &*scores : nullptr, run_cfg);
            RunRecord& rec = result.runs[i];
            rec.run = i;
            rec.seed = run_cfg.seed;
            rec.modularity = modularity(g, p);
            rec.communities = p.community_count();
            if (ground_truth) rec.nmi = nmi(p, *ground_truth);
        } catch (const std::exception& e) {
            throw RunError(i, e.what());
        }
    });
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    result.summary = summarize(result.runs, elapsed.count());
    return result;
}

double PlantedPartitionParams::expected_degree() const {
    if (communities == 0 || n == 0) return 0.0;
    const double s = static_cast<double>(n / communities);
    return p_in * (s - 1.0) + p_out * (static_cast<double>(n) - s);
}

double PlantedPartitionParams::expected_mixing() const {
    if (communities == 0 || n == 0) return 0.0;
    const double s = static_cast<double>(n / communities);
    const double k_in = p_in * (s - 1.0);
    const double k_out = p_out * (static_cast<double>(n) - s);
    return k_in + k_out > 0.0 ? k_out / (k_in + k_out) : 0.0;
}

namespace {

void validate(const PlantedPartitionParams& p) {
    if (p.n == 0) throw ConfigError("planted partition needs n >= 1");
    if (p.communities == 0 || p.n % p.communities != 0)
        throw ConfigError("n (" + std::to_string(p.n) + ") must be divisible by communities (" +
                          std::to_string(p.communities) + ")");
    if (!(p.p_in >= 0.0 && p.p_in <= 1.0) || !(p.p_out >= 0.0 && p.p_out <= 1.0))
        throw ConfigError("edge probabilities must lie in [0, 1]");
}

// Emits each j in [lo, hi) independently with probability p, jumping over
// non-edges with geometric gaps.
template <typename Emit>
void sample_range(std::size_t lo, std::size_t hi, double p, Rng& rng, Emit&& emit) {
    if (lo >= hi || p <= 0.0) return;
    if (p >= 1.0) {
        for (std::size_t j = lo; j < hi; ++j) emit(j);
        return;
    }
    const double log_q = std::log1p(-p);
    double pos = static_cast<double>(lo) - 1.0;
    for (;;) {
        const double gap = std::floor(std::log1p(-rng.uniform_real()) / log_q);
        pos += 1.0 + gap;
        if (pos >= static_cast<double>(hi)) return;
        emit(static_cast<std::size_t>(pos));
    }
}

}  // namespace

PlantedGraph generate_planted_partition(const PlantedPartitionParams& params) {
    validate(params);
    const std::size_t n = params.n;
    const std::size_t block = n / params.communities;
    Rng rng(params.seed);

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(params.expected_degree() * static_cast<double>(n) / 2.0 * 1.1) + 16);
    std::vector<std::size_t> truth(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t block_end = (i / block + 1) * block;
        truth[i] = i / block;
        const auto add = [&](std::size_t j) { edges.push_back({static_cast<NodeId>(i), static_cast<NodeId>(j)}); };
        sample_range(i + 1, block_end, params.p_in, rng, add);
        sample_range(block_end, n, params.p_out, rng, add);
    }
    return {Graph::from_edges(n, std::move(edges)), Partition::from_labels(std::span<const std::size_t>(truth))};
}

PlantedPartitionParams planted_params_for_mixing(const PlantedPartitionParams& base, double mixing) {
    validate(base);
    if (!(mixing >= 0.0 && mixing < 1.0)) throw ConfigError("mixing level must lie in [0, 1)");
    const double s = static_cast<double>(base.n / base.communities);
    const double k = base.expected_degree();
    const double outside = static_cast<double>(base.n) - s;

    PlantedPartitionParams p = base;
    const double k_in = k * (1.0 - mixing);
    const double k_out = k * mixing;
    p.p_in = k_in > 0.0 ? (s > 1.0 ? k_in / (s - 1.0) : 2.0) : 0.0;
    p.p_out = k_out > 0.0 ? (outside > 0.0 ? k_out / outside : 2.0) : 0.0;
    if (p.p_in > 1.0 || p.p_out > 1.0) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "mixing %.3f infeasible for n=%zu, communities=%zu, degree %.3f", mixing,
                      base.n, base.communities, k);
        throw ConfigError(buf);
    }
    return p;
}

std::vector<SweepPoint> sweep_mixing(const PlantedPartitionParams& base, std::span<const double> mixing_levels,
                                     std::span<const EngineSpec> engines, const AlgorithmConfig& cfg,
                                     std::size_t runs, unsigned threads) {
    // Validate every level before doing any work.
    std::vector<PlantedPartitionParams> levels;
    for (const double mu : mixing_levels) levels.push_back(planted_params_for_mixing(base, mu));

    std::vector<SweepPoint> points;
    for (std::size_t i = 0; i < levels.size(); ++i) {
        const auto planted = generate_planted_partition(levels[i]);
        for (const auto& engine : engines) {
            AlgorithmConfig engine_cfg = cfg;
            if (engine.max_iterations) engine_cfg.max_iterations = *engine.max_iterations;
            const auto result = run_experiment(planted.graph, engine.algorithm, engine_cfg, runs, &planted.truth, threads);
            points.push_back({mixing_levels[i], engine.name, *result.summary.average_nmi});
        }
    }
    return points;
}

namespace {

std::string format_real(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace

void write_runs_csv(std::ostream& out, std::span<const EngineSpec> engines,
                    std::span<const ExperimentResult> results) {
    const bool with_nmi = !results.empty() && !results.front().runs.empty() && results.front().runs.front().nmi;
    out << "algo,run,seed,modularity,communities" << (with_nmi ? ",nmi" : "") << '\n';
    for (std::size_t k = 0; k < results.size(); ++k) {
        for (const auto& r : results[k].runs) {
            out << engines[k].name << ',' << r.run << ',' << r.seed << ',' << format_real(r.modularity) << ','
                << r.communities;
            if (with_nmi) out << ',' << (r.nmi ? format_real(*r.nmi) : "");
            out << '\n';
        }
    }
}

void write_summary_json(std::ostream& out, std::span<const EngineSpec> engines,
                        std::span<const ExperimentResult> results, const AlgorithmConfig& cfg) {
    nlohmann::ordered_json doc;
    doc["variance"] = "population";
    doc["seed"] = cfg.seed;
    doc["depth"] = cfg.depth.to_string();
    auto& list = doc["algorithms"] = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < results.size(); ++k) {
        const auto& s = results[k].summary;
        nlohmann::ordered_json entry;
        entry["name"] = engines[k].name;
        entry["algorithm"] = std::string(to_string(engines[k].algorithm));
        entry["max_iterations"] = engines[k].max_iterations.value_or(cfg.max_iterations);
        entry["runs"] = s.runs;
        entry["average_modularity"] = s.average_modularity;
        entry["best_modularity"] = s.best_modularity;
        entry["worst_modularity"] = s.worst_modularity;
        entry["variance_modularity"] = s.variance_modularity;
        entry["average_community_count"] = s.average_community_count;
        entry["average_nmi"] = s.average_nmi ? nlohmann::ordered_json(*s.average_nmi) : nlohmann::ordered_json();
        entry["wall_time_seconds"] = s.wall_time_seconds;
        list.push_back(std::move(entry));
    }
    out << doc.dump(2) << '\n';
}

void write_sweep_csv(std::ostream& out, std::span<const SweepPoint> points) {
    out << "mixing,algo,avg_nmi\n";
    char buf[64];
    for (const auto& p : points) {
        std::snprintf(buf, sizeof buf, "%.6g", p.mixing);
        out << buf << ',' << p.engine << ',' << format_real(p.average_nmi) << '\n';
    }
}

}  // namespace lpaleb
