// Acceptance suite: one [PASS]/[FAIL] line per criterion, exit status 1 if
// any criterion fails. Dataset files are looked up in LPALEB_DATA_DIR.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "lpaleb/bench.hpp"
#include "lpaleb/betweenness.hpp"
#include "lpaleb/metrics.hpp"
#include "lpaleb/propagation.hpp"

using namespace lpaleb;
using namespace lpaleb::testing;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) pass = false;
        if (!detail.empty()) detail += "; ";
        detail += (ok ? "" : "NOT ") + what;
    }
};

std::string fmt(const char* f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool have(const std::string& name) { return std::filesystem::exists(data_path(name)); }

struct Timed {
    ExperimentResult result;
    double seconds = 0.0;
};

// Betweenness is part of the measured time, as in an end-to-end CLI run.
Timed experiment(const Graph& g, Algorithm algo, std::size_t runs, std::size_t max_iter = 50,
                 Depth depth = Depth(2), const GroundTruth* truth = nullptr) {
    const auto t0 = std::chrono::steady_clock::now();
    AlgorithmConfig cfg{.max_iterations = max_iter, .seed = 0, .depth = depth};
    auto result = run_experiment(g, algo, cfg, runs, truth);
    return {std::move(result), seconds_since(t0)};
}

std::string describe(const RunSummary& s) {
    return "avg=" + fmt("%.4f", s.average_modularity) + " best=" + fmt("%.4f", s.best_modularity) +
           " worst=" + fmt("%.4f", s.worst_modularity) + " var=" + fmt("%.5f", s.variance_modularity) +
           " comms=" + fmt("%.2f", s.average_community_count);
}

std::size_t single_community_runs(const ExperimentResult& r) {
    return static_cast<std::size_t>(
        std::count_if(r.runs.begin(), r.runs.end(), [](const RunRecord& x) { return x.communities == 1; }));
}

// ---------------------------------------------------------------------------

Outcome oracle_equivalence() {
    Outcome out;
    const std::vector<Depth> depths{Depth(1), Depth(2), Depth(3), Depth::full()};
    std::vector<Graph> graphs{path_graph(3), path_graph(4), star3(), triangle(), cycle_graph(4),
                              cycle_graph(7), two_triangles(), two_triangles_bridge()};
    Rng rng(1);
    const std::size_t fixtures = graphs.size();
    for (int i = 0; i < 300; ++i)
        graphs.push_back(random_connected_graph(rng, 2 + rng.uniform_index(7), 0.1 + 0.6 * rng.uniform_real()));
    double worst = 0.0;
    for (const auto& g : graphs)
        for (const auto d : depths) {
            const auto fast = local_edge_betweenness(g, d);
            const auto slow = brute_force_edge_betweenness(g, d);
            for (EdgeId e = 0; e < g.edge_count(); ++e) worst = std::max(worst, std::abs(fast[e] - slow[e]));
        }
    out.require(worst <= 1e-9, "max |diff|=" + fmt("%.3g", worst) + " <= 1e-9 over " +
                                   std::to_string(fixtures) + " fixtures + 300 random graphs, h=1,2,3,full");
    return out;
}

Outcome fixture_values() {
    Outcome out;
    auto expect = [&](const std::string& name, const EdgeScoreMap& s, std::vector<double> want) {
        out.require(std::ranges::equal(s.values(), want), name);
    };
    expect("P3 h=2 {2,2}", local_edge_betweenness(path_graph(3), Depth(2)), {2, 2});
    expect("P4 h=2 {2,3,2}", local_edge_betweenness(path_graph(4), Depth(2)), {2, 3, 2});
    expect("P4 full {3,4,3}", local_edge_betweenness(path_graph(4), Depth::full()), {3, 4, 3});
    expect("star h=2 {3,3,3}", local_edge_betweenness(star3(), Depth(2)), {3, 3, 3});
    expect("triangle {1,1,1}", local_edge_betweenness(triangle(), Depth(2)), {1, 1, 1});
    expect("C4 full {2,2,2,2}", local_edge_betweenness(cycle_graph(4), Depth::full()), {2, 2, 2, 2});
    return out;
}

Outcome karate() {
    Outcome out;
    const auto g = load_edge_list_file(data_path("karate.edges"));
    out.require(g.node_count() == 34 && g.edge_count() == 78, "34 nodes / 78 edges");
    const auto t = experiment(g, Algorithm::lpa_leb, 1000);
    const auto& s = t.result.summary;
    out.require(s.best_modularity >= 0.41, "best>=0.41");
    out.require(std::abs(s.average_modularity - 0.3906) <= 0.03, "avg in 0.3906+-0.03");
    out.require(s.variance_modularity <= 0.006, "var<=0.006");
    out.require(single_community_runs(t.result) == 0, "no single-community runs");
    out.require(t.seconds < 10.0, "time " + fmt("%.2f", t.seconds) + "s < 10s");
    out.detail = describe(s) + " | " + out.detail;
    return out;
}

Outcome dataset(const std::string& file, double best_min, double avg_target, double avg_tol, double var_max) {
    Outcome out;
    if (!have(file)) {
        out.require(false, "dataset data/" + file + " present");
        return out;
    }
    const auto g = load_edge_list_file(data_path(file));
    const auto t = experiment(g, Algorithm::lpa_leb, 1000);
    const auto& s = t.result.summary;
    out.require(s.best_modularity >= best_min, "best>=" + fmt("%.2f", best_min));
    out.require(std::abs(s.average_modularity - avg_target) <= avg_tol,
                "avg in " + fmt("%.4f", avg_target) + "+-" + fmt("%.2f", avg_tol));
    if (var_max > 0) out.require(s.variance_modularity <= var_max, "var<=" + fmt("%.3f", var_max));
    out.detail = describe(s) + " | " + out.detail;
    return out;
}

Outcome power_grid() {
    Outcome out;
    if (!have("power.edges")) {
        out.require(false, "dataset data/power.edges present");
        return out;
    }
    const auto t0 = std::chrono::steady_clock::now();
    const auto g = load_edge_list_file(data_path("power.edges"));
    out.require(g.node_count() == 4941, "4941 nodes");
    const auto full = experiment(g, Algorithm::lpa_leb, 100, 50);
    const auto short_run = experiment(g, Algorithm::lpa_leb, 100, 4);
    const double seconds = seconds_since(t0);
    const auto& a = full.result.summary;
    const auto& b = short_run.result.summary;
    out.require(a.average_modularity >= 0.75, "avg(50)=" + fmt("%.4f", a.average_modularity) + ">=0.75");
    out.require(b.average_modularity < a.average_modularity,
                "avg(4)=" + fmt("%.4f", b.average_modularity) + " < avg(50)");
    out.require(b.average_community_count > a.average_community_count,
                "comms(4)=" + fmt("%.1f", b.average_community_count) + " > comms(50)=" +
                    fmt("%.1f", a.average_community_count));
    out.require(seconds < 120.0, "time " + fmt("%.1f", seconds) + "s < 120s");
    return out;
}

Outcome stability_ordering() {
    Outcome out;
    for (const std::string file : {"karate.edges", "dolphins.edges"}) {
        if (!have(file)) {
            out.require(false, "dataset data/" + file + " present");
            continue;
        }
        const auto g = load_edge_list_file(data_path(file));
        const double leb = experiment(g, Algorithm::lpa_leb, 1000).result.summary.variance_modularity;
        const double plain = experiment(g, Algorithm::lpa, 1000).result.summary.variance_modularity;
        out.require(leb < plain, file + " var(lpa-leb)=" + fmt("%.5f", leb) + " < var(lpa)=" + fmt("%.5f", plain));
    }
    return out;
}

Outcome depth_study() {
    Outcome out;
    const auto g = load_edge_list_file(data_path("karate.edges"));
    const double h2 = experiment(g, Algorithm::lpa_leb, 1000, 50, Depth(2)).result.summary.average_modularity;
    const double h3 = experiment(g, Algorithm::lpa_leb, 1000, 50, Depth(3)).result.summary.average_modularity;
    const double hf = experiment(g, Algorithm::lpa_leb, 1000, 50, Depth::full()).result.summary.average_modularity;
    out.require(std::abs(h3 - h2) <= 0.02, "|avg(h3)-avg(h2)|=" + fmt("%.4f", std::abs(h3 - h2)) + "<=0.02");
    out.require(std::abs(hf - h2) <= 0.02, "|avg(full)-avg(h2)|=" + fmt("%.4f", std::abs(hf - h2)) + "<=0.02");
    out.detail = "h2=" + fmt("%.4f", h2) + " h3=" + fmt("%.4f", h3) + " full=" + fmt("%.4f", hf) + " | " + out.detail;
    return out;
}

Outcome metric_values() {
    Outcome out;
    auto near = [](double a, double b) { return std::abs(a - b) <= 1e-9; };
    out.require(near(modularity(triangle(), Partition::whole(3)), 0.0), "Q(triangle, whole)=0");
    out.require(near(modularity(triangle(), Partition::from_labels(Labeling{0, 1, 2})), -1.0 / 3.0),
                "Q(triangle, singletons)=-1/3");
    out.require(near(modularity(two_triangles(), Partition::from_labels(Labeling{0, 0, 0, 1, 1, 1})), 0.5),
                "Q(two triangles, components)=0.5");
    const auto karate = load_edge_list_file(data_path("karate.edges"));
    Labeling club(34, 1);
    for (NodeId u : {0, 1, 2, 3, 4, 5, 6, 7, 8, 10, 11, 12, 13, 16, 17, 19, 21}) club[u] = 0;
    out.require(near(modularity(karate, Partition::from_labels(club)), 0.3582347140039448), "Q(karate, clubs)");
    const auto a = Partition::from_labels(Labeling{0, 0, 1, 1});
    const auto b = Partition::from_labels(Labeling{0, 0, 0, 1});
    out.require(near(nmi(a, b), 0.3437110184854508), "NMI=" + fmt("%.10f", nmi(a, b)));
    out.require(near(nmi(a, a), 1.0), "NMI(a,a)=1");
    out.require(near(nmi(Partition::whole(4), a), 0.0), "NMI(whole,a)=0");
    return out;
}

Outcome synthetic_sweep() {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    const PlantedPartitionParams base{.n = 1000, .communities = 25, .p_in = 20.0 / 39.0, .p_out = 0.0, .seed = 1};
    const std::vector<double> levels{0.2, 0.4, 0.6, 0.7, 0.8};
    const std::vector<EngineSpec> engines{EngineSpec::parse("lpa-leb"), EngineSpec::parse("lpa-leb:4")};
    const auto points = sweep_mixing(base, levels, engines, AlgorithmConfig{}, 100);
    const double seconds = seconds_since(t0);

    auto at = [&](double mu, const std::string& engine) {
        for (const auto& p : points)
            if (p.mixing == mu && p.engine == engine) return p.average_nmi;
        return -1.0;
    };
    std::string curve;
    for (double mu : levels)
        curve += fmt("%.1f:", mu) + fmt("%.3f", at(mu, "lpa-leb")) + "/" + fmt("%.3f ", at(mu, "lpa-leb:4"));
    out.require(at(0.2, "lpa-leb") >= 0.95, "NMI(0.2)>=0.95");
    out.require(at(0.2, "lpa-leb") > at(0.8, "lpa-leb"), "NMI(0.2)>NMI(0.8)");
    for (double mu : levels)
        if (mu >= 0.6)
            out.require(at(mu, "lpa-leb:4") >= at(mu, "lpa-leb"), "4-iter>=50-iter at " + fmt("%.1f", mu));
    out.require(seconds < 300.0, "time " + fmt("%.1f", seconds) + "s < 300s");
    out.detail = "nmi(50/4) " + curve + "| " + out.detail;
    return out;
}

Outcome scaling() {
    Outcome out;
    std::vector<double> times;
    for (const std::size_t n : {25000u, 50000u, 100000u}) {
        const PlantedPartitionParams base{.n = n, .communities = n / 50, .p_in = 10.0 / 49.0, .p_out = 0.0,
                                          .seed = 5};
        const auto planted = generate_planted_partition(planted_params_for_mixing(base, 0.2));
        double best = 1e300;
        for (int rep = 0; rep < 3; ++rep) {
            const auto t0 = std::chrono::steady_clock::now();
            const auto scores = local_edge_betweenness(planted.graph, Depth(2));
            const auto p = lpa_leb(planted.graph, scores, {.seed = static_cast<std::uint64_t>(rep)});
            best = std::min(best, seconds_since(t0));
            if (p.community_count() == 0) out.require(false, "non-empty result");
        }
        times.push_back(best);
        out.detail += (out.detail.empty() ? "" : " ") + std::to_string(n) + ":" + fmt("%.3fs", best);
    }
    for (std::size_t i = 1; i < times.size(); ++i)
        out.require(times[i] <= 2.5 * times[i - 1], "ratio " + fmt("%.2f", times[i] / times[i - 1]) + "<=2.5");
    return out;
}

Outcome determinism() {
    Outcome out;
    const auto g = load_edge_list_file(data_path("karate.edges"));
    const auto scores = local_edge_betweenness(g, Depth(2));
    bool engines_ok = true;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const AlgorithmConfig cfg{.seed = seed};
        engines_ok = engines_ok && lpa(g, cfg) == lpa(g, cfg) && lpac(g, cfg) == lpac(g, cfg) &&
                     lpa_leb(g, scores, cfg) == lpa_leb(g, local_edge_betweenness(g, Depth(2)), cfg);
    }
    out.require(engines_ok, "engines repeat per seed");

    auto report = [&](unsigned threads) {
        const std::vector<EngineSpec> engines{EngineSpec::parse("lpa-leb"), EngineSpec::parse("lpa"),
                                              EngineSpec::parse("lpac")};
        std::vector<ExperimentResult> results;
        const AlgorithmConfig cfg{.seed = 123};
        for (const auto& e : engines) results.push_back(run_experiment(g, e.algorithm, cfg, 200, nullptr, threads));
        std::ostringstream csv;
        write_runs_csv(csv, engines, results);
        std::string stats;
        for (const auto& r : results)
            stats += fmt("%.17g,", r.summary.average_modularity) + fmt("%.17g;", r.summary.variance_modularity);
        return csv.str() + stats;
    };
    const auto first = report(0);
    out.require(first == report(0), "harness repeats");
    out.require(first == report(1), "harness independent of thread count");
    return out;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> check;
    };
    const std::vector<Criterion> criteria{
        {1, "betweenness matches path-enumeration oracle", oracle_equivalence},
        {2, "hand-enumerable betweenness fixtures", fixture_values},
        {3, "karate lpa-leb 1000 runs", karate},
        {4, "dolphin lpa-leb 1000 runs", [] { return dataset("dolphins.edges", 0.52, 0.5152, 0.02, 0.001); }},
        {5, "football lpa-leb 1000 runs", [] { return dataset("football.edges", 0.60, 0.5980, 0.01, 0.0); }},
        {6, "power grid lpa-leb 100 runs, 50 vs 4 iterations", power_grid},
        {7, "variance lpa-leb < lpa on karate and dolphin", stability_ordering},
        {8, "karate depth 3 and full within 0.02 of depth 2", depth_study},
        {9, "modularity and NMI values", metric_values},
        {10, "planted-partition mixing sweep", synthetic_sweep},
        {11, "near-linear scaling 25k/50k/100k", scaling},
        {12, "determinism under fixed seeds", determinism},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        if (!o.pass) ++failures;
        std::printf("[%s] %2d %s: %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
