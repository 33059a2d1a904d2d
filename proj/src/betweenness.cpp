#include "lpaleb/betweenness.hpp"

#include <charconv>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace lpaleb {

Depth::Depth(unsigned hops) : hops_(hops) {
    if (hops == 0) throw std::invalid_argument("depth must be >= 1");
}

Depth Depth::parse(std::string_view text) {
    if (text == "full" || text == "FULL" || text == "n") return full();
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0 || value == kFull)
        throw std::invalid_argument("depth must be a positive integer or 'full', got '" + std::string(text) + "'");
    return Depth(value);
}

std::string Depth::to_string() const { return is_full() ? "full" : std::to_string(hops_); }

namespace {

constexpr unsigned kUnreached = std::numeric_limits<unsigned>::max();

}  // namespace

EdgeScoreMap local_edge_betweenness(const Graph& g, Depth depth) {
    const std::size_t n = g.node_count();
    const unsigned max_hops = depth.hops();

    std::vector<double> score(g.edge_count(), 0.0);
    std::vector<unsigned> dist(n, kUnreached);
    std::vector<double> sigma(n, 0.0);
    std::vector<double> delta(n, 0.0);
    std::vector<NodeId> order;
    order.reserve(n);

    for (NodeId s = 0; s < n; ++s) {
        order.clear();
        order.push_back(s);
        dist[s] = 0;
        sigma[s] = 1.0;

        // Forward sweep: BFS layers up to max_hops, counting shortest paths.
        for (std::size_t head = 0; head < order.size(); ++head) {
            const NodeId v = order[head];
            if (dist[v] >= max_hops) continue;
            const unsigned next = dist[v] + 1;
            for (const auto& [w, e] : g.neighbors(v)) {
                if (dist[w] == kUnreached) {
                    dist[w] = next;
                    order.push_back(w);
                }
                if (dist[w] == next) sigma[w] += sigma[v];
            }
        }

        // Backward sweep: each reached target hands 1 + its dependency to its
        // predecessors in proportion to their path counts.
        for (std::size_t i = order.size(); i-- > 1;) {
            const NodeId w = order[i];
            const double carried = (1.0 + delta[w]) / sigma[w];
            for (const auto& [v, e] : g.neighbors(w)) {
                if (dist[v] != kUnreached && dist[v] + 1 == dist[w]) {
                    const double share = sigma[v] * carried;
                    score[e] += share;
                    delta[v] += share;
                }
            }
        }

        for (const NodeId v : order) {
            dist[v] = kUnreached;
            sigma[v] = 0.0;
            delta[v] = 0.0;
        }
    }

    // Every unordered pair was counted from both endpoints.
    for (auto& x : score) x *= 0.5;
    return EdgeScoreMap(std::move(score));
}

namespace {

std::vector<unsigned> bfs_distances(const Graph& g, NodeId source) {
    std::vector<unsigned> dist(g.node_count(), kUnreached);
    std::vector<NodeId> queue{source};
    dist[source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const NodeId v = queue[head];
        for (const auto& inc : g.neighbors(v)) {
            if (dist[inc.neighbor] == kUnreached) {
                dist[inc.neighbor] = dist[v] + 1;
                queue.push_back(inc.neighbor);
            }
        }
    }
    return dist;
}

// Walks every shortest s-t path and counts, per edge, how many of them use it.
struct PathEnumerator {
    const Graph& g;
    const std::vector<unsigned>& from_s;
    const std::vector<unsigned>& to_t;
    NodeId target;
    unsigned length;
    std::vector<EdgeId> stack;
    std::vector<double> uses;
    double paths = 0.0;

    void walk(NodeId at) {
        if (at == target) {
            paths += 1.0;
            for (const EdgeId e : stack) uses[e] += 1.0;
            return;
        }
        for (const auto& [w, e] : g.neighbors(at)) {
            if (from_s[w] == from_s[at] + 1 && to_t[w] != kUnreached && from_s[w] + to_t[w] == length) {
                stack.push_back(e);
                walk(w);
                stack.pop_back();
            }
        }
    }
};

}  // namespace

EdgeScoreMap brute_force_edge_betweenness(const Graph& g, Depth depth) {
    const std::size_t n = g.node_count();
    if (n > kBruteForceNodeLimit)
        throw std::length_error("brute-force betweenness limited to " + std::to_string(kBruteForceNodeLimit) +
                                " nodes, graph has " + std::to_string(n));

    std::vector<std::vector<unsigned>> dist;
    dist.reserve(n);
    for (NodeId s = 0; s < n; ++s) dist.push_back(bfs_distances(g, s));

    std::vector<double> score(g.edge_count(), 0.0);
    for (NodeId s = 0; s < n; ++s) {
        for (NodeId t = s + 1; t < n; ++t) {
            const unsigned d = dist[s][t];
            if (d == kUnreached || d > depth.hops()) continue;
            PathEnumerator walker{g, dist[s], dist[t], t, d, {}, std::vector<double>(g.edge_count(), 0.0)};
            walker.walk(s);
            for (EdgeId e = 0; e < g.edge_count(); ++e) score[e] += walker.uses[e] / walker.paths;
        }
    }
    return EdgeScoreMap(std::move(score));
}

void write_edge_scores_csv(std::ostream& out, const Graph& g, const EdgeScoreMap& scores) {
    if (scores.size() != g.edge_count()) throw std::invalid_argument("score map does not match graph");
    out << "u,v,score\n";
    char buf[64];
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto& edge = g.edge(e);
        std::snprintf(buf, sizeof buf, "%.6f", scores[e]);
        out << edge.u << ',' << edge.v << ',' << buf << '\n';
    }
}

}  // namespace lpaleb
