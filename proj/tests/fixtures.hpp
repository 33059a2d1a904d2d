#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lpaleb/graph.hpp"
#include "lpaleb/random.hpp"

namespace lpaleb::testing {

inline Graph make_graph(std::size_t n, std::initializer_list<std::pair<NodeId, NodeId>> pairs) {
    std::vector<Edge> edges;
    for (auto [u, v] : pairs) edges.push_back({u, v});
    return Graph::from_edges(n, std::move(edges));
}

inline Graph path_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (NodeId i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Graph::from_edges(n, std::move(edges));
}

inline Graph cycle_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (NodeId i = 0; i < n; ++i) edges.push_back({i, static_cast<NodeId>((i + 1) % n)});
    return Graph::from_edges(n, std::move(edges));
}

inline Graph triangle() { return make_graph(3, {{0, 1}, {1, 2}, {0, 2}}); }

// Center 0 with leaves 1..3.
inline Graph star3() { return make_graph(4, {{0, 1}, {0, 2}, {0, 3}}); }

inline Graph two_triangles() { return make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}); }

// Triangles {0,1,2} and {3,4,5} joined by the bridge 2-3.
inline Graph two_triangles_bridge() {
    return make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
}

// Random connected graph: a random spanning tree plus extra edges.
inline Graph random_connected_graph(Rng& rng, std::size_t n, double extra_edge_probability) {
    std::vector<Edge> edges;
    for (NodeId v = 1; v < n; ++v) edges.push_back({static_cast<NodeId>(rng.uniform_index(v)), v});
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v)
            if (rng.uniform_real() < extra_edge_probability) edges.push_back({u, v});
    return Graph::from_edges(n, std::move(edges));
}

inline std::string data_path(const std::string& name) { return std::string(LPALEB_DATA_DIR) + "/" + name; }

}  // namespace lpaleb::testing
