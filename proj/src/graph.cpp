#include "lpaleb/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string_view>

namespace lpaleb {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

ValidationError::ValidationError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

Graph Graph::from_edges(std::size_t node_count, std::vector<Edge> edges) {
    if (node_count > std::numeric_limits<NodeId>::max())
        throw std::invalid_argument("node count exceeds NodeId range");
    for (auto& e : edges) {
        if (e.u == e.v)
            throw std::invalid_argument("self-loop on node " + std::to_string(e.u));
        if (e.u >= node_count || e.v >= node_count)
            throw std::invalid_argument("edge endpoint outside node range");
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    if (edges.size() > std::numeric_limits<EdgeId>::max())
        throw std::invalid_argument("edge count exceeds EdgeId range");

    Graph g;
    g.node_count_ = node_count;
    g.edges_ = std::move(edges);

    std::vector<std::size_t> deg(node_count, 0);
    for (const auto& e : g.edges_) {
        ++deg[e.u];
        ++deg[e.v];
    }
    g.offsets_.assign(node_count + 1, 0);
    for (std::size_t u = 0; u < node_count; ++u) g.offsets_[u + 1] = g.offsets_[u] + deg[u];

    g.incidences_.resize(2 * g.edges_.size());
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (EdgeId id = 0; id < g.edges_.size(); ++id) {
        const auto& e = g.edges_[id];
        g.incidences_[cursor[e.u]++] = {e.v, id};
        g.incidences_[cursor[e.v]++] = {e.u, id};
    }
    for (std::size_t u = 0; u < node_count; ++u) {
        std::sort(g.incidences_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[u]),
                  g.incidences_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[u + 1]),
                  [](const Incidence& a, const Incidence& b) { return a.neighbor < b.neighbor; });
    }
    return g;
}

const Edge& Graph::edge(EdgeId e) const {
    if (e >= edges_.size()) throw std::out_of_range("edge id " + std::to_string(e) + " out of range");
    return edges_[e];
}

std::span<const Incidence> Graph::neighbors(NodeId u) const {
    if (u >= node_count_) throw std::out_of_range("node id " + std::to_string(u) + " out of range");
    return std::span<const Incidence>(incidences_).subspan(offsets_[u], offsets_[u + 1] - offsets_[u]);
}

std::size_t Graph::degree(NodeId u) const {
    if (u >= node_count_) throw std::out_of_range("node id " + std::to_string(u) + " out of range");
    return offsets_[u + 1] - offsets_[u];
}

double Graph::average_degree() const noexcept {
    if (node_count_ == 0) return 0.0;
    return 2.0 * static_cast<double>(edges_.size()) / static_cast<double>(node_count_);
}

std::size_t degree(const Graph& g, NodeId u) { return g.degree(u); }

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && is_space(line[i])) ++i;
        const std::size_t start = i;
        while (i < line.size() && !is_space(line[i])) ++i;
        if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

NodeId parse_node_id(std::string_view token, std::size_t line_no) {
    std::uint64_t value = 0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw ParseError(line_no, "expected non-negative integer node id, got '" + std::string(token) + "'");
    // Leave headroom so that max id + 1 still fits.
    if (value >= std::numeric_limits<NodeId>::max())
        throw ParseError(line_no, "node id " + std::string(token) + " too large");
    return static_cast<NodeId>(value);
}

}  // namespace

Graph load_edge_list(std::istream& in) {
    std::vector<Edge> edges;
    std::size_t node_count = 0;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto tokens = split_tokens(line);
        if (tokens.empty() || tokens.front().front() == '#') continue;
        if (tokens.size() != 2)
            throw ParseError(line_no, "expected 2 tokens, got " + std::to_string(tokens.size()));
        const NodeId u = parse_node_id(tokens[0], line_no);
        const NodeId v = parse_node_id(tokens[1], line_no);
        if (u == v) throw ValidationError(line_no, "self-loop on node " + std::to_string(u));
        node_count = std::max<std::size_t>(node_count, std::max(u, v) + std::size_t{1});
        edges.push_back({std::min(u, v), std::max(u, v)});
    }
    if (in.bad()) throw std::runtime_error("I/O error while reading edge list");
    return Graph::from_edges(node_count, std::move(edges));
}

Graph load_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open edge list '" + path + "'");
    return load_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace lpaleb
