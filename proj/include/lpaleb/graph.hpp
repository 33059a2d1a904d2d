#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lpaleb {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

// Undirected edge, always stored with u < v.
struct Edge {
    NodeId u;
    NodeId v;

    auto operator<=>(const Edge&) const = default;
};

// One adjacency entry: the node on the other side and the edge reaching it.
struct Incidence {
    NodeId neighbor;
    EdgeId edge;

    bool operator==(const Incidence&) const = default;
};

// Raised for malformed input files. Carries the offending 1-based line.
class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t line, const std::string& message);
    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

// Raised for syntactically valid input that violates graph invariants.
class ValidationError : public std::runtime_error {
  public:
    ValidationError(std::size_t line, const std::string& message);
    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

/// Immutable simple undirected graph in compressed adjacency form.
///
/// Construction canonicalizes the input: edges are oriented u < v, sorted
/// and deduplicated, edge ids follow that order, and every adjacency list is
/// sorted by neighbor id. Two graphs built from the same edge set therefore
/// compare equal regardless of input order.
class Graph {
  public:
    Graph() = default;

    /// Builds a graph over nodes [0, node_count). Duplicate and reversed
    /// duplicate pairs collapse. Throws std::invalid_argument on self-loops or
    /// endpoints outside the node range.
    static Graph from_edges(std::size_t node_count, std::vector<Edge> edges);

    std::size_t node_count() const noexcept { return node_count_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    std::span<const Edge> edges() const noexcept { return edges_; }
    const Edge& edge(EdgeId e) const;

    std::span<const Incidence> neighbors(NodeId u) const;
    std::size_t degree(NodeId u) const;

    double average_degree() const noexcept;

    bool operator==(const Graph&) const = default;

  private:
    std::size_t node_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_{0};
    std::vector<Incidence> incidences_;
};

/// Length of adjacency[u]. Throws std::out_of_range for u >= node_count.
std::size_t degree(const Graph& g, NodeId u);

/// Reads a whitespace-separated edge list. '#' lines and blank lines are
/// skipped; node_count is max id + 1.
Graph load_edge_list(std::istream& in);
Graph load_edge_list_file(const std::string& path);

/// Canonical form: one "u v" line per edge, u < v, ascending.
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace lpaleb
