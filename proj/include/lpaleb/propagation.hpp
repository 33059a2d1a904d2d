#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lpaleb/betweenness.hpp"
#include "lpaleb/graph.hpp"
#include "lpaleb/partition.hpp"

namespace lpaleb {

enum class Algorithm { lpa, lpa_leb, lpac };

/// "lpa", "lpa-leb" or "lpac". Throws std::invalid_argument otherwise.
Algorithm parse_algorithm(std::string_view name);
std::string_view to_string(Algorithm algo) noexcept;

struct AlgorithmConfig {
    std::size_t max_iterations = 50;
    std::uint64_t seed = 0;
    Depth depth{2};  // lpa-leb only
};

/// Optional diagnostics filled in by the engines.
struct PropagationTrace {
    std::size_t iterations = 0;
    bool converged = false;
    Labeling labels;
};

/// Asynchronous label propagation. Each iteration shuffles the node order and
/// lets every node take the most frequent label among its neighbors, ties
/// broken uniformly at random. Stops once every node holds one of its
/// neighborhood's most frequent labels, or after max_iterations.
Partition lpa(const Graph& g, const AlgorithmConfig& cfg, PropagationTrace* trace = nullptr);

/// Label propagation restricted by local edge betweenness.
///
/// Every iteration makes two shuffled passes:
///  - pass A: a node votes only among its floor(d/2)+1 neighbors reached
///    through the lowest-betweenness edges (ties at the cut by neighbor id);
///    equal-frequency labels are chosen uniformly at random.
///  - pass B: a node votes among all neighbors; equal-frequency labels are
///    ranked by the smallest betweenness of an edge leading to a holder of
///    that label, remaining ties chosen at random.
/// The stop test after pass B is the same as for lpa().
///
/// `scores` must be indexed by the edge ids of `g`; cfg.depth is not read
/// here, it documents how the scores were produced.
Partition lpa_leb(const Graph& g, const EdgeScoreMap& scores, const AlgorithmConfig& cfg,
                  PropagationTrace* trace = nullptr);

/// LPA where equal-frequency labels are ranked by the highest edge clustering
/// coefficient of an edge leading to a holder of that label.
Partition lpac(const Graph& g, const AlgorithmConfig& cfg, PropagationTrace* trace = nullptr);

/// Value returned by edge_clustering_coefficient when an endpoint has degree 1.
inline constexpr double kMaxEdgeClustering = std::numeric_limits<double>::infinity();

/// (triangles through e + 1) / min(deg(u) - 1, deg(v) - 1), or
/// kMaxEdgeClustering when the denominator is zero.
double edge_clustering_coefficient(const Graph& g, EdgeId e);

/// Pass-A voting neighborhoods: for every node the floor(d/2)+1 incidences
/// with the smallest edge score, ordered by (score, neighbor id).
class MajorityNeighborhoods {
  public:
    MajorityNeighborhoods(const Graph& g, const EdgeScoreMap& scores);

    std::span<const Incidence> of(NodeId u) const {
        return std::span<const Incidence>(entries_).subspan(offsets_[u], offsets_[u + 1] - offsets_[u]);
    }

  private:
    std::vector<std::size_t> offsets_;
    std::vector<Incidence> entries_;
};

/// True if every non-isolated node's label is among the most frequent labels
/// of its neighbors.
bool is_label_stable(const Graph& g, std::span<const NodeId> labels);

}  // namespace lpaleb
