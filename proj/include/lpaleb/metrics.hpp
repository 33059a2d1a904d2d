#pragma once

#include "lpaleb/graph.hpp"
#include "lpaleb/partition.hpp"

namespace lpaleb {

/// Reference communities read from a "node,community" file.
using GroundTruth = Partition;

/// Newman-Girvan modularity: sum over communities of
/// e_c / m - (d_c / 2m)^2, with e_c the intra-community edges and d_c the
/// degree total of c.
///
/// Throws std::domain_error when the graph has no edges and
/// std::invalid_argument when the partition's node count differs from g's.
double modularity(const Graph& g, const Partition& p);

/// Normalized mutual information 2 I(A;B) / (H(A) + H(B)), natural logs.
/// Returns 1 when both entropies are zero (both partitions are one block).
/// Throws std::invalid_argument if the partitions cover different node counts.
double nmi(const Partition& a, const Partition& b);

}  // namespace lpaleb
