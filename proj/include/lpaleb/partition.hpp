#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lpaleb/graph.hpp"

namespace lpaleb {

/// Per-node label. Labels are drawn from the node-id space.
using Labeling = std::vector<NodeId>;

/// Disjoint, non-empty communities covering nodes [0, node_count).
///
/// Community ids are canonical: dense from 0, numbered in order of each
/// community's smallest member. Equal groupings therefore compare equal no
/// matter which labels produced them.
class Partition {
  public:
    Partition() = default;

    /// One community per distinct label value.
    template <typename Label>
    static Partition from_labels(std::span<const Label> labels);

    static Partition from_labels(const Labeling& labels) { return from_labels(std::span<const NodeId>(labels)); }

    /// All nodes in one community.
    static Partition whole(std::size_t node_count);

    std::size_t node_count() const noexcept { return membership_.size(); }
    std::size_t community_count() const noexcept { return communities_.size(); }

    std::span<const std::size_t> membership() const noexcept { return membership_; }
    std::size_t community_of(NodeId u) const { return membership_.at(u); }

    /// Members of each community, ascending.
    const std::vector<std::vector<NodeId>>& communities() const noexcept { return communities_; }

    bool operator==(const Partition&) const = default;

  private:
    std::vector<std::size_t> membership_;
    std::vector<std::vector<NodeId>> communities_;
};

/// Reads "node,community" rows (optional header). Every node in
/// [0, node_count) must appear exactly once. Throws ParseError.
Partition read_partition_csv(std::istream& in, std::size_t node_count);
Partition read_partition_csv_file(const std::string& path, std::size_t node_count);

/// Writes "node,community" with a header row.
void write_partition_csv(std::ostream& out, const Partition& p);

// ---------------------------------------------------------------------------

template <typename Label>
Partition Partition::from_labels(std::span<const Label> labels) {
    Partition p;
    p.membership_.resize(labels.size());
    // Map each label to the first node carrying it, scanning in node order, so
    // the resulting ids follow smallest-member order.
    std::vector<std::pair<Label, std::size_t>> seen;
    seen.reserve(labels.size());
    for (std::size_t u = 0; u < labels.size(); ++u) seen.emplace_back(labels[u], u);
    std::sort(seen.begin(), seen.end());
    std::vector<std::size_t> first_holder(labels.size());
    for (std::size_t i = 0; i < seen.size();) {
        std::size_t j = i;
        while (j < seen.size() && seen[j].first == seen[i].first) ++j;
        for (std::size_t k = i; k < j; ++k) first_holder[seen[k].second] = seen[i].second;
        i = j;
    }
    std::vector<std::size_t> id_of_first(labels.size(), SIZE_MAX);
    for (std::size_t u = 0; u < labels.size(); ++u) {
        auto& id = id_of_first[first_holder[u]];
        if (id == SIZE_MAX) {
            id = p.communities_.size();
            p.communities_.emplace_back();
        }
        p.membership_[u] = id;
        p.communities_[id].push_back(static_cast<NodeId>(u));
    }
    return p;
}

}  // namespace lpaleb
