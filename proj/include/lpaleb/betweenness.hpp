#pragma once

#include <cstddef>
#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lpaleb/graph.hpp"

namespace lpaleb {

/// Shortest-path depth bound for local edge betweenness: a positive hop count
/// or full() for untruncated betweenness.
class Depth {
  public:
    /// Throws std::invalid_argument for hops == 0.
    explicit Depth(unsigned hops);

    static constexpr Depth full() noexcept { return Depth(kFull, 0); }

    /// Accepts a positive integer or "full" / "n".
    static Depth parse(std::string_view text);

    bool is_full() const noexcept { return hops_ == kFull; }

    /// Hop bound; the largest representable value when full.
    unsigned hops() const noexcept { return hops_; }

    std::string to_string() const;

    bool operator==(const Depth&) const = default;

  private:
    static constexpr unsigned kFull = std::numeric_limits<unsigned>::max();
    constexpr Depth(unsigned hops, int) noexcept : hops_(hops) {}
    unsigned hops_;
};

/// Per-edge non-negative scores indexed by edge id.
class EdgeScoreMap {
  public:
    EdgeScoreMap() = default;
    explicit EdgeScoreMap(std::vector<double> scores) : scores_(std::move(scores)) {}

    std::size_t size() const noexcept { return scores_.size(); }
    double operator[](EdgeId e) const { return scores_[e]; }
    double at(EdgeId e) const { return scores_.at(e); }
    std::span<const double> values() const noexcept { return scores_; }

    bool operator==(const EdgeScoreMap&) const = default;

  private:
    std::vector<double> scores_;
};

/// Depth-truncated edge betweenness. Every unordered pair (s, t) with
/// 1 <= dist(s, t) <= depth spreads a unit weight evenly over its shortest
/// paths; each edge sums the shares of the paths it lies on.
///
/// Runs one truncated BFS per source with Brandes-style back-propagation of
/// pair dependencies, then halves the totals. Work per source is bounded by
/// the size of its depth-ball, so h = 2 on sparse graphs is O(n * d^2).
EdgeScoreMap local_edge_betweenness(const Graph& g, Depth depth);

/// Reference implementation that enumerates every shortest path explicitly.
/// Exponential in the worst case; throws std::length_error above
/// kBruteForceNodeLimit nodes.
EdgeScoreMap brute_force_edge_betweenness(const Graph& g, Depth depth);

inline constexpr std::size_t kBruteForceNodeLimit = 16;

/// CSV with header "u,v,score", one row per edge in (u, v) order, six
/// decimals.
void write_edge_scores_csv(std::ostream& out, const Graph& g, const EdgeScoreMap& scores);

}  // namespace lpaleb
