#include "lpaleb/propagation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "lpaleb/random.hpp"

namespace lpaleb {

Algorithm parse_algorithm(std::string_view name) {
    if (name == "lpa") return Algorithm::lpa;
    if (name == "lpa-leb" || name == "lpa_leb") return Algorithm::lpa_leb;
    if (name == "lpac") return Algorithm::lpac;
    throw std::invalid_argument("unknown algorithm '" + std::string(name) + "' (expected lpa, lpa-leb or lpac)");
}

std::string_view to_string(Algorithm algo) noexcept {
    switch (algo) {
        case Algorithm::lpa: return "lpa";
        case Algorithm::lpa_leb: return "lpa-leb";
        case Algorithm::lpac: return "lpac";
    }
    return "?";
}

double edge_clustering_coefficient(const Graph& g, EdgeId e) {
    const auto& edge = g.edge(e);
    const auto nu = g.neighbors(edge.u);
    const auto nv = g.neighbors(edge.v);
    const std::size_t denom = std::min(nu.size(), nv.size()) - 1;
    if (denom == 0) return kMaxEdgeClustering;
    // Adjacency lists are sorted by neighbor id.
    std::size_t triangles = 0;
    auto a = nu.begin();
    auto b = nv.begin();
    while (a != nu.end() && b != nv.end()) {
        if (a->neighbor < b->neighbor) {
            ++a;
        } else if (b->neighbor < a->neighbor) {
            ++b;
        } else {
            ++triangles;
            ++a;
            ++b;
        }
    }
    return static_cast<double>(triangles + 1) / static_cast<double>(denom);
}

MajorityNeighborhoods::MajorityNeighborhoods(const Graph& g, const EdgeScoreMap& scores) {
    if (scores.size() != g.edge_count()) throw std::invalid_argument("edge scores do not match graph");
    offsets_.assign(g.node_count() + 1, 0);
    std::vector<Incidence> ranked;
    for (NodeId u = 0; u < g.node_count(); ++u) {
        const auto nbrs = g.neighbors(u);
        ranked.assign(nbrs.begin(), nbrs.end());
        std::stable_sort(ranked.begin(), ranked.end(), [&](const Incidence& a, const Incidence& b) {
            if (scores[a.edge] != scores[b.edge]) return scores[a.edge] < scores[b.edge];
            return a.neighbor < b.neighbor;
        });
        const std::size_t keep = std::min(ranked.size(), ranked.size() / 2 + 1);
        entries_.insert(entries_.end(), ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(keep));
        offsets_[u + 1] = entries_.size();
    }
}

namespace {

// Frequency vote over a set of incidences. Label ids are node ids, so dense
// scratch arrays of size n are reset through the touched list after each
// vote.
class LabelVote {
  public:
    explicit LabelVote(std::size_t node_count)
        : count_(node_count, 0), key_(node_count, std::numeric_limits<double>::infinity()) {}

    // Most frequent neighbor label. With non-empty keys (one per voter),
    // frequency ties go to the label with the smallest key over its
    // supporting edges; whatever tie remains is broken uniformly at random.
    NodeId pick(std::span<const Incidence> voters, std::span<const NodeId> labels, Rng& rng,
                std::span<const double> edge_key = {}) {
        std::uint32_t best = 0;
        for (std::size_t i = 0; i < voters.size(); ++i) {
            const NodeId l = labels[voters[i].neighbor];
            if (count_[l]++ == 0) touched_.push_back(l);
            best = std::max(best, count_[l]);
            if (!edge_key.empty()) key_[l] = std::min(key_[l], edge_key[i]);
        }

        tied_.clear();
        for (const NodeId l : touched_)
            if (count_[l] == best) tied_.push_back(l);

        if (!edge_key.empty() && tied_.size() > 1) {
            double best_key = std::numeric_limits<double>::infinity();
            for (const NodeId l : tied_) best_key = std::min(best_key, key_[l]);
            std::erase_if(tied_, [&](NodeId l) { return key_[l] != best_key; });
        }

        const NodeId winner = tied_.size() == 1 ? tied_.front() : tied_[rng.uniform_index(tied_.size())];

        for (const NodeId l : touched_) {
            count_[l] = 0;
            key_[l] = std::numeric_limits<double>::infinity();
        }
        touched_.clear();
        return winner;
    }

    bool holds_majority(std::span<const Incidence> voters, std::span<const NodeId> labels, NodeId own) {
        std::uint32_t best = 0;
        for (const auto& inc : voters) {
            const NodeId l = labels[inc.neighbor];
            if (count_[l]++ == 0) touched_.push_back(l);
            best = std::max(best, count_[l]);
        }
        const bool ok = count_[own] == best;
        for (const NodeId l : touched_) count_[l] = 0;
        touched_.clear();
        return ok;
    }

  private:
    std::vector<std::uint32_t> count_;
    std::vector<double> key_;
    std::vector<NodeId> touched_;
    std::vector<NodeId> tied_;
};

// Per-node edge keys laid out in adjacency order, so a vote reads them
// sequentially instead of through edge ids.
class SlotKeys {
  public:
    SlotKeys(const Graph& g, std::span<const double> by_edge) : offsets_(g.node_count() + 1, 0) {
        keys_.reserve(2 * g.edge_count());
        for (NodeId u = 0; u < g.node_count(); ++u) {
            for (const auto& inc : g.neighbors(u)) keys_.push_back(by_edge[inc.edge]);
            offsets_[u + 1] = keys_.size();
        }
    }

    std::span<const double> of(NodeId u) const {
        return std::span<const double>(keys_).subspan(offsets_[u], offsets_[u + 1] - offsets_[u]);
    }

  private:
    std::vector<std::size_t> offsets_;
    std::vector<double> keys_;
};

bool stable(const Graph& g, std::span<const NodeId> labels, LabelVote& vote) {
    for (NodeId u = 0; u < g.node_count(); ++u) {
        const auto nbrs = g.neighbors(u);
        if (!nbrs.empty() && !vote.holds_majority(nbrs, labels, labels[u])) return false;
    }
    return true;
}

void check_config(const Graph& g, const AlgorithmConfig& cfg) {
    if (cfg.max_iterations == 0) throw std::invalid_argument("max_iterations must be >= 1");
    if (g.node_count() > std::numeric_limits<std::uint32_t>::max())
        throw std::invalid_argument("graph too large");
}

// Shared driver. `sweep` performs one iteration's label updates.
template <typename Sweep>
Partition propagate(const Graph& g, const AlgorithmConfig& cfg, PropagationTrace* trace, LabelVote& vote,
                    Sweep&& sweep) {
    check_config(g, cfg);
    const std::size_t n = g.node_count();
    Labeling labels(n);
    std::iota(labels.begin(), labels.end(), NodeId{0});
    std::vector<NodeId> order(n);
    std::iota(order.begin(), order.end(), NodeId{0});
    Rng rng(cfg.seed);

    std::size_t iterations = 0;
    bool converged = false;
    while (iterations < cfg.max_iterations) {
        ++iterations;
        sweep(labels, order, rng);
        if (stable(g, labels, vote)) {
            converged = true;
            break;
        }
    }

    auto partition = Partition::from_labels(labels);
    if (trace) {
        trace->iterations = iterations;
        trace->converged = converged;
        trace->labels = std::move(labels);
    }
    return partition;
}

}  // namespace

bool is_label_stable(const Graph& g, std::span<const NodeId> labels) {
    if (labels.size() != g.node_count()) throw std::invalid_argument("labeling does not match graph");
    LabelVote vote(g.node_count());
    return stable(g, labels, vote);
}

Partition lpa(const Graph& g, const AlgorithmConfig& cfg, PropagationTrace* trace) {
    LabelVote vote(g.node_count());
    return propagate(g, cfg, trace, vote, [&](Labeling& labels, std::vector<NodeId>& order, Rng& rng) {
        rng.shuffle(std::span<NodeId>(order));
        for (const NodeId x : order) {
            const auto nbrs = g.neighbors(x);
            if (!nbrs.empty()) labels[x] = vote.pick(nbrs, labels, rng);
        }
    });
}

Partition lpa_leb(const Graph& g, const EdgeScoreMap& scores, const AlgorithmConfig& cfg, PropagationTrace* trace) {
    const MajorityNeighborhoods majority(g, scores);
    const SlotKeys keys(g, scores.values());
    LabelVote vote(g.node_count());
    return propagate(g, cfg, trace, vote, [&](Labeling& labels, std::vector<NodeId>& order, Rng& rng) {
        rng.shuffle(std::span<NodeId>(order));
        for (const NodeId x : order) {
            const auto voters = majority.of(x);
            if (!voters.empty()) labels[x] = vote.pick(voters, labels, rng);
        }
        rng.shuffle(std::span<NodeId>(order));
        for (const NodeId x : order) {
            const auto nbrs = g.neighbors(x);
            if (!nbrs.empty()) labels[x] = vote.pick(nbrs, labels, rng, keys.of(x));
        }
    });
}

Partition lpac(const Graph& g, const AlgorithmConfig& cfg, PropagationTrace* trace) {
    // Negated so that the smallest key is the most clustered edge.
    std::vector<double> key(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) key[e] = -edge_clustering_coefficient(g, e);
    const SlotKeys keys(g, key);
    LabelVote vote(g.node_count());
    return propagate(g, cfg, trace, vote, [&](Labeling& labels, std::vector<NodeId>& order, Rng& rng) {
        rng.shuffle(std::span<NodeId>(order));
        for (const NodeId x : order) {
            const auto nbrs = g.neighbors(x);
            if (!nbrs.empty()) labels[x] = vote.pick(nbrs, labels, rng, keys.of(x));
        }
    });
}

}  // namespace lpaleb
