#include "lpaleb/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lpaleb {

double modularity(const Graph& g, const Partition& p) {
    if (p.node_count() != g.node_count())
        throw std::invalid_argument("partition covers " + std::to_string(p.node_count()) + " nodes, graph has " +
                                    std::to_string(g.node_count()));
    if (g.edge_count() == 0) throw std::domain_error("modularity is undefined for a graph without edges");

    const auto membership = p.membership();
    std::vector<double> internal(p.community_count(), 0.0);
    std::vector<double> degree_sum(p.community_count(), 0.0);
    for (const auto& e : g.edges()) {
        const auto cu = membership[e.u];
        const auto cv = membership[e.v];
        degree_sum[cu] += 1.0;
        degree_sum[cv] += 1.0;
        if (cu == cv) internal[cu] += 1.0;
    }

    const double m = static_cast<double>(g.edge_count());
    double q = 0.0;
    for (std::size_t c = 0; c < p.community_count(); ++c) {
        const double share = degree_sum[c] / (2.0 * m);
        q += internal[c] / m - share * share;
    }
    return q;
}

namespace {

double entropy(const std::vector<double>& sizes, double total) {
    double h = 0.0;
    for (const double s : sizes)
        if (s > 0.0) h -= (s / total) * std::log(s / total);
    return h;
}

}  // namespace

double nmi(const Partition& a, const Partition& b) {
    if (a.node_count() != b.node_count())
        throw std::invalid_argument("partitions cover different node counts (" + std::to_string(a.node_count()) +
                                    " vs " + std::to_string(b.node_count()) + ")");
    const std::size_t n = a.node_count();
    if (n == 0) return 1.0;

    const auto ma = a.membership();
    const auto mb = b.membership();

    // Sparse contingency table: sort the (a, b) pairs and count runs.
    std::vector<std::pair<std::size_t, std::size_t>> cells(n);
    for (std::size_t u = 0; u < n; ++u) cells[u] = {ma[u], mb[u]};
    std::sort(cells.begin(), cells.end());

    std::vector<double> size_a(a.community_count(), 0.0);
    std::vector<double> size_b(b.community_count(), 0.0);
    for (const auto& [ca, cb] : cells) {
        size_a[ca] += 1.0;
        size_b[cb] += 1.0;
    }

    const double total = static_cast<double>(n);
    double mutual = 0.0;
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && cells[j] == cells[i]) ++j;
        const double nij = static_cast<double>(j - i);
        const auto [ca, cb] = cells[i];
        mutual += (nij / total) * std::log(nij * total / (size_a[ca] * size_b[cb]));
        i = j;
    }

    const double h = entropy(size_a, total) + entropy(size_b, total);
    if (h == 0.0) return 1.0;
    return std::clamp(2.0 * mutual / h, 0.0, 1.0);
}

}  // namespace lpaleb
