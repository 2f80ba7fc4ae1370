#include "ganc/metrics.hpp"

#include <unordered_map>

namespace ganc {

double nassoc(const WeightedGraph&, const Partition& p) {
    double total = 0.0;
    for (std::uint32_t c = 0; c < p.cluster_count(); ++c)
        total += p.cluster_internal(c) / p.cluster_degree(c);
    return total;
}

double ncut(const WeightedGraph&, const Partition& p) {
    double total = 0.0;
    for (std::uint32_t c = 0; c < p.cluster_count(); ++c) {
        // w(C, V\C) = d(C) - w(C,C)
        double cut = p.cluster_degree(c) - p.cluster_internal(c);
        total += cut / p.cluster_degree(c);
    }
    return total;
}

double modularity(const WeightedGraph& g, const Partition& p) {
    const double m = g.total_weight();
    double total = 0.0;
    for (std::uint32_t c = 0; c < p.cluster_count(); ++c) {
        double frac = p.cluster_degree(c) / m;
        total += p.cluster_internal(c) / m - frac * frac;
    }
    return total;
}

double normalized_modularity(const WeightedGraph& g, const Partition& p) {
    return (nassoc(g, p) - 1.0) / g.total_weight();
}

namespace {

inline std::uint64_t pairs_of(std::uint64_t count) { return count * (count - 1) / 2; }

}  // namespace

double jaccard_index(const Partition& x, const Partition& y) {
    if (x.node_count() != y.node_count())
        throw InputError("jaccard: partitions cover different node counts (" +
                         std::to_string(x.node_count()) + " vs " + std::to_string(y.node_count()) +
                         ")");

    std::unordered_map<std::uint64_t, std::uint64_t> cells;
    cells.reserve(x.cluster_count() + y.cluster_count());
    for (std::uint32_t u = 0; u < x.node_count(); ++u) {
        std::uint64_t key = (static_cast<std::uint64_t>(x.label(u)) << 32) | y.label(u);
        ++cells[key];
    }

    std::uint64_t same_both = 0;
    for (const auto& [key, count] : cells) same_both += pairs_of(count);
    std::uint64_t same_x = 0;
    for (std::uint32_t c = 0; c < x.cluster_count(); ++c) same_x += pairs_of(x.cluster_size(c));
    std::uint64_t same_y = 0;
    for (std::uint32_t c = 0; c < y.cluster_count(); ++c) same_y += pairs_of(y.cluster_size(c));

    // a + b + c = same_x + same_y - a
    std::uint64_t denom = same_x + same_y - same_both;
    if (denom == 0) return 1.0;
    return static_cast<double>(same_both) / static_cast<double>(denom);
}

}  // namespace ganc
