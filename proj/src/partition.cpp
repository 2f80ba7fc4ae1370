#include "ganc/partition.hpp"

#include <unordered_map>

namespace ganc {

Partition Partition::from_assignment(const WeightedGraph& g, std::vector<std::uint32_t> labels) {
    if (labels.size() != g.node_count())
        throw InputError("partition covers " + std::to_string(labels.size()) + " nodes, graph has " +
                         std::to_string(g.node_count()));

    std::uint32_t k = 0;
    for (std::uint32_t c : labels) k = std::max(k, c + 1);
    if (k == 0) throw InputError("partition has no clusters");

    Partition p;
    p.labels_ = std::move(labels);
    p.degree_.assign(k, 0.0);
    p.internal_.assign(k, 0.0);
    p.size_.assign(k, 0);

    for (std::uint32_t u = 0; u < g.node_count(); ++u) {
        std::uint32_t c = p.labels_[u];
        ++p.size_[c];
        p.degree_[c] += g.degree(u);
        // Row scan in storage order: for k=1 this reproduces d(u) exactly,
        // making NAssoc of the whole-graph cluster exactly 1.
        double internal = 0.0;
        for (const Neighbor& nb : g.neighbors(u))
            if (p.labels_[nb.node] == c) internal += nb.weight;
        p.internal_[c] += internal;
    }

    for (std::uint32_t c = 0; c < k; ++c)
        if (p.size_[c] == 0)
            throw InputError("cluster ids are not dense: cluster " + std::to_string(c) +
                             " is empty");
    return p;
}

std::vector<std::uint32_t> Partition::compact_labels(std::span<const std::uint32_t> labels) {
    std::unordered_map<std::uint32_t, std::uint32_t> remap;
    remap.reserve(labels.size());
    std::vector<std::uint32_t> out(labels.size());
    for (std::size_t u = 0; u < labels.size(); ++u) {
        auto [it, inserted] = remap.emplace(labels[u], static_cast<std::uint32_t>(remap.size()));
        out[u] = it->second;
    }
    return out;
}

}  // namespace ganc
