#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ganc/graph.hpp"

namespace ganc {

// Flat assignment of nodes to k clusters with cached cluster degrees d(C_i),
// internal weights w(C_i,C_i) and sizes. Internal weight counts non-loop
// intra-cluster edges twice and self-loops once. Cluster ids must be dense
// 0..k-1 with every cluster nonempty.
class Partition {
public:
    // Validates the labelling and computes the caches from the graph.
    static Partition from_assignment(const WeightedGraph& g, std::vector<std::uint32_t> labels);

    // Densifies arbitrary labels by first appearance in node order.
    static std::vector<std::uint32_t> compact_labels(std::span<const std::uint32_t> labels);

    std::uint32_t node_count() const { return static_cast<std::uint32_t>(labels_.size()); }
    std::uint32_t cluster_count() const { return static_cast<std::uint32_t>(degree_.size()); }
    std::uint32_t label(std::uint32_t u) const { return labels_[u]; }
    std::span<const std::uint32_t> labels() const { return labels_; }

    double cluster_degree(std::uint32_t c) const { return degree_[c]; }
    double cluster_internal(std::uint32_t c) const { return internal_[c]; }
    std::uint32_t cluster_size(std::uint32_t c) const { return size_[c]; }

private:
    std::vector<std::uint32_t> labels_;
    std::vector<double> degree_;
    std::vector<double> internal_;
    std::vector<std::uint32_t> size_;
};

}  // namespace ganc
