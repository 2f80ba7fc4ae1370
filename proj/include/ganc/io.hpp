#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "ganc/graph.hpp"
#include "ganc/partition.hpp"

namespace ganc {

// One "token<TAB>cluster_id" line per node, tokens in first-appearance
// (dense id) order.
void write_partition(std::ostream& out, const Partition& p, const NodeIdMap& ids);

// Reads a partition file over the given graph. Cluster tokens are densified
// by first appearance. Every graph node must be covered; tokens outside the
// graph are an error unless allow_extra_nodes is set (the
// largest-component workflow hands in truth files for the full graph).
Partition read_partition(std::istream& in, const WeightedGraph& g, const NodeIdMap& ids,
                         bool allow_extra_nodes = false);

struct MetricsReport {
    std::uint32_t k = 0;
    double nassoc = 0.0;
    double nassoc_per_cluster = 0.0;
    double ncut = 0.0;
    double modularity = 0.0;
    std::optional<double> jaccard_vs_truth;
};

MetricsReport compute_metrics(const WeightedGraph& g, const Partition& p,
                              const Partition* truth = nullptr);

// Fixed-key JSON object; floating values carry 12 significant digits.
std::string metrics_to_json(const MetricsReport& report);

}  // namespace ganc
