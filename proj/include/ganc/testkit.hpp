#pragma once

#include <cstdint>
#include <vector>

#include "ganc/graph.hpp"
#include "ganc/partition.hpp"

namespace ganc {

struct PlantedParams {
    std::uint32_t n = 0;
    std::uint32_t k = 0;      // 0 = derive the cluster count from the size range
    std::uint32_t c_min = 0;  // size range, used when k == 0
    std::uint32_t c_max = 0;
    double mu = 0.0;  // probability that an edge endpoint pairs outside its cluster
    std::uint32_t d_avg = 0;
    std::uint32_t d_max = 0;
    std::uint64_t seed = 0;
};

struct GroundTruth {
    std::vector<std::uint32_t> labels;  // dense 0..k-1
    std::uint32_t k = 0;
    PlantedParams params;  // generator echo; zeroed for deterministic shapes
};

struct GeneratedGraph {
    WeightedGraph graph;
    GroundTruth truth;
};

// Ring of num_cliques unit-weight cliques of clique_size nodes each; the
// highest-id node of clique i is linked to the lowest-id node of clique i+1
// around the ring. Requires num_cliques >= 3 and clique_size >= 2.
GeneratedGraph ring_of_cliques(std::uint32_t num_cliques, std::uint32_t clique_size);

// Simplified planted-partition benchmark: cluster sizes drawn uniformly in
// [c_min, c_max] (or n/k balanced when k is fixed), per-node degree targets
// uniform in [d_avg-5, min(d_avg+5, d_max)], and each edge endpoint pairs
// intra-cluster with probability 1-mu. Simple graph, unit weights,
// deterministic under seed.
GeneratedGraph planted_partition(const PlantedParams& params);

// Two disjoint unit-weight 4-node chains; true k = 2.
GeneratedGraph two_chains();

struct OracleResult {
    Partition partition;
    double nassoc = 0.0;
};

// Exhaustive max-NAssoc search over all partitions of the nodes into exactly
// k nonempty clusters (restricted-growth-string enumeration); ties resolve
// to the lexicographically smallest assignment. Requires n <= 12.
OracleResult brute_force_max_nassoc(const WeightedGraph& g, std::uint32_t k);

}  // namespace ganc
