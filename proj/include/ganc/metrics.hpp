#pragma once

#include "ganc/graph.hpp"
#include "ganc/partition.hpp"

namespace ganc {

// Normalized association, Sum_i w(C_i,C_i)/d(C_i). Equals exactly 1 for the
// single-cluster partition.
double nassoc(const WeightedGraph& g, const Partition& p);

// Normalized cut, Sum_i w(C_i, V\C_i)/d(C_i); satisfies ncut = k - nassoc.
double ncut(const WeightedGraph& g, const Partition& p);

// Newman-Girvan modularity, Sum_i (w(C_i,C_i)/M - (d(C_i)/M)^2).
double modularity(const WeightedGraph& g, const Partition& p);

// Degree-normalized modularity, equal to (nassoc - 1)/M.
double normalized_modularity(const WeightedGraph& g, const Partition& p);

// Pairwise-agreement Jaccard index a/(a+b+c), computed from the k_x * k_y
// contingency table with 64-bit pair counts. Returns 1 when both partitions
// are all singletons. Throws InputError on mismatched node counts.
double jaccard_index(const Partition& x, const Partition& y);

}  // namespace ganc
