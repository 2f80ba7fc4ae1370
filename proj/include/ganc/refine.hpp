#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "ganc/metrics.hpp"
#include "ganc/partition.hpp"

namespace ganc {

// Boundary bookkeeping for single-node moves: per node, I(u) is the weight
// to same-cluster neighbors (self-loops excluded) and B(u,i) the weight to
// each adjacent foreign cluster i. A node is on the boundary iff its B row
// is nonempty. All move gains come from these caches; no graph rescans.
class RefinementState {
public:
    RefinementState(const WeightedGraph& g, const Partition& p);

    std::uint32_t node_count() const { return static_cast<std::uint32_t>(labels_.size()); }
    std::uint32_t cluster_count() const { return static_cast<std::uint32_t>(degree_.size()); }
    std::uint32_t label(std::uint32_t u) const { return labels_[u]; }

    double internal_weight(std::uint32_t u) const { return internal_to_own_[u]; }
    double boundary_weight(std::uint32_t u, std::uint32_t cluster) const;
    bool is_boundary(std::uint32_t u) const { return !boundary_rows_[u].empty(); }
    std::vector<std::uint32_t> boundary_nodes() const;  // ascending ids

    double cluster_degree(std::uint32_t c) const { return degree_[c]; }
    double cluster_internal(std::uint32_t c) const { return cluster_internal_[c]; }
    std::uint32_t cluster_size(std::uint32_t c) const { return size_[c]; }

    // Gain of moving u from its cluster `from` into `to`. Requires
    // from == label(u), B(u,to) > 0 and |C_from| > 1 (a node may not leave a
    // singleton cluster).
    double move_gain(std::uint32_t u, std::uint32_t from, std::uint32_t to) const;

    // Applies the move and updates every cache incrementally.
    void apply_move(std::uint32_t u, std::uint32_t to);

    // One pass over all node ids ascending; at each boundary node the best
    // positive-gain move (ties toward the smallest target cluster) is
    // applied immediately. Returns the number of moves and the summed gain.
    std::pair<std::uint32_t, double> sweep();

    const std::vector<std::uint32_t>& labels() const { return labels_; }

private:
    const WeightedGraph& graph_;
    std::vector<std::uint32_t> labels_;
    std::vector<double> degree_;
    std::vector<double> cluster_internal_;
    std::vector<std::uint32_t> size_;
    std::vector<double> internal_to_own_;
    std::vector<std::map<std::uint32_t, double>> boundary_rows_;
};

struct RefineResult {
    Partition partition;
    int iterations = 0;      // sweeps run, including the final zero-gain one
    double total_gain = 0.0;
};

// Greedy boundary-node refinement: sweeps until a full pass applies no move,
// or until max_iters sweeps. Never empties a cluster and never changes the
// cluster count; the result's NAssoc is >= the input's.
RefineResult refine(const WeightedGraph& g, const Partition& p,
                    std::optional<int> max_iters = {});

}  // namespace ganc
