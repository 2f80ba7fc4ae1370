#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <queue>
#include <unordered_map>
#include <vector>

#include "ganc/partition.hpp"

namespace ganc {

// Normalized-association gain of contracting clusters a and b:
//   (w(a,a) + w(b,b) + 2 w(a,b)) / (d(a)+d(b)) - w(a,a)/d(a) - w(b,b)/d(b)
// Callers pass the pair in (lo, hi) id order so the value is bit-identical
// across every code path that evaluates the same pair.
inline double merge_delta(double self_a, double self_b, double w_ab, double d_a, double d_b) {
    return (self_a + self_b + 2.0 * w_ab) / (d_a + d_b) - self_a / d_a - self_b / d_b;
}

struct MergeRecord {
    std::uint32_t cluster_a = 0;  // cluster_a < cluster_b
    std::uint32_t cluster_b = 0;
    std::uint32_t new_cluster = 0;
    double delta_gain = 0.0;
    std::uint32_t level_after = 0;  // k after this merge
};

// Mutable agglomeration state: per-cluster degree and self-weight, sparse
// weight rows over active clusters, a lazy max-heap per row plus a global
// heap of row maxima. Merged clusters get fresh ids n, n+1, ...; entries
// naming a retired cluster or carrying a stale row version are discarded
// when popped.
class MergeState {
public:
    // Builds the initial gain structure over single-node clusters. Throws
    // InputError when the graph is disconnected (extract the largest
    // connected component first) or has an isolated node.
    explicit MergeState(const WeightedGraph& g);

    // NAssoc(C_n) = Sum_u w(u,u)/d(u).
    double initial_nassoc() const { return initial_nassoc_; }

    std::uint32_t active_clusters() const { return active_count_; }
    bool has_mergeable_pair() const { return active_count_ > 1; }

    // Merges the adjacent pair with the largest gain; ties go to the
    // lexicographically smallest (min id, max id) pair. Throws InternalError
    // when no adjacent pair remains.
    MergeRecord merge_step();

    // Introspection for verification: current gain of an adjacent active
    // pair, or nullopt when the clusters are not adjacent.
    std::optional<double> delta(std::uint32_t a, std::uint32_t b) const;
    bool is_active(std::uint32_t c) const { return c < active_.size() && active_[c]; }
    double cluster_degree(std::uint32_t c) const { return degree_[c]; }
    double cluster_self_weight(std::uint32_t c) const { return self_[c]; }
    double cluster_weight(std::uint32_t a, std::uint32_t b) const;

private:
    struct RowEntry {
        double delta;
        std::uint32_t lo, hi;     // pair in id order
        std::uint32_t neighbor;   // the other cluster, relative to the owning row
    };
    struct RowEntryWorse {
        bool operator()(const RowEntry& a, const RowEntry& b) const {
            if (a.delta != b.delta) return a.delta < b.delta;
            if (a.lo != b.lo) return a.lo > b.lo;
            return a.hi > b.hi;
        }
    };
    struct GlobalEntry {
        double delta;
        std::uint32_t lo, hi;
        std::uint32_t row;
        std::uint32_t neighbor;
        std::uint32_t version;
    };
    struct GlobalEntryWorse {
        bool operator()(const GlobalEntry& a, const GlobalEntry& b) const {
            if (a.delta != b.delta) return a.delta < b.delta;
            if (a.lo != b.lo) return a.lo > b.lo;
            if (a.hi != b.hi) return a.hi > b.hi;
            if (a.row != b.row) return a.row > b.row;
            return a.version < b.version;
        }
    };
    using RowHeap = std::priority_queue<RowEntry, std::vector<RowEntry>, RowEntryWorse>;
    using WeightRow = std::unordered_map<std::uint32_t, double>;

    void push_row_entry(std::uint32_t row, std::uint32_t neighbor, double delta);
    void publish_row_best(std::uint32_t row);

    std::vector<double> degree_;
    std::vector<double> self_;
    std::vector<WeightRow> rows_;
    std::vector<RowHeap> row_heaps_;
    std::vector<std::uint32_t> row_version_;
    std::vector<bool> active_;
    std::priority_queue<GlobalEntry, std::vector<GlobalEntry>, GlobalEntryWorse> global_;
    std::uint32_t next_id_ = 0;
    std::uint32_t active_count_ = 0;
    double initial_nassoc_ = 0.0;
};

// Full merge hierarchy: n-1 merge records and the NAssoc(C_k) series for
// k = n..1, accumulated incrementally from the merge gains. Leaf cluster ids
// coincide with node ids (node u starts as cluster u); merge i creates
// cluster n+i. Immutable once built; flat_partition calls are safe in
// parallel.
class Dendrogram {
public:
    Dendrogram(std::uint32_t node_count, std::vector<MergeRecord> merges,
               std::vector<double> series);

    std::uint32_t node_count() const { return node_count_; }
    std::span<const MergeRecord> merges() const { return merges_; }

    // series()[k] = NAssoc(C_k) for k in 1..n; index 0 is unused.
    std::span<const double> nassoc_series() const { return series_; }
    double nassoc_at(std::uint32_t k) const;

    // Longest leaf-to-root path.
    std::uint32_t height() const { return height_; }

    // Cluster labels at level k, dense 0..k-1 by first appearance in node
    // order. Throws InfeasibleError when k is out of [1, n].
    std::vector<std::uint32_t> flat_labels(std::uint32_t k) const;
    Partition flat_partition(const WeightedGraph& g, std::uint32_t k) const;

private:
    std::uint32_t node_count_;
    std::vector<MergeRecord> merges_;
    std::vector<double> series_;
    std::uint32_t height_ = 0;
};

Dendrogram build_dendrogram(const WeightedGraph& g);

// One merge per line: "level_k cluster_a cluster_b new_id delta_gain nassoc_after".
void write_dendrogram(std::ostream& out, const Dendrogram& d);

// CSV "k,nassoc" with header, k ascending.
void write_nassoc_csv(std::ostream& out, const Dendrogram& d);

}  // namespace ganc
