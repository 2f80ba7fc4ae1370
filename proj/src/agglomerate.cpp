#include "ganc/agglomerate.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

namespace ganc {

MergeState::MergeState(const WeightedGraph& g) {
    const std::uint32_t n = g.node_count();
    if (g.has_isolated_node())
        throw InputError("graph has an isolated node; d(u) > 0 is required");
    if (connected_component_count(g) != 1)
        throw InputError(
            "graph is disconnected; the merge hierarchy cannot reach a single cluster. "
            "Extract the largest connected component first");

    const std::uint32_t slots = 2 * n - 1;
    degree_.assign(slots, 0.0);
    self_.assign(slots, 0.0);
    rows_.resize(slots);
    row_heaps_.resize(slots);
    row_version_.assign(slots, 0);
    active_.assign(slots, false);
    next_id_ = n;
    active_count_ = n;

    initial_nassoc_ = 0.0;
    for (std::uint32_t u = 0; u < n; ++u) {
        active_[u] = true;
        degree_[u] = g.degree(u);
        self_[u] = g.self_weight(u);
        initial_nassoc_ += self_[u] / degree_[u];
        auto row = g.neighbors(u);
        rows_[u].reserve(row.size());
        for (const Neighbor& nb : row)
            if (nb.node != u) rows_[u].emplace(nb.node, nb.weight);
    }
    for (std::uint32_t u = 0; u < n; ++u) {
        for (const Neighbor& nb : g.neighbors(u)) {
            if (nb.node == u) continue;
            std::uint32_t lo = std::min(u, nb.node), hi = std::max(u, nb.node);
            double d = merge_delta(self_[lo], self_[hi], nb.weight, degree_[lo], degree_[hi]);
            push_row_entry(u, nb.node, d);
        }
        publish_row_best(u);
    }
}

void MergeState::push_row_entry(std::uint32_t row, std::uint32_t neighbor, double delta) {
    row_heaps_[row].push({delta, std::min(row, neighbor), std::max(row, neighbor), neighbor});
}

void MergeState::publish_row_best(std::uint32_t row) {
    RowHeap& heap = row_heaps_[row];
    while (!heap.empty() && !active_[heap.top().neighbor]) heap.pop();
    if (heap.empty()) return;
    const RowEntry& best = heap.top();
    global_.push({best.delta, best.lo, best.hi, row, best.neighbor, row_version_[row]});
}

MergeRecord MergeState::merge_step() {
    GlobalEntry top{};
    for (;;) {
        if (global_.empty())
            throw InternalError("no adjacent active pair remains; graph state is disconnected");
        top = global_.top();
        global_.pop();
        if (active_[top.row] && row_version_[top.row] == top.version) break;
    }

    const std::uint32_t lo = top.lo, hi = top.hi;
    const std::uint32_t merged = next_id_++;
    const double w_pair = rows_[lo].at(hi);

    degree_[merged] = degree_[lo] + degree_[hi];
    self_[merged] = self_[lo] + self_[hi] + 2.0 * w_pair;
    active_[lo] = false;
    active_[hi] = false;
    active_[merged] = true;
    --active_count_;

    WeightRow& row = rows_[merged];
    row.reserve(rows_[lo].size() + rows_[hi].size());
    for (const auto& [x, w] : rows_[lo])
        if (x != hi) row[x] += w;
    for (const auto& [x, w] : rows_[hi])
        if (x != lo) row[x] += w;

    for (const auto& [x, w_mx] : row) {
        WeightRow& other = rows_[x];
        other.erase(lo);
        other.erase(hi);
        other.emplace(merged, w_mx);
        double d = merge_delta(self_[std::min(merged, x)], self_[std::max(merged, x)], w_mx,
                               degree_[std::min(merged, x)], degree_[std::max(merged, x)]);
        push_row_entry(x, merged, d);
        push_row_entry(merged, x, d);
        ++row_version_[x];
        publish_row_best(x);
    }
    publish_row_best(merged);

    rows_[lo] = WeightRow();
    rows_[hi] = WeightRow();
    row_heaps_[lo] = RowHeap();
    row_heaps_[hi] = RowHeap();

    return {lo, hi, merged, top.delta, active_count_};
}

std::optional<double> MergeState::delta(std::uint32_t a, std::uint32_t b) const {
    if (!is_active(a) || !is_active(b) || a == b) return std::nullopt;
    auto it = rows_[a].find(b);
    if (it == rows_[a].end()) return std::nullopt;
    std::uint32_t lo = std::min(a, b), hi = std::max(a, b);
    return merge_delta(self_[lo], self_[hi], it->second, degree_[lo], degree_[hi]);
}

double MergeState::cluster_weight(std::uint32_t a, std::uint32_t b) const {
    auto it = rows_[a].find(b);
    return it == rows_[a].end() ? 0.0 : it->second;
}

Dendrogram::Dendrogram(std::uint32_t node_count, std::vector<MergeRecord> merges,
                       std::vector<double> series)
    : node_count_(node_count), merges_(std::move(merges)), series_(std::move(series)) {
    std::vector<std::uint32_t> depth(node_count_ + merges_.size(), 0);
    for (const MergeRecord& m : merges_)
        depth[m.new_cluster] = std::max(depth[m.cluster_a], depth[m.cluster_b]) + 1;
    for (std::uint32_t d : depth) height_ = std::max(height_, d);
}

double Dendrogram::nassoc_at(std::uint32_t k) const {
    if (k < 1 || k > node_count_)
        throw InfeasibleError("level k=" + std::to_string(k) + " outside [1, " +
                              std::to_string(node_count_) + "]");
    return series_[k];
}

std::vector<std::uint32_t> Dendrogram::flat_labels(std::uint32_t k) const {
    if (k < 1 || k > node_count_)
        throw InfeasibleError("requested k=" + std::to_string(k) + " outside [1, " +
                              std::to_string(node_count_) + "]");
    const std::uint32_t applied = node_count_ - k;
    std::vector<std::uint32_t> parent(node_count_ + applied);
    for (std::uint32_t i = 0; i < parent.size(); ++i) parent[i] = i;
    for (std::uint32_t s = 0; s < applied; ++s) {
        parent[merges_[s].cluster_a] = merges_[s].new_cluster;
        parent[merges_[s].cluster_b] = merges_[s].new_cluster;
    }
    std::vector<std::uint32_t> raw(node_count_);
    for (std::uint32_t u = 0; u < node_count_; ++u) {
        std::uint32_t r = u;
        while (parent[r] != r) {
            parent[r] = parent[parent[r]];
            r = parent[r];
        }
        raw[u] = r;
    }
    return Partition::compact_labels(raw);
}

Partition Dendrogram::flat_partition(const WeightedGraph& g, std::uint32_t k) const {
    return Partition::from_assignment(g, flat_labels(k));
}

Dendrogram build_dendrogram(const WeightedGraph& g) {
    const std::uint32_t n = g.node_count();
    MergeState state(g);

    std::vector<double> series(n + 1, 0.0);
    series[n] = state.initial_nassoc();
    std::vector<MergeRecord> merges;
    merges.reserve(n - 1);
    for (std::uint32_t k = n; k > 1; --k) {
        MergeRecord rec = state.merge_step();
        series[rec.level_after] = series[rec.level_after + 1] + rec.delta_gain;
        merges.push_back(rec);
    }
    return Dendrogram(n, std::move(merges), std::move(series));
}

namespace {

std::string format_roundtrip(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace

void write_dendrogram(std::ostream& out, const Dendrogram& d) {
    for (const MergeRecord& m : d.merges()) {
        out << m.level_after << ' ' << m.cluster_a << ' ' << m.cluster_b << ' ' << m.new_cluster
            << ' ' << format_roundtrip(m.delta_gain) << ' '
            << format_roundtrip(d.nassoc_at(m.level_after)) << '\n';
    }
}

void write_nassoc_csv(std::ostream& out, const Dendrogram& d) {
    out << "k,nassoc\n";
    for (std::uint32_t k = 1; k <= d.node_count(); ++k)
        out << k << ',' << format_roundtrip(d.nassoc_at(k)) << '\n';
}

}  // namespace ganc
