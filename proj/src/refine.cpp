#include "ganc/refine.hpp"

namespace ganc {

namespace {

// Gains at or below this floor are treated as zero so that rounding dust in
// the incrementally maintained caches can never drive an unbounded move
// sequence.
constexpr double kMinGain = 1e-12;

}  // namespace

RefinementState::RefinementState(const WeightedGraph& g, const Partition& p) : graph_(g) {
    const std::uint32_t n = g.node_count();
    labels_.assign(p.labels().begin(), p.labels().end());
    degree_.resize(p.cluster_count());
    cluster_internal_.resize(p.cluster_count());
    size_.resize(p.cluster_count());
    for (std::uint32_t c = 0; c < p.cluster_count(); ++c) {
        degree_[c] = p.cluster_degree(c);
        cluster_internal_[c] = p.cluster_internal(c);
        size_[c] = p.cluster_size(c);
    }
    internal_to_own_.assign(n, 0.0);
    boundary_rows_.resize(n);
    for (std::uint32_t u = 0; u < n; ++u) {
        const std::uint32_t cu = labels_[u];
        for (const Neighbor& nb : g.neighbors(u)) {
            if (nb.node == u) continue;
            if (labels_[nb.node] == cu)
                internal_to_own_[u] += nb.weight;
            else
                boundary_rows_[u][labels_[nb.node]] += nb.weight;
        }
    }
}

double RefinementState::boundary_weight(std::uint32_t u, std::uint32_t cluster) const {
    auto it = boundary_rows_[u].find(cluster);
    return it == boundary_rows_[u].end() ? 0.0 : it->second;
}

std::vector<std::uint32_t> RefinementState::boundary_nodes() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t u = 0; u < node_count(); ++u)
        if (is_boundary(u)) out.push_back(u);
    return out;
}

double RefinementState::move_gain(std::uint32_t u, std::uint32_t from, std::uint32_t to) const {
    if (from != labels_[u]) throw InternalError("move_gain: node is not in the source cluster");
    if (size_[from] <= 1)
        throw InfeasibleError("move_gain: node may not leave a singleton cluster");
    auto it = boundary_rows_[u].find(to);
    if (it == boundary_rows_[u].end())
        throw InfeasibleError("move_gain: target cluster is not adjacent to the node");

    const double du = graph_.degree(u);
    const double wuu = graph_.self_weight(u);
    const double wi = cluster_internal_[from], di = degree_[from];
    const double wj = cluster_internal_[to], dj = degree_[to];
    // Self-loop weight travels with the node, so it leaves w(C_i,C_i) and
    // enters w(C_j,C_j) alongside the doubled I/B terms.
    return (wi - 2.0 * internal_to_own_[u] - wuu) / (di - du) +
           (wj + 2.0 * it->second + wuu) / (dj + du) - (wi / di + wj / dj);
}

void RefinementState::apply_move(std::uint32_t u, std::uint32_t to) {
    const std::uint32_t from = labels_[u];
    const double du = graph_.degree(u);
    const double wuu = graph_.self_weight(u);
    const double old_internal = internal_to_own_[u];
    const double old_toward_target = boundary_rows_[u].at(to);

    degree_[from] -= du;
    degree_[to] += du;
    cluster_internal_[from] -= 2.0 * old_internal + wuu;
    cluster_internal_[to] += 2.0 * old_toward_target + wuu;
    --size_[from];
    ++size_[to];
    labels_[u] = to;

    for (const Neighbor& nb : graph_.neighbors(u)) {
        const std::uint32_t v = nb.node;
        if (v == u) continue;
        auto& row = boundary_rows_[v];
        const std::uint32_t cv = labels_[v];
        if (cv == to) {
            internal_to_own_[v] += nb.weight;
            auto it = row.find(from);
            if (it != row.end()) {
                it->second -= nb.weight;
                if (it->second <= 0.0) row.erase(it);
            }
        } else if (cv == from) {
            internal_to_own_[v] -= nb.weight;
            row[to] += nb.weight;
        } else {
            auto it = row.find(from);
            if (it != row.end()) {
                it->second -= nb.weight;
                if (it->second <= 0.0) row.erase(it);
            }
            row[to] += nb.weight;
        }
    }

    auto& own = boundary_rows_[u];
    own.erase(to);
    if (old_internal > 0.0) own[from] = old_internal;
    else own.erase(from);
    internal_to_own_[u] = old_toward_target;
}

std::pair<std::uint32_t, double> RefinementState::sweep() {
    std::uint32_t moves = 0;
    double gain = 0.0;
    for (std::uint32_t u = 0; u < node_count(); ++u) {
        if (!is_boundary(u)) continue;
        const std::uint32_t from = labels_[u];
        if (size_[from] <= 1) continue;
        std::uint32_t best_target = 0;
        double best_gain = kMinGain;
        for (const auto& [target, weight] : boundary_rows_[u]) {
            if (weight <= 0.0) continue;
            double g = move_gain(u, from, target);
            if (g > best_gain) {
                best_gain = g;
                best_target = target;
            }
        }
        if (best_gain > kMinGain) {
            apply_move(u, best_target);
            ++moves;
            gain += best_gain;
        }
    }
    return {moves, gain};
}

RefineResult refine(const WeightedGraph& g, const Partition& p, std::optional<int> max_iters) {
    RefinementState state(g, p);
    int iterations = 0;
    double total_gain = 0.0;
    while (!max_iters || iterations < *max_iters) {
        auto [moves, gain] = state.sweep();
        ++iterations;
        total_gain += gain;
        if (moves == 0) break;
    }
    return {Partition::from_assignment(g, state.labels()), iterations, total_gain};
}

}  // namespace ganc
