#include "ganc/testkit.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <unordered_set>

namespace ganc {

namespace {

// Thin deterministic wrapper; the distributions in <random> are not pinned
// by the standard, and generator output must be reproducible byte for byte.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
    return rng() % bound;
}

inline std::uint64_t pair_key(std::uint32_t u, std::uint32_t v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

}  // namespace

GeneratedGraph ring_of_cliques(std::uint32_t num_cliques, std::uint32_t clique_size) {
    if (num_cliques < 3) throw InfeasibleError("ring_of_cliques needs at least 3 cliques");
    if (clique_size < 2) throw InfeasibleError("ring_of_cliques needs cliques of at least 2 nodes");

    const std::uint32_t n = num_cliques * clique_size;
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(num_cliques) * clique_size * (clique_size - 1) / 2 +
                  num_cliques);
    GroundTruth truth;
    truth.k = num_cliques;
    truth.labels.resize(n);

    for (std::uint32_t c = 0; c < num_cliques; ++c) {
        const std::uint32_t start = c * clique_size;
        for (std::uint32_t i = 0; i < clique_size; ++i) {
            truth.labels[start + i] = c;
            for (std::uint32_t j = i + 1; j < clique_size; ++j)
                edges.push_back({start + i, start + j, 1.0});
        }
        const std::uint32_t bridge_from = start + clique_size - 1;
        const std::uint32_t bridge_to = ((c + 1) % num_cliques) * clique_size;
        edges.push_back({bridge_from, bridge_to, 1.0});
    }
    return {WeightedGraph::from_edges(n, edges), std::move(truth)};
}

GeneratedGraph two_chains() {
    std::vector<Edge> edges;
    for (std::uint32_t u : {0u, 1u, 2u}) edges.push_back({u, u + 1, 1.0});
    for (std::uint32_t u : {4u, 5u, 6u}) edges.push_back({u, u + 1, 1.0});
    GroundTruth truth;
    truth.k = 2;
    truth.labels = {0, 0, 0, 0, 1, 1, 1, 1};
    return {WeightedGraph::from_edges(8, edges), std::move(truth)};
}

namespace {

std::vector<std::uint32_t> draw_cluster_sizes(const PlantedParams& p, std::mt19937_64& rng) {
    if (p.k > 0) {
        if (p.k > p.n) throw InfeasibleError("planted_partition: k exceeds n");
        std::vector<std::uint32_t> sizes(p.k, p.n / p.k);
        for (std::uint32_t i = 0; i < p.n % p.k; ++i) ++sizes[i];
        return sizes;
    }
    if (p.c_min < 1 || p.c_min > p.c_max || p.c_min > p.n)
        throw InfeasibleError("planted_partition: infeasible size range");
    // r splits into sizes from [c_min, c_max] iff ceil(r/c_max) <= floor(r/c_min)
    auto splittable = [&](std::uint32_t r) {
        return r == 0 || (r + p.c_max - 1) / p.c_max <= r / p.c_min;
    };
    if (!splittable(p.n))
        throw InfeasibleError("planted_partition: n cannot be split within the size range");
    std::vector<std::uint32_t> sizes;
    std::uint32_t remaining = p.n;
    while (remaining > 0) {
        const std::uint32_t hi = std::min(p.c_max, remaining);
        auto s = static_cast<std::uint32_t>(p.c_min + draw_below(rng, hi - p.c_min + 1));
        if (!splittable(remaining - s)) {
            // nudge to the nearest draw that leaves a splittable remainder
            std::uint32_t chosen = 0;
            for (std::uint32_t t = s; t <= hi && chosen == 0; ++t)
                if (splittable(remaining - t)) chosen = t;
            for (std::uint32_t t = s; t-- > p.c_min && chosen == 0;)
                if (splittable(remaining - t)) chosen = t;
            if (chosen == 0)
                throw InternalError("planted_partition: size split search failed");
            s = chosen;
        }
        sizes.push_back(s);
        remaining -= s;
    }
    return sizes;
}

}  // namespace

GeneratedGraph planted_partition(const PlantedParams& params) {
    if (params.n < 2) throw InfeasibleError("planted_partition: need at least 2 nodes");
    if (params.mu < 0.0 || params.mu >= 1.0)
        throw InfeasibleError("planted_partition: mu must lie in [0, 1)");
    if (params.d_max < 1 || params.d_avg < 1)
        throw InfeasibleError("planted_partition: degree parameters must be positive");

    std::mt19937_64 rng(params.seed);
    const auto sizes = draw_cluster_sizes(params, rng);
    const auto k = static_cast<std::uint32_t>(sizes.size());

    GroundTruth truth;
    truth.k = k;
    truth.params = params;
    truth.labels.resize(params.n);
    std::vector<std::uint32_t> cluster_start(k);
    {
        std::uint32_t at = 0;
        for (std::uint32_t c = 0; c < k; ++c) {
            cluster_start[c] = at;
            for (std::uint32_t i = 0; i < sizes[c]; ++i) truth.labels[at + i] = c;
            at += sizes[c];
        }
    }

    const std::uint32_t lo = params.d_avg > 5 ? params.d_avg - 5 : 1;
    const std::uint32_t hi = std::max(lo, std::min(params.d_avg + 5, params.d_max));
    std::vector<std::uint32_t> target(params.n);
    for (auto& t : target) t = static_cast<std::uint32_t>(lo + draw_below(rng, hi - lo + 1));

    // Each endpoint is intra-cluster with probability 1-mu: node u gets
    // round((1-mu) * t(u)) internal stubs, capped at its cluster size - 1 the
    // way LFR relieves infeasible internal degrees; the rest pair across
    // clusters. Stubs are shuffled and paired like a configuration model,
    // with clashing pairs re-shuffled for a few rounds and then dropped.
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(params.n) * params.d_avg / 2);
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(edges.capacity() * 2);
    std::vector<std::uint32_t> deg(params.n, 0);

    auto shuffle = [&](std::vector<std::uint32_t>& items) {
        for (std::size_t i = items.size(); i > 1; --i)
            std::swap(items[i - 1], items[draw_below(rng, i)]);
    };
    auto pair_stubs = [&](std::vector<std::uint32_t> stubs, bool must_cross) {
        constexpr int kRounds = 20;
        for (int round = 0; round < kRounds && stubs.size() >= 2; ++round) {
            shuffle(stubs);
            if (stubs.size() % 2 == 1) stubs.pop_back();
            std::vector<std::uint32_t> rejected;
            for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
                const std::uint32_t u = stubs[i], v = stubs[i + 1];
                if (u == v || (must_cross && truth.labels[u] == truth.labels[v]) ||
                    !seen.insert(pair_key(u, v)).second) {
                    rejected.push_back(u);
                    rejected.push_back(v);
                    continue;
                }
                edges.push_back({u, v, 1.0});
                ++deg[u];
                ++deg[v];
            }
            stubs = std::move(rejected);
        }
    };

    std::vector<std::uint32_t> internal_stubs(params.n);
    for (std::uint32_t u = 0; u < params.n; ++u) {
        const std::uint32_t cap = sizes[truth.labels[u]] - 1;
        const auto want =
            static_cast<std::uint32_t>(std::lround((1.0 - params.mu) * target[u]));
        internal_stubs[u] = std::min(want, cap);
    }
    for (std::uint32_t c = 0; c < k; ++c) {
        std::vector<std::uint32_t> stubs;
        for (std::uint32_t i = 0; i < sizes[c]; ++i) {
            const std::uint32_t u = cluster_start[c] + i;
            stubs.insert(stubs.end(), internal_stubs[u], u);
        }
        pair_stubs(std::move(stubs), /*must_cross=*/false);
    }
    if (params.mu > 0.0) {  // at mu = 0 a binding cap truncates rather than spills
        std::vector<std::uint32_t> stubs;
        for (std::uint32_t u = 0; u < params.n; ++u)
            stubs.insert(stubs.end(), target[u] - internal_stubs[u], u);
        pair_stubs(std::move(stubs), /*must_cross=*/true);
    }

    // A starved node would be rejected downstream; wire it to the first free
    // slot in its own cluster, then anywhere.
    for (std::uint32_t u = 0; u < params.n; ++u) {
        if (deg[u] > 0) continue;
        const std::uint32_t c = truth.labels[u];
        auto try_link = [&](std::uint32_t v) {
            if (v == u) return false;
            if (!seen.insert(pair_key(u, v)).second) return false;
            edges.push_back({u, v, 1.0});
            ++deg[u];
            ++deg[v];
            return true;
        };
        bool ok = false;
        for (std::uint32_t i = 0; i < sizes[c] && !ok; ++i) ok = try_link(cluster_start[c] + i);
        for (std::uint32_t v = 0; v < params.n && !ok; ++v) ok = try_link(v);
    }

    return {WeightedGraph::from_edges(params.n, edges), std::move(truth)};
}

namespace {

// Walks restricted-growth strings with exactly k blocks in lexicographic
// order, evaluating NAssoc once per complete assignment.
class OracleSearch {
public:
    OracleSearch(const WeightedGraph& g, std::uint32_t k)
        : graph_(g), k_(k), n_(g.node_count()), assignment_(n_, 0),
          degree_(k, 0.0), internal_(k, 0.0) {}

    void run() {
        descend(0, 0);
        if (best_.empty()) throw InternalError("oracle found no partition");
    }

    std::vector<std::uint32_t> best_assignment() const { return best_; }
    double best_value() const { return best_value_; }

private:
    void descend(std::uint32_t pos, std::uint32_t used) {
        if (pos == n_) {
            if (used == k_) consider();
            return;
        }
        if (used + (n_ - pos) < k_) return;  // cannot reach k blocks anymore
        const std::uint32_t limit = std::min(used, k_ - 1);
        for (std::uint32_t c = 0; c <= limit; ++c) {
            assignment_[pos] = c;
            descend(pos + 1, std::max(used, c + 1));
        }
    }

    void consider() {
        std::fill(degree_.begin(), degree_.end(), 0.0);
        std::fill(internal_.begin(), internal_.end(), 0.0);
        // Accumulation mirrors Partition::from_assignment so the reported
        // value equals nassoc() of the returned partition bit for bit.
        for (std::uint32_t u = 0; u < n_; ++u) {
            const std::uint32_t c = assignment_[u];
            degree_[c] += graph_.degree(u);
            double internal = 0.0;
            for (const Neighbor& nb : graph_.neighbors(u))
                if (assignment_[nb.node] == c) internal += nb.weight;
            internal_[c] += internal;
        }
        double value = 0.0;
        for (std::uint32_t c = 0; c < k_; ++c) value += internal_[c] / degree_[c];
        if (best_.empty() || value > best_value_) {
            best_value_ = value;
            best_ = assignment_;
        }
    }

    const WeightedGraph& graph_;
    const std::uint32_t k_;
    const std::uint32_t n_;
    std::vector<std::uint32_t> assignment_;
    std::vector<double> degree_;
    std::vector<double> internal_;
    std::vector<std::uint32_t> best_;
    double best_value_ = 0.0;
};

}  // namespace

OracleResult brute_force_max_nassoc(const WeightedGraph& g, std::uint32_t k) {
    if (g.node_count() > 12)
        throw InfeasibleError("brute-force oracle is limited to n <= 12, got n=" +
                              std::to_string(g.node_count()));
    if (k < 1 || k > g.node_count())
        throw InfeasibleError("oracle: k=" + std::to_string(k) + " outside [1, n]");
    if (g.has_isolated_node())
        throw InputError("oracle: graph has an isolated node");

    OracleSearch search(g, k);
    search.run();
    return {Partition::from_assignment(g, search.best_assignment()), search.best_value()};
}

}  // namespace ganc
