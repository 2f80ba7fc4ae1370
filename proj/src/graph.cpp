#include "ganc/graph.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <unordered_map>

namespace ganc {

std::uint32_t NodeIdMap::intern(std::string_view token) {
    auto it = ids_.find(std::string(token));
    if (it != ids_.end()) return it->second;
    auto id = static_cast<std::uint32_t>(tokens_.size());
    tokens_.emplace_back(token);
    ids_.emplace(tokens_.back(), id);
    return id;
}

std::optional<std::uint32_t> NodeIdMap::find(std::string_view token) const {
    auto it = ids_.find(std::string(token));
    if (it == ids_.end()) return std::nullopt;
    return it->second;
}

namespace {

inline std::uint64_t pair_key(std::uint32_t u, std::uint32_t v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

}  // namespace

WeightedGraph WeightedGraph::from_edges(std::uint32_t node_count, std::span<const Edge> edges) {
    if (node_count == 0) throw InputError("graph has no nodes");

    std::unordered_map<std::uint64_t, double> acc;
    acc.reserve(edges.size());
    for (const Edge& e : edges) {
        if (e.u >= node_count || e.v >= node_count)
            throw InternalError("edge endpoint out of range");
        if (!(e.weight >= 0.0))
            throw InputError("negative or non-finite edge weight");
        acc[pair_key(e.u, e.v)] += e.weight;
    }

    std::vector<std::uint32_t> row_sizes(node_count, 0);
    std::size_t stored = 0;
    for (const auto& [key, w] : acc) {
        if (w == 0.0) continue;
        auto u = static_cast<std::uint32_t>(key >> 32);
        auto v = static_cast<std::uint32_t>(key & 0xffffffffu);
        ++row_sizes[u];
        if (u != v) ++row_sizes[v];
        stored += (u == v) ? 1 : 2;
    }

    WeightedGraph g;
    g.offsets_.assign(node_count + 1, 0);
    for (std::uint32_t u = 0; u < node_count; ++u)
        g.offsets_[u + 1] = g.offsets_[u] + row_sizes[u];
    g.adjacency_.resize(stored);

    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    g.edge_count_ = 0;
    for (const auto& [key, w] : acc) {
        if (w == 0.0) continue;
        auto u = static_cast<std::uint32_t>(key >> 32);
        auto v = static_cast<std::uint32_t>(key & 0xffffffffu);
        g.adjacency_[cursor[u]++] = {v, w};
        if (u != v) g.adjacency_[cursor[v]++] = {u, w};
        ++g.edge_count_;
    }

    for (std::uint32_t u = 0; u < node_count; ++u) {
        auto row = std::span<Neighbor>(g.adjacency_.data() + g.offsets_[u],
                                       g.adjacency_.data() + g.offsets_[u + 1]);
        std::sort(row.begin(), row.end(),
                  [](const Neighbor& a, const Neighbor& b) { return a.node < b.node; });
    }

    // Degrees summed over each sorted row; M over rows in id order.
    g.degrees_.assign(node_count, 0.0);
    g.self_weights_.assign(node_count, 0.0);
    g.total_weight_ = 0.0;
    for (std::uint32_t u = 0; u < node_count; ++u) {
        double d = 0.0;
        for (const Neighbor& nb : g.neighbors(u)) {
            d += nb.weight;
            if (nb.node == u) g.self_weights_[u] = nb.weight;
        }
        g.degrees_[u] = d;
        g.total_weight_ += d;
    }
    return g;
}

double WeightedGraph::weight(std::uint32_t u, std::uint32_t v) const {
    auto row = neighbors(u);
    auto it = std::lower_bound(row.begin(), row.end(), v,
                               [](const Neighbor& a, std::uint32_t id) { return a.node < id; });
    if (it != row.end() && it->node == v) return it->weight;
    return 0.0;
}

bool WeightedGraph::has_isolated_node() const {
    for (std::uint32_t u = 0; u < node_count(); ++u)
        if (offsets_[u] == offsets_[u + 1]) return true;
    return false;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

double parse_weight(std::string_view tok, std::size_t line_no) {
    std::string buf(tok);
    char* end = nullptr;
    double w = std::strtod(buf.c_str(), &end);
    if (end != buf.c_str() + buf.size() || !std::isfinite(w))
        throw InputError("line " + std::to_string(line_no) + ": malformed weight '" + buf + "'");
    if (w < 0.0)
        throw InputError("line " + std::to_string(line_no) + ": negative weight " + buf);
    return w;
}

}  // namespace

LoadedGraph load_edge_list(std::istream& in, const LoadOptions& opts) {
    NodeIdMap ids;
    std::vector<Edge> edges;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto fields = split_ws(line);
        if (fields.empty() || fields[0].front() == '#') continue;
        if (fields.size() < 2 || fields.size() > 3)
            throw InputError("line " + std::to_string(line_no) +
                             ": expected 'u v' or 'u v w', got " + std::to_string(fields.size()) +
                             " fields");
        if (fields.size() == 3 && !opts.weighted)
            throw InputError("line " + std::to_string(line_no) +
                             ": weight column present but input not declared weighted");
        double w = 1.0;
        if (fields.size() == 3) w = parse_weight(fields[2], line_no);
        std::uint32_t u = ids.intern(fields[0]);
        std::uint32_t v = ids.intern(fields[1]);
        edges.push_back({u, v, w});
    }
    if (ids.size() == 0) throw InputError("edge list is empty");

    LoadedGraph out{WeightedGraph::from_edges(ids.size(), edges), std::move(ids)};
    if (!opts.keep_isolated && out.graph.has_isolated_node()) {
        for (std::uint32_t u = 0; u < out.graph.node_count(); ++u)
            if (out.graph.neighbors(u).empty())
                throw InputError("node '" + out.ids.token(u) +
                                 "' has zero degree; normalized association is undefined for "
                                 "isolated nodes");
    }
    return out;
}

namespace {

std::string format_roundtrip(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace

void write_edge_list(std::ostream& out, const WeightedGraph& g, const NodeIdMap& ids) {
    for (std::uint32_t u = 0; u < g.node_count(); ++u) {
        for (const Neighbor& nb : g.neighbors(u)) {
            if (nb.node < u) continue;
            out << ids.token(u) << ' ' << ids.token(nb.node);
            if (nb.weight != 1.0) out << ' ' << format_roundtrip(nb.weight);
            out << '\n';
        }
    }
}

namespace {

// Components in order of their smallest node id; returns per-node component
// index.
std::vector<std::uint32_t> label_components(const WeightedGraph& g, std::uint32_t& count) {
    const std::uint32_t n = g.node_count();
    std::vector<std::uint32_t> comp(n, UINT32_MAX);
    std::vector<std::uint32_t> stack;
    count = 0;
    for (std::uint32_t seed = 0; seed < n; ++seed) {
        if (comp[seed] != UINT32_MAX) continue;
        comp[seed] = count;
        stack.push_back(seed);
        while (!stack.empty()) {
            std::uint32_t u = stack.back();
            stack.pop_back();
            for (const Neighbor& nb : g.neighbors(u)) {
                if (comp[nb.node] == UINT32_MAX) {
                    comp[nb.node] = count;
                    stack.push_back(nb.node);
                }
            }
        }
        ++count;
    }
    return comp;
}

}  // namespace

int connected_component_count(const WeightedGraph& g) {
    std::uint32_t count = 0;
    label_components(g, count);
    return static_cast<int>(count);
}

ComponentExtraction largest_connected_component(const WeightedGraph& g) {
    std::uint32_t count = 0;
    auto comp = label_components(g, count);

    std::vector<std::uint32_t> sizes(count, 0);
    for (std::uint32_t c : comp) ++sizes[c];
    // Components are numbered by ascending minimum id, so the first maximum
    // realizes the tie-break.
    std::uint32_t best = 0;
    for (std::uint32_t c = 1; c < count; ++c)
        if (sizes[c] > sizes[best]) best = c;

    ComponentExtraction out;
    std::vector<std::int64_t> new_id(g.node_count(), -1);
    for (std::uint32_t u = 0; u < g.node_count(); ++u) {
        if (comp[u] == best) {
            new_id[u] = static_cast<std::int64_t>(out.kept.size());
            out.kept.push_back(u);
        }
    }

    std::vector<Edge> edges;
    for (std::uint32_t u : out.kept) {
        for (const Neighbor& nb : g.neighbors(u)) {
            if (nb.node < u) continue;
            edges.push_back({static_cast<std::uint32_t>(new_id[u]),
                             static_cast<std::uint32_t>(new_id[nb.node]), nb.weight});
        }
    }
    out.graph = WeightedGraph::from_edges(static_cast<std::uint32_t>(out.kept.size()), edges);
    return out;
}

NodeIdMap remap_tokens(const NodeIdMap& ids, const std::vector<std::uint32_t>& kept) {
    NodeIdMap out;
    for (std::uint32_t old_id : kept) out.intern(ids.token(old_id));
    return out;
}

NodeIdMap numeric_tokens(std::uint32_t node_count) {
    NodeIdMap out;
    for (std::uint32_t u = 0; u < node_count; ++u) out.intern(std::to_string(u));
    return out;
}

}  // namespace ganc
