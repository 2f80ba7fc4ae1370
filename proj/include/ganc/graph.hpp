#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ganc/error.hpp"

namespace ganc {

// Bijection between external node tokens (arbitrary strings) and dense
// internal ids 0..n-1, assigned in first-appearance order.
class NodeIdMap {
public:
    std::uint32_t intern(std::string_view token);
    std::optional<std::uint32_t> find(std::string_view token) const;
    const std::string& token(std::uint32_t id) const { return tokens_.at(id); }
    std::uint32_t size() const { return static_cast<std::uint32_t>(tokens_.size()); }

private:
    std::vector<std::string> tokens_;
    std::unordered_map<std::string, std::uint32_t> ids_;
};

struct Edge {
    std::uint32_t u = 0;
    std::uint32_t v = 0;
    double weight = 1.0;
};

struct Neighbor {
    std::uint32_t node;
    double weight;
};

// Immutable undirected weighted graph. Adjacency rows are sorted by neighbor
// id; a self-loop appears once in its own row. Degrees d(u) are accumulated
// over each row in storage order, so recomputing them is bit-reproducible.
// Safe to share across threads once constructed.
class WeightedGraph {
public:
    WeightedGraph() = default;

    // Accumulates duplicate pairs, drops zero-weight pairs, stores both
    // orientations. Rejects negative weights.
    static WeightedGraph from_edges(std::uint32_t node_count, std::span<const Edge> edges);

    std::uint32_t node_count() const { return static_cast<std::uint32_t>(offsets_.size()) - 1; }
    std::size_t edge_count() const { return edge_count_; }
    double total_weight() const { return total_weight_; }

    double degree(std::uint32_t u) const { return degrees_[u]; }
    double self_weight(std::uint32_t u) const { return self_weights_[u]; }
    std::span<const Neighbor> neighbors(std::uint32_t u) const {
        return {adjacency_.data() + offsets_[u], adjacency_.data() + offsets_[u + 1]};
    }
    // O(log deg) lookup; 0 when the pair is absent.
    double weight(std::uint32_t u, std::uint32_t v) const;

    bool has_isolated_node() const;

private:
    std::vector<std::size_t> offsets_;   // n+1 row offsets
    std::vector<Neighbor> adjacency_;
    std::vector<double> degrees_;
    std::vector<double> self_weights_;
    double total_weight_ = 0.0;
    std::size_t edge_count_ = 0;  // unordered pairs with nonzero weight, self-loops included
};

struct LoadOptions {
    bool weighted = false;     // parse a third column as the edge weight
    bool symmetrize = false;   // accept directed input; orientations accumulate either way
    bool keep_isolated = false;  // skip the zero-degree rejection (largest-component path)
};

struct LoadedGraph {
    WeightedGraph graph;
    NodeIdMap ids;
};

// Parses whitespace-delimited "u v" / "u v w" lines; '#' starts a comment
// line. Duplicate pairs (in either orientation) have their weights summed.
// Throws InputError with a line number on malformed lines or negative
// weights, and rejects zero-degree nodes unless keep_isolated is set.
LoadedGraph load_edge_list(std::istream& in, const LoadOptions& opts = {});

// Canonical serialization: one "u v w" line per unordered pair, u <= v by
// id, rows in ascending id order, round-trip weight formatting. Reloading
// the output reproduces the graph exactly.
void write_edge_list(std::ostream& out, const WeightedGraph& g, const NodeIdMap& ids);

int connected_component_count(const WeightedGraph& g);

struct ComponentExtraction {
    WeightedGraph graph;
    std::vector<std::uint32_t> kept;  // new id -> old id, ascending
};

// Subgraph induced on the largest connected component; size ties go to the
// component containing the smallest node id.
ComponentExtraction largest_connected_component(const WeightedGraph& g);

// Token map for an extracted subgraph, composing the original map with the
// kept-node renumbering.
NodeIdMap remap_tokens(const NodeIdMap& ids, const std::vector<std::uint32_t>& kept);

// Token map "0", "1", ..., for graphs born without external labels.
NodeIdMap numeric_tokens(std::uint32_t node_count);

}  // namespace ganc
