#include "ganc/io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "ganc/metrics.hpp"

namespace ganc {

void write_partition(std::ostream& out, const Partition& p, const NodeIdMap& ids) {
    for (std::uint32_t u = 0; u < p.node_count(); ++u)
        out << ids.token(u) << '\t' << p.label(u) << '\n';
}

Partition read_partition(std::istream& in, const WeightedGraph& g, const NodeIdMap& ids,
                         bool allow_extra_nodes) {
    std::vector<std::uint32_t> raw(g.node_count(), UINT32_MAX);
    NodeIdMap cluster_ids;
    std::string line;
    std::size_t line_no = 0;
    std::vector<bool> covered(g.node_count(), false);
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string token, cluster;
        if (!(fields >> token)) continue;
        if (token.front() == '#') continue;
        if (!(fields >> cluster))
            throw InputError("partition line " + std::to_string(line_no) +
                             ": expected 'token cluster'");
        std::string extra;
        if (fields >> extra)
            throw InputError("partition line " + std::to_string(line_no) + ": trailing data");
        auto id = ids.find(token);
        if (!id) {
            if (allow_extra_nodes) continue;
            throw InputError("partition line " + std::to_string(line_no) + ": unknown node '" +
                             token + "'");
        }
        if (covered[*id])
            throw InputError("partition line " + std::to_string(line_no) + ": duplicate node '" +
                             token + "'");
        covered[*id] = true;
        raw[*id] = cluster_ids.intern(cluster);
    }
    for (std::uint32_t u = 0; u < g.node_count(); ++u)
        if (!covered[u])
            throw InputError("partition is missing node '" + ids.token(u) + "'");
    return Partition::from_assignment(g, Partition::compact_labels(raw));
}

MetricsReport compute_metrics(const WeightedGraph& g, const Partition& p, const Partition* truth) {
    MetricsReport r;
    r.k = p.cluster_count();
    r.nassoc = nassoc(g, p);
    r.nassoc_per_cluster = r.nassoc / static_cast<double>(r.k);
    r.ncut = ncut(g, p);
    r.modularity = modularity(g, p);
    if (truth) r.jaccard_vs_truth = jaccard_index(p, *truth);
    return r;
}

namespace {

std::string format_sig12(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

}  // namespace

std::string metrics_to_json(const MetricsReport& r) {
    std::string out = "{\n";
    out += "  \"k\": " + std::to_string(r.k) + ",\n";
    out += "  \"nassoc\": " + format_sig12(r.nassoc) + ",\n";
    out += "  \"nassoc_per_cluster\": " + format_sig12(r.nassoc_per_cluster) + ",\n";
    out += "  \"ncut\": " + format_sig12(r.ncut) + ",\n";
    out += "  \"modularity\": " + format_sig12(r.modularity);
    if (r.jaccard_vs_truth) {
        out += ",\n  \"jaccard_vs_truth\": " + format_sig12(*r.jaccard_vs_truth);
    }
    out += "\n}\n";
    return out;
}

}  // namespace ganc
