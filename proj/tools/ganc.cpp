// Command-line driver: edge-list ingestion, greedy agglomeration, curvature
// model selection, boundary refinement, metrics reporting, benchmark
// generation, and the brute-force oracle.

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ganc/agglomerate.hpp"
#include "ganc/io.hpp"
#include "ganc/metrics.hpp"
#include "ganc/model_select.hpp"
#include "ganc/refine.hpp"
#include "ganc/testkit.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitInternal = 4;

struct RunConfig {
    std::string input;
    bool weighted = false;
    bool symmetrize = false;
    bool largest_component = false;

    std::optional<std::uint32_t> fixed_k;
    bool auto_k = false;
    std::string k_range;  // "MIN:MAX"

    bool no_refine = false;
    std::optional<int> max_refine_iters;
    bool refined_curvature = false;

    std::string truth_path;
    std::string partition_out;
    std::string dendrogram_out;
    std::string curvature_out;
    std::string nassoc_out;
    std::string metrics_out;
};

std::pair<std::uint32_t, std::uint32_t> parse_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw ganc::InputError("expected a range MIN:MAX, got '" + text + "'");
    try {
        unsigned long lo = std::stoul(text.substr(0, colon));
        unsigned long hi = std::stoul(text.substr(colon + 1));
        return {static_cast<std::uint32_t>(lo), static_cast<std::uint32_t>(hi)};
    } catch (const std::exception&) {
        throw ganc::InputError("expected a range MIN:MAX, got '" + text + "'");
    }
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ganc::InputError("cannot open '" + path + "'");
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ganc::InputError("cannot write '" + path + "'");
    return out;
}

void require_distinct_paths(const RunConfig& cfg) {
    std::set<std::string> used;
    for (const std::string* p : {&cfg.partition_out, &cfg.dendrogram_out, &cfg.curvature_out,
                                 &cfg.nassoc_out, &cfg.metrics_out}) {
        if (p->empty()) continue;
        if (!used.insert(*p).second)
            throw ganc::InputError("output path '" + *p + "' is used more than once");
    }
}

ganc::LoadedGraph load_for_run(const RunConfig& cfg) {
    auto in = open_input(cfg.input);
    ganc::LoadOptions opts;
    opts.weighted = cfg.weighted;
    opts.symmetrize = cfg.symmetrize;
    opts.keep_isolated = cfg.largest_component;
    ganc::LoadedGraph loaded = ganc::load_edge_list(in, opts);
    if (cfg.largest_component) {
        auto extraction = ganc::largest_connected_component(loaded.graph);
        ganc::NodeIdMap sub_ids = ganc::remap_tokens(loaded.ids, extraction.kept);
        loaded = {std::move(extraction.graph), std::move(sub_ids)};
        if (loaded.graph.has_isolated_node())
            throw ganc::InputError("largest component is a single isolated node");
    }
    return loaded;
}

void emit_metrics(const RunConfig& cfg, const ganc::MetricsReport& report) {
    const std::string json = ganc::metrics_to_json(report);
    if (cfg.metrics_out.empty()) {
        std::cout << json;
    } else {
        auto out = open_output(cfg.metrics_out);
        out << json;
    }
}

std::optional<ganc::Partition> load_truth(const RunConfig& cfg, const ganc::WeightedGraph& g,
                                          const ganc::NodeIdMap& ids) {
    if (cfg.truth_path.empty()) return std::nullopt;
    auto in = open_input(cfg.truth_path);
    return ganc::read_partition(in, g, ids, /*allow_extra_nodes=*/true);
}

int run_cluster(const RunConfig& cfg) {
    require_distinct_paths(cfg);
    const int modes = (cfg.fixed_k ? 1 : 0) + (cfg.auto_k ? 1 : 0) + (cfg.k_range.empty() ? 0 : 1);
    if (modes != 1)
        throw ganc::InputError("exactly one of --k, --auto, --k-range must be given");
    if (cfg.refined_curvature && cfg.k_range.empty())
        throw ganc::InputError("--refined-curvature requires --k-range to bound the refined levels");

    ganc::LoadedGraph loaded = load_for_run(cfg);
    const ganc::WeightedGraph& g = loaded.graph;
    if (!cfg.largest_component && ganc::connected_component_count(g) != 1)
        throw ganc::InputError(
            "input graph is disconnected; pass --largest-component to cluster the largest "
            "connected component");
    std::cerr << "graph: n=" << g.node_count() << " m=" << g.edge_count() << "\n";

    const ganc::Dendrogram dendrogram = ganc::build_dendrogram(g);

    std::optional<ganc::CurvatureProfile> profile;
    std::uint32_t k = 0;
    if (cfg.fixed_k) {
        k = *cfg.fixed_k;
        if (k < 1 || k > g.node_count())
            throw ganc::InfeasibleError("requested k=" + std::to_string(k) + " outside [1, n=" +
                                        std::to_string(g.node_count()) + "]");
        if (!cfg.curvature_out.empty())
            profile = ganc::curvature_profile(dendrogram.nassoc_series());
    } else if (cfg.auto_k) {
        profile = ganc::curvature_profile(dendrogram.nassoc_series());
        k = ganc::select_k(*profile);
    } else {
        auto range = parse_range(cfg.k_range);
        if (cfg.refined_curvature) {
            profile = ganc::refined_curvature(g, dendrogram, range, cfg.max_refine_iters);
            k = ganc::select_k(*profile);
        } else {
            profile = ganc::curvature_profile(dendrogram.nassoc_series());
            k = ganc::select_k(*profile, range);
        }
    }
    std::cerr << "clustering at k=" << k << "\n";

    ganc::Partition partition = dendrogram.flat_partition(g, k);
    if (!cfg.no_refine) {
        ganc::RefineResult refined = ganc::refine(g, partition, cfg.max_refine_iters);
        std::cerr << "refinement: " << refined.iterations << " iterations, gain "
                  << refined.total_gain << "\n";
        partition = std::move(refined.partition);
    }

    if (!cfg.partition_out.empty()) {
        auto out = open_output(cfg.partition_out);
        ganc::write_partition(out, partition, loaded.ids);
    }
    if (!cfg.dendrogram_out.empty()) {
        auto out = open_output(cfg.dendrogram_out);
        ganc::write_dendrogram(out, dendrogram);
    }
    if (!cfg.nassoc_out.empty()) {
        auto out = open_output(cfg.nassoc_out);
        ganc::write_nassoc_csv(out, dendrogram);
    }
    if (!cfg.curvature_out.empty()) {
        if (!profile) profile = ganc::curvature_profile(dendrogram.nassoc_series());
        auto out = open_output(cfg.curvature_out);
        ganc::write_curvature_csv(out, *profile);
    }

    auto truth = load_truth(cfg, g, loaded.ids);
    emit_metrics(cfg, ganc::compute_metrics(g, partition, truth ? &*truth : nullptr));
    return kExitOk;
}

int run_metrics(const RunConfig& cfg, const std::string& partition_path) {
    ganc::LoadedGraph loaded = load_for_run(cfg);
    auto pin = open_input(partition_path);
    ganc::Partition partition = ganc::read_partition(pin, loaded.graph, loaded.ids);
    auto truth = load_truth(cfg, loaded.graph, loaded.ids);
    emit_metrics(cfg, ganc::compute_metrics(loaded.graph, partition, truth ? &*truth : nullptr));
    return kExitOk;
}

void write_generated(const ganc::GeneratedGraph& gen, const std::string& out_path,
                     const std::string& truth_path) {
    const ganc::NodeIdMap ids = ganc::numeric_tokens(gen.graph.node_count());
    if (out_path.empty()) {
        ganc::write_edge_list(std::cout, gen.graph, ids);
    } else {
        auto out = open_output(out_path);
        ganc::write_edge_list(out, gen.graph, ids);
    }
    if (!truth_path.empty()) {
        auto out = open_output(truth_path);
        const ganc::Partition truth =
            ganc::Partition::from_assignment(gen.graph, gen.truth.labels);
        ganc::write_partition(out, truth, ids);
    }
}

int run_oracle(const RunConfig& cfg, std::uint32_t k) {
    ganc::LoadedGraph loaded = load_for_run(cfg);
    ganc::OracleResult result = ganc::brute_force_max_nassoc(loaded.graph, k);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", result.nassoc);
    std::cout << "nassoc " << buf << "\n";
    ganc::write_partition(std::cout, result.partition, loaded.ids);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"GANC: greedy agglomerative normalized-cut graph clustering"};
    app.require_subcommand(1);

    RunConfig cfg;

    auto add_input_flags = [&cfg](CLI::App* cmd) {
        cmd->add_option("--input", cfg.input, "edge-list file")->required();
        cmd->add_flag("--weighted", cfg.weighted, "parse a third column as the edge weight");
        cmd->add_flag("--symmetrize", cfg.symmetrize,
                      "accept directed input; reciprocal orientations accumulate");
        cmd->add_flag("--largest-component", cfg.largest_component,
                      "cluster the largest connected component");
    };

    // cluster
    auto* cluster = app.add_subcommand("cluster", "build the hierarchy and emit a partition");
    add_input_flags(cluster);
    std::uint32_t fixed_k_value = 0;
    auto* k_opt = cluster->add_option("--k", fixed_k_value, "cluster into exactly k clusters");
    cluster->add_flag("--auto", cfg.auto_k, "select k at the curvature maximum");
    cluster->add_option("--k-range", cfg.k_range, "select k within MIN:MAX by curvature");
    cluster->add_flag("--no-refine", cfg.no_refine, "skip boundary refinement");
    int max_iters_value = 0;
    auto* iters_opt = cluster->add_option("--max-refine-iters", max_iters_value,
                                          "cap the number of refinement sweeps");
    cluster->add_flag("--refined-curvature", cfg.refined_curvature,
                      "select k from per-level refined NAssoc values (needs --k-range)");
    cluster->add_option("--truth", cfg.truth_path, "ground-truth partition file");
    cluster->add_option("--partition-out", cfg.partition_out, "partition file to write");
    cluster->add_option("--dendrogram-out", cfg.dendrogram_out, "merge list to write");
    cluster->add_option("--curvature-out", cfg.curvature_out, "curvature CSV to write");
    cluster->add_option("--nassoc-out", cfg.nassoc_out, "NAssoc series CSV to write");
    cluster->add_option("--metrics-out", cfg.metrics_out, "metrics JSON file (default: stdout)");

    // metrics
    auto* metrics = app.add_subcommand("metrics", "score an existing partition");
    add_input_flags(metrics);
    std::string partition_path;
    metrics->add_option("--partition", partition_path, "partition file to score")->required();
    metrics->add_option("--truth", cfg.truth_path, "ground-truth partition file");
    metrics->add_option("--metrics-out", cfg.metrics_out, "metrics JSON file (default: stdout)");

    // gen
    auto* gen = app.add_subcommand("gen", "generate a benchmark graph");
    gen->require_subcommand(1);
    std::string gen_out, gen_truth_out;
    std::uint32_t ring_cliques = 24, ring_size = 5;
    auto* gen_ring = gen->add_subcommand("ring", "ring of cliques");
    gen_ring->add_option("--cliques", ring_cliques, "number of cliques");
    gen_ring->add_option("--size", ring_size, "nodes per clique");
    ganc::PlantedParams planted;
    auto* gen_planted = gen->add_subcommand("planted", "planted-partition benchmark");
    gen_planted->add_option("--n", planted.n, "node count")->required();
    gen_planted->add_option("--k", planted.k, "fixed cluster count (alternative to size range)");
    gen_planted->add_option("--c-min", planted.c_min, "minimum cluster size");
    gen_planted->add_option("--c-max", planted.c_max, "maximum cluster size");
    gen_planted->add_option("--mu", planted.mu, "inter-cluster mixing probability");
    gen_planted->add_option("--d-avg", planted.d_avg, "average degree target")->required();
    gen_planted->add_option("--d-max", planted.d_max, "maximum degree")->required();
    gen_planted->add_option("--seed", planted.seed, "RNG seed");
    auto* gen_chains = gen->add_subcommand("chains", "two disjoint 4-node chains");
    for (CLI::App* sub : {gen_ring, gen_planted, gen_chains}) {
        sub->add_option("--out", gen_out, "edge-list file (default: stdout)");
        sub->add_option("--truth-out", gen_truth_out, "ground-truth partition file");
    }

    // oracle
    auto* oracle = app.add_subcommand("oracle", "brute-force max-NAssoc partition (n <= 12)");
    add_input_flags(oracle);
    std::uint32_t oracle_k = 0;
    oracle->add_option("--k", oracle_k, "number of clusters")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*cluster) {
            if (*k_opt) cfg.fixed_k = fixed_k_value;
            if (*iters_opt) cfg.max_refine_iters = max_iters_value;
            return run_cluster(cfg);
        }
        if (*metrics) return run_metrics(cfg, partition_path);
        if (*gen) {
            if (*gen_ring) {
                write_generated(ganc::ring_of_cliques(ring_cliques, ring_size), gen_out,
                                gen_truth_out);
            } else if (*gen_planted) {
                if (planted.k == 0 && planted.c_min == 0)
                    throw ganc::InputError("gen planted: give either --k or --c-min/--c-max");
                write_generated(ganc::planted_partition(planted), gen_out, gen_truth_out);
            } else {
                write_generated(ganc::two_chains(), gen_out, gen_truth_out);
            }
            return kExitOk;
        }
        if (*oracle) return run_oracle(cfg, oracle_k);
        return kExitInput;
    } catch (const ganc::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const ganc::InfeasibleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const ganc::Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
