#include "curv/cli.hpp"

#include "CLI11.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

int default_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

struct Flags {
    std::string input;
    std::string output_dir = "out";
    bool weighted = false;
    bool split_reversible = false;
    bool giant_component = false;
    bool include_self_incidence = false;
    std::vector<std::string> measures;
    int threads = default_threads();
    std::string bin_width;
    std::string ollivier_bin_width;
};

void add_common_options(CLI::App& cmd, Flags& flags) {
    cmd.add_option("input", flags.input, "Input network file")->required();
    cmd.add_option("-o,--output-dir", flags.output_dir,
                   "Directory for edges.csv, summary.txt and histograms")
        ->capture_default_str();
    cmd.add_option("--measures", flags.measures,
                   "Measures to compute: forman, ddiff, ollivier")
        ->delimiter(',');
    cmd.add_option("--threads", flags.threads, "Worker threads")->capture_default_str();
    cmd.add_option("--bin-width", flags.bin_width,
                   "Histogram bin width for forman/ddiff (rational, default 1)");
    cmd.add_option("--ollivier-bin-width", flags.ollivier_bin_width,
                   "Histogram bin width for ollivier (rational, default 1/20)");
}

bool select_measures(const Flags& flags, curv::MeasureSelection& selection) {
    if (flags.measures.empty()) {
        // Ollivier is defined for unweighted networks only; the weighted
        // default leaves it out instead of failing.
        selection = {true, true, !flags.weighted};
        return true;
    }
    selection = {false, false, false};
    for (const std::string& name : flags.measures) {
        if (name == "forman") {
            selection.forman = true;
        } else if (name == "ddiff") {
            selection.degree_difference = true;
        } else if (name == "ollivier") {
            selection.ollivier = true;
        } else {
            std::cerr << "parse error: unknown measure '" << name
                      << "' (expected forman, ddiff, ollivier)\n";
            return false;
        }
    }
    return true;
}

bool parse_width(const std::string& text, const char* flag,
                 std::optional<curv::Rational>& width) {
    if (text.empty()) return true;
    try {
        width = curv::parse_rational(text);
    } catch (const std::invalid_argument&) {
        std::cerr << "parse error: " << flag << " wants a rational number, got '" << text
                  << "'\n";
        return false;
    }
    return true;
}

int run_subcommand(curv::NetworkKind kind, const Flags& flags) {
    curv::RunConfig config;
    config.kind = kind;
    config.input_path = flags.input;
    config.output_dir = flags.output_dir;
    config.weighted = flags.weighted;
    config.split_reversible = flags.split_reversible;
    config.giant_component = flags.giant_component;
    config.include_self_incidence = flags.include_self_incidence;
    config.threads = flags.threads;
    if (!select_measures(flags, config.measures)) return 1;
    if (!parse_width(flags.bin_width, "--bin-width", config.bin_width)) return 1;
    if (!parse_width(flags.ollivier_bin_width, "--ollivier-bin-width",
                     config.ollivier_bin_width)) {
        return 1;
    }
    return curv::run(config);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Edge curvature measures for graphs, digraphs and directed hypergraphs"};
    app.require_subcommand(1);

    Flags graph_flags;
    CLI::App* graph = app.add_subcommand("graph", "Undirected edge list");
    add_common_options(*graph, graph_flags);
    graph->add_flag("--weighted", graph_flags.weighted, "Third column holds edge weights");
    graph->add_flag("--giant-component", graph_flags.giant_component,
                    "Restrict to the largest connected component");

    Flags digraph_flags;
    CLI::App* digraph = app.add_subcommand("digraph", "Directed edge list");
    add_common_options(*digraph, digraph_flags);
    digraph->add_flag("--weighted", digraph_flags.weighted, "Third column holds edge weights");
    digraph->add_flag("--giant-component", digraph_flags.giant_component,
                      "Restrict to the largest weakly connected component");

    Flags hyper_flags;
    CLI::App* hyper = app.add_subcommand("hypergraph", "Directed hyperedge list");
    add_common_options(*hyper, hyper_flags);
    hyper->add_flag("--split-reversible", hyper_flags.split_reversible,
                    "Store 'a <-> b' lines as a forward and a reverse hyperedge");
    hyper->add_flag("--include-self-incidence", hyper_flags.include_self_incidence,
                    "Count a hyperedge as its own neighbor where tail and head overlap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& error) {
        const int code = app.exit(error);
        return code == 0 ? 0 : 1;
    }

    if (graph->parsed()) return run_subcommand(curv::NetworkKind::undirected_graph, graph_flags);
    if (digraph->parsed()) {
        return run_subcommand(curv::NetworkKind::directed_graph, digraph_flags);
    }
    return run_subcommand(curv::NetworkKind::directed_hypergraph, hyper_flags);
}
