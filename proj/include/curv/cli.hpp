#pragma once

#include "curv/batch.hpp"
#include "curv/network.hpp"
#include "curv/rational.hpp"

#include <optional>
#include <string>

namespace curv {

struct RunConfig {
    NetworkKind kind = NetworkKind::undirected_graph;
    std::string input_path;
    std::string output_dir;
    bool weighted = false;
    bool split_reversible = false;
    bool giant_component = false;
    bool include_self_incidence = false;
    MeasureSelection measures;
    int threads = 1;
    // Overrides for the default histogram binning (unit integer bins for
    // Forman / degree difference, 1/20 on [-2, 1] for Ollivier).
    std::optional<Rational> bin_width;
    std::optional<Rational> ollivier_bin_width;
};

// Reads the input network, computes the selected measures, and writes
// edges.csv, summary.txt, and hist_<measure>.csv into the output directory.
// Output is byte-identical for any thread count. Returns 0 on success, 1 on
// input parse errors, 2 on contract violations (e.g. Ollivier on a weighted
// network), 3 on I/O failures; error text goes to standard error.
int run(const RunConfig& config);

} // namespace curv
