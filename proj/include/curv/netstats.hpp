#pragma once

#include "curv/batch.hpp"
#include "curv/network.hpp"
#include "curv/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace curv {

struct HistogramSpec {
    // Strictly ascending bin edges; at least one bin.
    std::vector<Rational> edges;

    // Bins of the given width covering [lo, hi] (the last bin may overhang).
    static HistogramSpec uniform(const Rational& lo, const Rational& hi,
                                 const Rational& width);
    // Unit-width bins [k, k+1) for k in lo..hi.
    static HistogramSpec integer_range(const BigInt& lo, const BigInt& hi);
};

struct Histogram {
    std::vector<Rational> edges;
    std::vector<std::size_t> counts; // one fewer than edges
    std::size_t underflow = 0;
    std::size_t overflow = 0;
};

// Left-closed right-open bins, except the last bin also takes values equal
// to the top edge. Values outside the range land in underflow/overflow.
Histogram histogram(const std::vector<Rational>& values, const HistogramSpec& spec);

// Pearson degree correlation over edges: for undirected graphs over
// symmetrized (degree(u), degree(v)) endpoint pairs, for directed graphs
// over (out-degree(tail), in-degree(head)) pairs. Moments are accumulated
// exactly and converted to floating point once, so the value is independent
// of edge order. Empty edge set or zero marginal variance -> nullopt
// (undefined).
std::optional<double> assortativity(const Network& net);

struct MeasureStats {
    Rational min;
    Rational max;
    Rational mean;
    Rational median;
};

struct SummaryReport {
    NetworkKind kind = NetworkKind::undirected_graph;
    bool weighted = false;
    std::size_t n_nodes = 0;
    std::size_t n_edges = 0;
    std::optional<std::size_t> component_count;       // graphs only
    std::optional<std::size_t> giant_component_size;  // graphs only
    std::optional<std::size_t> out_degree_gt_100;     // directed only
    std::optional<double> assortativity;              // graphs only, nullopt when undefined
    std::optional<MeasureStats> forman;
    std::optional<MeasureStats> degree_difference;
    std::optional<MeasureStats> ollivier;
};

// Aggregates the records computed for net; records must be the full batch
// in edge order or ContractError is raised.
SummaryReport summarize(const Network& net, const std::vector<CurvatureRecord>& records);

} // namespace curv
