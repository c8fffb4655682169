#pragma once

#include "curv/curvature_hypergraph.hpp"
#include "curv/network.hpp"
#include "curv/rational.hpp"
#include "curv/transport.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace curv {

struct MeasureSelection {
    bool forman = true;
    bool degree_difference = true;
    bool ollivier = true;
};

struct OllivierSummary {
    Rational value;
    Rational w1;
    std::array<Rational, max_transport_cost + 1> mass_at_distance{};
    // Sizes of the precursor/derivative sets; hypergraphs only, 0 for
    // graphs.
    std::size_t n_masses = 0;
    std::size_t n_holes = 0;

    bool operator==(const OllivierSummary&) const = default;
};

// One edge (or hyperedge) with the selected measures. Graph edges get
// label "u--v" (undirected) or "u->v" (directed) and tail/head size 1;
// hyperedges carry their own label and side sizes. ollivier stays empty
// for hyperedges with an empty tail or head, where it is undefined.
struct CurvatureRecord {
    EdgeId edge = 0;
    std::string label;
    std::size_t tail_size = 1;
    std::size_t head_size = 1;
    std::optional<Rational> forman;
    std::optional<Rational> degree_difference;
    std::optional<OllivierSummary> ollivier;

    bool operator==(const CurvatureRecord&) const = default;
};

struct BatchOptions {
    MeasureSelection measures;
    int threads = 1;
    HyperOptions hyper;
};

// Records for every edge in input order. Requesting Ollivier on a weighted
// network raises ContractError. The parallel version partitions edges over
// OpenMP workers and produces output identical to the serial reference for
// any thread count.
std::vector<CurvatureRecord> compute_records(const Network& net, const BatchOptions& options);
std::vector<CurvatureRecord> compute_records_serial(const Network& net,
                                                    const BatchOptions& options);

} // namespace curv
