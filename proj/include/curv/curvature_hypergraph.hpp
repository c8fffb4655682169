#pragma once

#include "curv/distance.hpp"
#include "curv/network.hpp"
#include "curv/transport.hpp"

#include <utility>
#include <vector>

namespace curv {

struct HyperOptions {
    // When true, a hyperedge overlapping its own tail or head (catalysts)
    // counts toward its own degrees and takes part in its own measure
    // splitting. Off by default: a hyperedge is not its own neighbor.
    bool include_self_incidence = false;
};

enum class MeasureSide { in, out };

// One side of the probability measure pair attached to a hyperedge. The
// unit mass is split evenly over the tail (resp. head) vertices; a vertex
// with no incoming (resp. outgoing) hyperedges keeps its share directly,
// otherwise the share is split evenly over those hyperedges and then again
// over each one's tail (resp. head) vertices.
struct MassHoleMeasure {
    MeasureSide side = MeasureSide::in;
    // (vertex, accumulated mass), ascending by vertex, masses positive and
    // summing to exactly 1.
    std::vector<std::pair<NodeId, Rational>> atoms;
    // Tail (resp. head) vertices whose share stayed put, ascending.
    std::vector<NodeId> sources_or_sinks;
    // Vertices reached by the two-stage split, ascending: the precursors
    // (resp. derivatives) of the hyperedge.
    std::vector<NodeId> masses_or_holes;
};

MassHoleMeasure in_measure(const Network& net, EdgeId e, const HyperOptions& options = {});
MassHoleMeasure out_measure(const Network& net, EdgeId e, const HyperOptions& options = {});

// Minimal number of directed hyperedge steps from u to v (one step goes
// from a tail vertex to any head vertex of one hyperedge). Only defined up
// to max_transport_cost; between an in-measure and an out-measure atom of
// one hyperedge the cap always suffices, anything farther throws.
int hyper_distance(const Network& net, NodeId u, NodeId v);

// w(e) * (|tail| + |head|) - deg_in(e) - deg_out(e), where deg_in counts
// hyperedges heading into tail vertices and deg_out hyperedges leaving head
// vertices, each counted once per shared vertex (weight sums in weighted
// mode).
Rational forman_hyper(const Network& net, EdgeId e, const HyperOptions& options = {});

// deg_out(e) - deg_in(e), signed, with the same multiplicity counting.
Rational degree_difference_hyper(const Network& net, EdgeId e,
                                 const HyperOptions& options = {});

struct HyperOllivierResult {
    Rational value;
    TransportPlan plan;
    MassHoleMeasure in;  // plan supply indexes refer to in.atoms
    MassHoleMeasure out; // plan demand indexes refer to out.atoms
};

// 1 - W1 between in_measure and out_measure with hyper_distance costs.
// Requires both the tail and the head to be non-empty. Unweighted
// hypergraphs only.
HyperOllivierResult ollivier_hyper(const Network& net, EdgeId e,
                                   const HyperOptions& options = {});
HyperOllivierResult ollivier_hyper(const Network& net, EdgeId e, DistanceScratch& scratch,
                                   const HyperOptions& options = {});

} // namespace curv
