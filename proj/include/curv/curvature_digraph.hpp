#pragma once

#include "curv/distance.hpp"
#include "curv/network.hpp"
#include "curv/transport.hpp"

namespace curv {

// Edge measures for directed graphs. For an edge e = (v, w), deg_in(e)
// counts the edges that end at the tail v and deg_out(e) the edges that
// start at the head w; weighted mode sums weights instead.

// 2*w(e) - deg_in(e) - deg_out(e).
Rational forman_directed(const Network& net, EdgeId e);

// deg_out(e) - deg_in(e), signed: positive for edges that emit more than
// they receive.
Rational directed_degree_difference(const Network& net, EdgeId e);

// 1 - W1 between the uniform measure on the in-edges of the tail and the
// uniform measure on the out-edges of the head. A tail with no in-edges
// (source) puts all mass on e itself, likewise a sink head. The cost
// between two edges is the directed hop distance from the first one's tail
// to the second one's head. Unweighted graphs only.
OllivierResult ollivier_directed(const Network& net, EdgeId e);
OllivierResult ollivier_directed(const Network& net, EdgeId e, DistanceScratch& scratch);

enum class FlowKind { forman, ollivier };

// Sum of the selected curvature over the edges into v minus the sum over
// the edges out of v.
Rational vertex_flow(const Network& net, NodeId v, FlowKind kind);

} // namespace curv
