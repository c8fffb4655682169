#pragma once

#include "curv/distance.hpp"
#include "curv/network.hpp"
#include "curv/transport.hpp"

namespace curv {

// Edge measures for undirected graphs. Degrees are counted without the edge
// under evaluation itself; in weighted mode every count becomes a weight sum
// and the Forman constant becomes 2 * weight(e).

// 2*w(e) - sum of weights of the other edges at either endpoint.
Rational forman(const Network& net, EdgeId e);

// Absolute difference of the two endpoint sums above.
Rational degree_difference(const Network& net, EdgeId e);

// 1 - W1 between the uniform measures on the two endpoint neighborhoods.
// Each edge at endpoint v contributes its far endpoint with mass
// 1/degree(v); the evaluated edge itself contributes the opposite endpoint.
// Costs are shortest-path distances between far endpoints. Unweighted
// graphs only.
OllivierResult ollivier(const Network& net, EdgeId e);
OllivierResult ollivier(const Network& net, EdgeId e, DistanceScratch& scratch);

} // namespace curv
