#pragma once

#include "curv/rational.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace curv {

// Hop distances feeding the transport kernel are truncated at this value, so
// unit costs live in {0, 1, 2, 3} and a plan decomposes into four mass
// buckets.
inline constexpr int max_transport_cost = 3;

// A transportation problem between two probability distributions given by
// their positive masses; costs are row-major over supply x demand pairs.
struct TransportInstance {
    std::vector<Rational> supplies;
    std::vector<Rational> demands;
    std::vector<int> costs;

    int cost(std::size_t i, std::size_t j) const { return costs[i * demands.size() + j]; }
};

struct PlanEntry {
    std::size_t supply = 0;
    std::size_t demand = 0;
    Rational amount;
};

// Optimal plan: entries carry positive mass and are sorted by (supply,
// demand); total_cost is the transport distance; mass_at_distance[d] sums
// the mass moved at unit cost d, so the buckets add up to 1 and
// sum(d * mass_at_distance[d]) equals total_cost.
struct TransportPlan {
    std::vector<PlanEntry> entries;
    Rational total_cost;
    std::array<Rational, max_transport_cost + 1> mass_at_distance{};
};

// Exact minimum-cost transport by successive shortest paths on the
// lcm-scaled integer instance. Requires both mass vectors to be non-empty,
// strictly positive, and to sum to exactly 1, and every cost to lie in
// [0, max_transport_cost]; violations raise ContractError. Deterministic:
// the same instance always yields the identical plan.
TransportPlan solve_transport(const TransportInstance& instance);

} // namespace curv
