#include "curv/curvature_graph.hpp"

#include <algorithm>

namespace curv {

namespace {

void require_undirected(const Network& net, const char* op) {
    if (net.kind() != NetworkKind::undirected_graph) {
        throw ContractError(std::string(op) + " requires an undirected graph, got " +
                            to_string(net.kind()));
    }
}

Rational other_edge_weight_sum(const Network& net, NodeId v, EdgeId e) {
    Rational sum{0};
    for (EdgeId other : net.incident(v)) {
        if (other != e) sum += net.edge(other).weight;
    }
    return sum;
}

// Far endpoints of the edges at v, ascending. Distinct because the graph is
// simple, so the uniform measure on the edge set transfers to them.
std::vector<NodeId> neighborhood_sites(const Network& net, NodeId v) {
    std::vector<NodeId> sites;
    sites.reserve(net.incident(v).size());
    for (EdgeId f : net.incident(v)) {
        const Edge& edge = net.edge(f);
        sites.push_back(edge.tail == v ? edge.head : edge.tail);
    }
    std::sort(sites.begin(), sites.end());
    return sites;
}

} // namespace

Rational forman(const Network& net, EdgeId e) {
    require_undirected(net, "forman()");
    const Edge& edge = net.edge(e);
    return 2 * edge.weight - other_edge_weight_sum(net, edge.tail, e) -
           other_edge_weight_sum(net, edge.head, e);
}

Rational degree_difference(const Network& net, EdgeId e) {
    require_undirected(net, "degree_difference()");
    const Edge& edge = net.edge(e);
    return abs(other_edge_weight_sum(net, edge.tail, e) -
               other_edge_weight_sum(net, edge.head, e));
}

OllivierResult ollivier(const Network& net, EdgeId e) {
    DistanceScratch scratch;
    return ollivier(net, e, scratch);
}

OllivierResult ollivier(const Network& net, EdgeId e, DistanceScratch& scratch) {
    require_undirected(net, "ollivier()");
    if (net.weighted()) {
        throw ContractError("ollivier() requires an unweighted graph");
    }
    const Edge& edge = net.edge(e);

    OllivierResult result;
    result.supply_sites = neighborhood_sites(net, edge.tail);
    result.demand_sites = neighborhood_sites(net, edge.head);
    const std::size_t ns = result.supply_sites.size();
    const std::size_t nd = result.demand_sites.size();

    TransportInstance instance;
    instance.supplies.assign(ns, Rational(1, ns));
    instance.demands.assign(nd, Rational(1, nd));
    instance.costs.resize(ns * nd);
    // Distances are symmetric, so search from whichever side needs fewer
    // sweeps; hub endpoints make this matter.
    if (ns <= nd) {
        std::vector<int> row(nd);
        for (std::size_t i = 0; i < ns; ++i) {
            cost_row_undirected(net, result.supply_sites[i], result.demand_sites, scratch, row);
            std::copy(row.begin(), row.end(), instance.costs.begin() + i * nd);
        }
    } else {
        std::vector<int> column(ns);
        for (std::size_t j = 0; j < nd; ++j) {
            cost_row_undirected(net, result.demand_sites[j], result.supply_sites, scratch,
                                column);
            for (std::size_t i = 0; i < ns; ++i) instance.costs[i * nd + j] = column[i];
        }
    }

    result.plan = solve_transport(instance);
    result.value = 1 - result.plan.total_cost;
    return result;
}

} // namespace curv
