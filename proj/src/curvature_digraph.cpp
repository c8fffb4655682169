#include "curv/curvature_digraph.hpp"

#include <algorithm>

namespace curv {

namespace {

void require_directed(const Network& net, const char* op) {
    if (net.kind() != NetworkKind::directed_graph) {
        throw ContractError(std::string(op) + " requires a directed graph, got " +
                            to_string(net.kind()));
    }
}

Rational weight_sum(const Network& net, std::span<const EdgeId> edges) {
    Rational sum{0};
    for (EdgeId e : edges) sum += net.edge(e).weight;
    return sum;
}

// Sites of the in-measure: tails of the in-edges of the edge's tail, or the
// tail itself when it is a source. Distinct in a simple digraph.
std::vector<NodeId> in_sites(const Network& net, const Edge& edge) {
    std::vector<NodeId> sites;
    for (EdgeId f : net.in_edges(edge.tail)) sites.push_back(net.edge(f).tail);
    if (sites.empty()) {
        sites.push_back(edge.tail);
    } else {
        std::sort(sites.begin(), sites.end());
    }
    return sites;
}

std::vector<NodeId> out_sites(const Network& net, const Edge& edge) {
    std::vector<NodeId> sites;
    for (EdgeId f : net.out_edges(edge.head)) sites.push_back(net.edge(f).head);
    if (sites.empty()) {
        sites.push_back(edge.head);
    } else {
        std::sort(sites.begin(), sites.end());
    }
    return sites;
}

} // namespace

Rational forman_directed(const Network& net, EdgeId e) {
    require_directed(net, "forman_directed()");
    const Edge& edge = net.edge(e);
    return 2 * edge.weight - weight_sum(net, net.in_edges(edge.tail)) -
           weight_sum(net, net.out_edges(edge.head));
}

Rational directed_degree_difference(const Network& net, EdgeId e) {
    require_directed(net, "directed_degree_difference()");
    const Edge& edge = net.edge(e);
    return weight_sum(net, net.out_edges(edge.head)) -
           weight_sum(net, net.in_edges(edge.tail));
}

OllivierResult ollivier_directed(const Network& net, EdgeId e) {
    DistanceScratch scratch;
    return ollivier_directed(net, e, scratch);
}

OllivierResult ollivier_directed(const Network& net, EdgeId e, DistanceScratch& scratch) {
    require_directed(net, "ollivier_directed()");
    if (net.weighted()) {
        throw ContractError("ollivier_directed() requires an unweighted graph");
    }
    const Edge& edge = net.edge(e);

    OllivierResult result;
    result.supply_sites = in_sites(net, edge);
    result.demand_sites = out_sites(net, edge);
    const std::size_t ns = result.supply_sites.size();
    const std::size_t nd = result.demand_sites.size();

    TransportInstance instance;
    instance.supplies.assign(ns, Rational(1, ns));
    instance.demands.assign(nd, Rational(1, nd));
    instance.costs.resize(ns * nd);
    std::vector<int> row(nd);
    for (std::size_t i = 0; i < ns; ++i) {
        cost_row_directed(net, result.supply_sites[i], result.demand_sites, scratch, row);
        std::copy(row.begin(), row.end(), instance.costs.begin() + i * nd);
    }

    result.plan = solve_transport(instance);
    result.value = 1 - result.plan.total_cost;
    return result;
}

Rational vertex_flow(const Network& net, NodeId v, FlowKind kind) {
    require_directed(net, "vertex_flow()");
    if (v >= net.node_count()) {
        throw ContractError("vertex id " + std::to_string(v) + " out of range");
    }
    DistanceScratch scratch;
    auto value = [&](EdgeId e) {
        return kind == FlowKind::forman ? forman_directed(net, e)
                                        : ollivier_directed(net, e, scratch).value;
    };
    Rational flow{0};
    for (EdgeId e : net.in_edges(v)) flow += value(e);
    for (EdgeId e : net.out_edges(v)) flow -= value(e);
    return flow;
}

} // namespace curv
