#include "curv/curvature_hypergraph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace curv {

namespace {

void require_hypergraph(const Network& net, const char* op) {
    if (net.kind() != NetworkKind::directed_hypergraph) {
        throw ContractError(std::string(op) + " requires a directed hypergraph, got " +
                            to_string(net.kind()));
    }
}

// The two measure sides are mirror images; this builds either one.
// near_side(f) is the side of a neighbor hyperedge f that touches the
// evaluated side of e, far_side(f) the side the split measure lands on.
MassHoleMeasure build_measure(const Network& net, EdgeId e, MeasureSide side,
                              const HyperOptions& options) {
    const Hyperedge& he = net.hyperedge(e);
    const std::vector<NodeId>& own = side == MeasureSide::in ? he.tail : he.head;
    if (own.empty()) {
        throw ContractError(std::string(side == MeasureSide::in ? "in_measure()"
                                                                : "out_measure()") +
                            ": hyperedge " + std::to_string(e) + " has an empty " +
                            (side == MeasureSide::in ? "tail" : "head") +
                            ", Ollivier curvature is undefined");
    }
    auto neighbors_at = [&](NodeId v) {
        return side == MeasureSide::in ? net.head_of(v) : net.tail_of(v);
    };
    auto far_side = [&](EdgeId f) -> const std::vector<NodeId>& {
        return side == MeasureSide::in ? net.hyperedge(f).tail : net.hyperedge(f).head;
    };

    MassHoleMeasure measure;
    measure.side = side;
    std::map<NodeId, Rational> atoms;
    std::vector<NodeId> reached;
    const Rational share{1, own.size()};

    for (NodeId v : own) {
        std::vector<EdgeId> splitters;
        for (EdgeId f : neighbors_at(v)) {
            if (f == e && !options.include_self_incidence) continue;
            if (far_side(f).empty()) continue; // nowhere to put the split mass
            splitters.push_back(f);
        }
        if (splitters.empty()) {
            atoms[v] += share;
            measure.sources_or_sinks.push_back(v);
            continue;
        }
        const Rational per_edge = share / splitters.size();
        for (EdgeId f : splitters) {
            const std::vector<NodeId>& landing = far_side(f);
            const Rational per_vertex = per_edge / landing.size();
            for (NodeId u : landing) {
                atoms[u] += per_vertex;
                reached.push_back(u);
            }
        }
    }

    std::sort(reached.begin(), reached.end());
    reached.erase(std::unique(reached.begin(), reached.end()), reached.end());
    measure.masses_or_holes = std::move(reached);
    measure.atoms.assign(atoms.begin(), atoms.end());

    Rational total{0};
    for (const auto& [vertex, mass] : measure.atoms) total += mass;
    if (total != 1) {
        throw std::logic_error("measure atoms sum to " + format_rational(total) +
                               " instead of 1");
    }
    return measure;
}

} // namespace

MassHoleMeasure in_measure(const Network& net, EdgeId e, const HyperOptions& options) {
    require_hypergraph(net, "in_measure()");
    return build_measure(net, e, MeasureSide::in, options);
}

MassHoleMeasure out_measure(const Network& net, EdgeId e, const HyperOptions& options) {
    require_hypergraph(net, "out_measure()");
    return build_measure(net, e, MeasureSide::out, options);
}

int hyper_distance(const Network& net, NodeId u, NodeId v) {
    require_hypergraph(net, "hyper_distance()");
    if (u >= net.node_count() || v >= net.node_count()) {
        throw ContractError("hyper_distance() vertex out of range");
    }
    if (u == v) return 0;

    DistanceScratch scratch;
    scratch.prepare(net.node_count());
    scratch.visit(u, 0);
    scratch.frontier.push_back(u);
    for (std::uint8_t depth = 1; depth <= max_transport_cost; ++depth) {
        scratch.next.clear();
        for (NodeId x : scratch.frontier) {
            for (EdgeId f : net.tail_of(x)) {
                for (NodeId y : net.hyperedge(f).head) {
                    if (y == v) return depth;
                    if (scratch.visit(y, depth)) scratch.next.push_back(y);
                }
            }
        }
        std::swap(scratch.frontier, scratch.next);
        if (scratch.frontier.empty()) break;
    }
    throw ContractError("no directed hyperedge chain of length <= " +
                        std::to_string(max_transport_cost) + " from vertex " +
                        std::to_string(u) + " to vertex " + std::to_string(v));
}

namespace {

// deg_in (side == in) or deg_out (side == out) with multiplicity: a
// neighbor hyperedge counts once, with its weight, per vertex of the
// evaluated side it touches.
Rational hyper_degree(const Network& net, EdgeId e, MeasureSide side,
                      const HyperOptions& options) {
    const Hyperedge& he = net.hyperedge(e);
    const std::vector<NodeId>& own = side == MeasureSide::in ? he.tail : he.head;
    Rational sum{0};
    for (NodeId v : own) {
        const auto neighbors = side == MeasureSide::in ? net.head_of(v) : net.tail_of(v);
        for (EdgeId f : neighbors) {
            if (f == e && !options.include_self_incidence) continue;
            sum += net.hyperedge(f).weight;
        }
    }
    return sum;
}

} // namespace

Rational forman_hyper(const Network& net, EdgeId e, const HyperOptions& options) {
    require_hypergraph(net, "forman_hyper()");
    const Hyperedge& he = net.hyperedge(e);
    return he.weight * static_cast<long>(he.tail.size() + he.head.size()) -
           hyper_degree(net, e, MeasureSide::in, options) -
           hyper_degree(net, e, MeasureSide::out, options);
}

Rational degree_difference_hyper(const Network& net, EdgeId e, const HyperOptions& options) {
    require_hypergraph(net, "degree_difference_hyper()");
    return hyper_degree(net, e, MeasureSide::out, options) -
           hyper_degree(net, e, MeasureSide::in, options);
}

HyperOllivierResult ollivier_hyper(const Network& net, EdgeId e, const HyperOptions& options) {
    DistanceScratch scratch;
    return ollivier_hyper(net, e, scratch, options);
}

HyperOllivierResult ollivier_hyper(const Network& net, EdgeId e, DistanceScratch& scratch,
                                   const HyperOptions& options) {
    require_hypergraph(net, "ollivier_hyper()");
    if (net.weighted()) {
        throw ContractError("ollivier_hyper() requires an unweighted hypergraph");
    }

    HyperOllivierResult result;
    result.in = in_measure(net, e, options);
    result.out = out_measure(net, e, options);
    const std::size_t ns = result.in.atoms.size();
    const std::size_t nd = result.out.atoms.size();

    TransportInstance instance;
    instance.supplies.reserve(ns);
    instance.demands.reserve(nd);
    std::vector<NodeId> supply_sites;
    std::vector<NodeId> demand_sites;
    for (const auto& [vertex, mass] : result.in.atoms) {
        supply_sites.push_back(vertex);
        instance.supplies.push_back(mass);
    }
    for (const auto& [vertex, mass] : result.out.atoms) {
        demand_sites.push_back(vertex);
        instance.demands.push_back(mass);
    }

    instance.costs.resize(ns * nd);
    std::vector<int> row(nd);
    for (std::size_t i = 0; i < ns; ++i) {
        cost_row_hyper(net, supply_sites[i], demand_sites, scratch, row);
        std::copy(row.begin(), row.end(), instance.costs.begin() + i * nd);
    }

    result.plan = solve_transport(instance);
    result.value = 1 - result.plan.total_cost;
    return result;
}

} // namespace curv
