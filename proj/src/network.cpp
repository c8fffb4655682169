#include "curv/network.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace curv {

const char* to_string(NetworkKind kind) {
    switch (kind) {
    case NetworkKind::undirected_graph: return "undirected graph";
    case NetworkKind::directed_graph: return "directed graph";
    case NetworkKind::directed_hypergraph: return "directed hypergraph";
    }
    return "unknown";
}

namespace {

void check_edge_weight(const Rational& w, std::size_t index) {
    if (w <= 0) {
        throw ContractError("edge " + std::to_string(index) + " has non-positive weight " +
                            format_rational(w));
    }
}

void validate_graph_edges(const std::vector<Edge>& edges, std::size_t n, bool undirected) {
    std::set<std::pair<NodeId, NodeId>> seen;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = edges[i];
        if (e.tail >= n || e.head >= n) {
            throw ContractError("edge " + std::to_string(i) + " references vertex beyond " +
                                std::to_string(n) + " nodes");
        }
        if (e.tail == e.head) {
            throw ContractError("edge " + std::to_string(i) + " is a self-loop");
        }
        check_edge_weight(e.weight, i);
        std::pair<NodeId, NodeId> key{e.tail, e.head};
        if (undirected && key.first > key.second) std::swap(key.first, key.second);
        if (!seen.insert(key).second) {
            throw ContractError("edge " + std::to_string(i) + " duplicates an earlier edge");
        }
    }
}

void validate_hyperedges(const std::vector<Hyperedge>& edges, std::size_t n) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Hyperedge& e = edges[i];
        if (e.tail.empty() && e.head.empty()) {
            throw ContractError("hyperedge " + std::to_string(i) + " has empty tail and head");
        }
        check_edge_weight(e.weight, i);
        for (const auto* side : {&e.tail, &e.head}) {
            for (NodeId v : *side) {
                if (v >= n) {
                    throw ContractError("hyperedge " + std::to_string(i) +
                                        " references vertex beyond " + std::to_string(n) +
                                        " nodes");
                }
            }
            if (!std::is_sorted(side->begin(), side->end())) {
                throw ContractError("hyperedge " + std::to_string(i) + " side is not sorted");
            }
            if (std::adjacent_find(side->begin(), side->end()) != side->end()) {
                throw ContractError("hyperedge " + std::to_string(i) +
                                    " repeats a vertex within one side");
            }
        }
    }
}

} // namespace

Network Network::undirected(std::vector<std::string> labels, std::vector<Edge> edges,
                            bool weighted) {
    validate_graph_edges(edges, labels.size(), /*undirected=*/true);
    Network net;
    net.kind_ = NetworkKind::undirected_graph;
    net.weighted_ = weighted;
    net.labels_ = std::move(labels);
    net.edges_ = std::move(edges);
    net.build_graph_incidence();
    return net;
}

Network Network::directed(std::vector<std::string> labels, std::vector<Edge> edges,
                          bool weighted) {
    validate_graph_edges(edges, labels.size(), /*undirected=*/false);
    Network net;
    net.kind_ = NetworkKind::directed_graph;
    net.weighted_ = weighted;
    net.labels_ = std::move(labels);
    net.edges_ = std::move(edges);
    net.build_graph_incidence();
    return net;
}

Network Network::hypergraph(std::vector<std::string> labels, std::vector<Hyperedge> edges,
                            bool weighted) {
    validate_hyperedges(edges, labels.size());
    Network net;
    net.kind_ = NetworkKind::directed_hypergraph;
    net.weighted_ = weighted;
    net.labels_ = std::move(labels);
    net.hyperedges_ = std::move(edges);
    net.build_hypergraph_incidence();
    return net;
}

const Edge& Network::edge(EdgeId e) const {
    if (!is_graph() || e >= edges_.size()) {
        throw ContractError("edge id " + std::to_string(e) + " out of range");
    }
    return edges_[e];
}

const Hyperedge& Network::hyperedge(EdgeId e) const {
    if (is_graph() || e >= hyperedges_.size()) {
        throw ContractError("hyperedge id " + std::to_string(e) + " out of range");
    }
    return hyperedges_[e];
}

std::span<const EdgeId> Network::incident(NodeId v) const {
    if (kind_ != NetworkKind::undirected_graph) {
        throw ContractError("incident() requires an undirected graph");
    }
    return incident_[v];
}

std::span<const EdgeId> Network::in_edges(NodeId v) const {
    if (kind_ != NetworkKind::directed_graph) {
        throw ContractError("in_edges() requires a directed graph");
    }
    return in_[v];
}

std::span<const EdgeId> Network::out_edges(NodeId v) const {
    if (kind_ != NetworkKind::directed_graph) {
        throw ContractError("out_edges() requires a directed graph");
    }
    return out_[v];
}

std::span<const EdgeId> Network::tail_of(NodeId v) const {
    if (kind_ != NetworkKind::directed_hypergraph) {
        throw ContractError("tail_of() requires a directed hypergraph");
    }
    return tail_of_[v];
}

std::span<const EdgeId> Network::head_of(NodeId v) const {
    if (kind_ != NetworkKind::directed_hypergraph) {
        throw ContractError("head_of() requires a directed hypergraph");
    }
    return head_of_[v];
}

std::size_t Network::degree(NodeId v) const {
    switch (kind_) {
    case NetworkKind::undirected_graph: return incident_[v].size();
    case NetworkKind::directed_graph: return in_[v].size() + out_[v].size();
    case NetworkKind::directed_hypergraph: return tail_of_[v].size() + head_of_[v].size();
    }
    return 0;
}

void Network::build_graph_incidence() {
    const std::size_t n = labels_.size();
    if (kind_ == NetworkKind::undirected_graph) {
        incident_.assign(n, {});
        for (EdgeId e = 0; e < edges_.size(); ++e) {
            incident_[edges_[e].tail].push_back(e);
            incident_[edges_[e].head].push_back(e);
        }
    } else {
        in_.assign(n, {});
        out_.assign(n, {});
        for (EdgeId e = 0; e < edges_.size(); ++e) {
            out_[edges_[e].tail].push_back(e);
            in_[edges_[e].head].push_back(e);
        }
    }
}

void Network::build_hypergraph_incidence() {
    const std::size_t n = labels_.size();
    tail_of_.assign(n, {});
    head_of_.assign(n, {});
    for (EdgeId e = 0; e < hyperedges_.size(); ++e) {
        for (NodeId v : hyperedges_[e].tail) tail_of_[v].push_back(e);
        for (NodeId v : hyperedges_[e].head) head_of_[v].push_back(e);
    }
}

bool Network::check_incidence() const {
    Network rebuilt;
    rebuilt.kind_ = kind_;
    rebuilt.labels_ = labels_;
    if (is_graph()) {
        rebuilt.edges_ = edges_;
        rebuilt.build_graph_incidence();
        return rebuilt.incident_ == incident_ && rebuilt.in_ == in_ && rebuilt.out_ == out_;
    }
    rebuilt.hyperedges_ = hyperedges_;
    rebuilt.build_hypergraph_incidence();
    return rebuilt.tail_of_ == tail_of_ && rebuilt.head_of_ == head_of_;
}

Network largest_component(const Network& net) {
    if (!net.is_graph()) {
        throw ContractError("largest_component() requires a graph");
    }
    const std::size_t n = net.node_count();
    if (n == 0) {
        throw ContractError("largest_component() requires a non-empty network");
    }

    // Union endpoints ignoring direction.
    std::vector<NodeId> parent(n);
    for (NodeId v = 0; v < n; ++v) parent[v] = v;
    auto find = [&](NodeId v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    for (const Edge& e : net.edges()) {
        NodeId a = find(e.tail);
        NodeId b = find(e.head);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }

    std::vector<std::size_t> size(n, 0);
    for (NodeId v = 0; v < n; ++v) ++size[find(v)];
    NodeId best = 0;
    for (NodeId v = 0; v < n; ++v) {
        if (size[v] > size[best]) best = v;
    }

    constexpr NodeId absent = static_cast<NodeId>(-1);
    std::vector<NodeId> remap(n, absent);
    std::vector<std::string> labels;
    labels.reserve(size[best]);
    for (NodeId v = 0; v < n; ++v) {
        if (find(v) == best) {
            remap[v] = static_cast<NodeId>(labels.size());
            labels.push_back(net.label(v));
        }
    }

    std::vector<Edge> edges;
    for (const Edge& e : net.edges()) {
        if (remap[e.tail] != absent) {
            edges.push_back({remap[e.tail], remap[e.head], e.weight});
        }
    }

    if (net.kind() == NetworkKind::undirected_graph) {
        return Network::undirected(std::move(labels), std::move(edges), net.weighted());
    }
    return Network::directed(std::move(labels), std::move(edges), net.weighted());
}

} // namespace curv
