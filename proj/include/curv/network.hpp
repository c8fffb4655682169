#pragma once

#include "curv/errors.hpp"
#include "curv/rational.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace curv {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

enum class NetworkKind { undirected_graph, directed_graph, directed_hypergraph };

const char* to_string(NetworkKind kind);

// For undirected networks tail/head is just the stored endpoint order.
struct Edge {
    NodeId tail = 0;
    NodeId head = 0;
    Rational weight{1};
};

// tail = input vertices (educts), head = output vertices (products).
// Sides are kept sorted and duplicate-free; they may overlap (catalysts are
// counted on both sides) but are never both empty.
struct Hyperedge {
    std::vector<NodeId> tail;
    std::vector<NodeId> head;
    Rational weight{1};
    std::string label;
};

// Immutable once constructed; incidence indexes are built in the factory and
// the object is safe for concurrent read access from many workers.
class Network {
public:
    static Network undirected(std::vector<std::string> labels, std::vector<Edge> edges,
                              bool weighted = false);
    static Network directed(std::vector<std::string> labels, std::vector<Edge> edges,
                            bool weighted = false);
    static Network hypergraph(std::vector<std::string> labels, std::vector<Hyperedge> edges,
                              bool weighted = false);

    NetworkKind kind() const { return kind_; }
    bool weighted() const { return weighted_; }
    bool is_graph() const { return kind_ != NetworkKind::directed_hypergraph; }

    std::size_t node_count() const { return labels_.size(); }
    std::size_t edge_count() const {
        return is_graph() ? edges_.size() : hyperedges_.size();
    }

    const std::string& label(NodeId v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }

    const Edge& edge(EdgeId e) const;
    const Hyperedge& hyperedge(EdgeId e) const;
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Hyperedge>& hyperedges() const { return hyperedges_; }

    // Undirected incidence: every edge touching v, in edge-id order.
    std::span<const EdgeId> incident(NodeId v) const;
    // Directed graphs: edges with head v / tail v.
    std::span<const EdgeId> in_edges(NodeId v) const;
    std::span<const EdgeId> out_edges(NodeId v) const;
    // Hypergraphs: hyperedges with v in their tail set / head set.
    std::span<const EdgeId> tail_of(NodeId v) const;
    std::span<const EdgeId> head_of(NodeId v) const;

    std::size_t degree(NodeId v) const;

    // Rebuilds all incidence indexes from the edge list and compares.
    bool check_incidence() const;

private:
    Network() = default;

    void build_graph_incidence();
    void build_hypergraph_incidence();

    NetworkKind kind_ = NetworkKind::undirected_graph;
    bool weighted_ = false;
    std::vector<std::string> labels_;
    std::vector<Edge> edges_;
    std::vector<Hyperedge> hyperedges_;

    std::vector<std::vector<EdgeId>> incident_; // undirected
    std::vector<std::vector<EdgeId>> in_;       // directed: head == v
    std::vector<std::vector<EdgeId>> out_;      // directed: tail == v
    std::vector<std::vector<EdgeId>> tail_of_;  // hypergraph: v in tail set
    std::vector<std::vector<EdgeId>> head_of_;  // hypergraph: v in head set
};

// Induced subnetwork on the largest weakly-connected vertex set (undirected
// reachability also for directed graphs). Labels are preserved, ids are
// re-densified in ascending original-id order; ties go to the component with
// the smallest minimum original id. Errors on hypergraphs and empty networks.
Network largest_component(const Network& net);

} // namespace curv
