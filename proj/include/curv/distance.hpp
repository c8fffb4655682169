#pragma once

#include "curv/network.hpp"
#include "curv/transport.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace curv {

// Costs are hop distances truncated at max_transport_cost. Between the
// supports of the measures attached to one edge the true distance never
// exceeds it (both supports sit within one step of the edge, which bridges
// them), so the truncation is exact where it matters.

// Reusable per-worker BFS state; epoch stamping avoids clearing between
// calls. Not shared across threads.
class DistanceScratch {
public:
    void prepare(std::size_t node_count);

    bool visit(NodeId v, std::uint8_t d) {
        if (stamp_[v] == epoch_) return false;
        stamp_[v] = epoch_;
        dist_[v] = d;
        return true;
    }
    bool seen(NodeId v) const { return stamp_[v] == epoch_; }
    std::uint8_t dist(NodeId v) const { return dist_[v]; }

    std::vector<NodeId> frontier;
    std::vector<NodeId> next;

private:
    std::vector<std::uint32_t> stamp_;
    std::vector<std::uint8_t> dist_;
    std::uint32_t epoch_ = 0;
};

// Each fills row[j] = min(d(source, targets[j]), max_transport_cost), where d
// counts undirected hops, directed hops, or directed hyperedge steps (one
// step walks from a tail vertex of a hyperedge to any of its head vertices).
void cost_row_undirected(const Network& net, NodeId source, std::span<const NodeId> targets,
                         DistanceScratch& scratch, std::span<int> row);
void cost_row_directed(const Network& net, NodeId source, std::span<const NodeId> targets,
                       DistanceScratch& scratch, std::span<int> row);
void cost_row_hyper(const Network& net, NodeId source, std::span<const NodeId> targets,
                    DistanceScratch& scratch, std::span<int> row);

// Shared result shape for the graph curvature operations: the curvature
// value 1 - W1 together with the optimal plan and the vertex sites the
// plan's supply/demand indexes refer to.
struct OllivierResult {
    Rational value;
    TransportPlan plan;
    std::vector<NodeId> supply_sites;
    std::vector<NodeId> demand_sites;
};

} // namespace curv
