#include "curv/distance.hpp"

#include <limits>

namespace curv {

void DistanceScratch::prepare(std::size_t node_count) {
    if (stamp_.size() < node_count) {
        stamp_.resize(node_count, 0);
        dist_.resize(node_count, 0);
    }
    if (epoch_ == std::numeric_limits<std::uint32_t>::max()) {
        std::fill(stamp_.begin(), stamp_.end(), 0);
        epoch_ = 0;
    }
    ++epoch_;
    frontier.clear();
    next.clear();
}

namespace {

// Bounded BFS: marks every vertex within max_transport_cost - 1 steps of the
// source, then reads the targets off the scratch. Anything unmarked is at
// least max_transport_cost away.
template <typename Expand>
void cost_row(const Network& net, NodeId source, std::span<const NodeId> targets,
              DistanceScratch& scratch, std::span<int> row, Expand expand) {
    scratch.prepare(net.node_count());
    scratch.visit(source, 0);
    scratch.frontier.push_back(source);

    for (std::uint8_t depth = 1; depth < max_transport_cost; ++depth) {
        scratch.next.clear();
        for (NodeId u : scratch.frontier) {
            expand(u, [&](NodeId v) {
                if (scratch.visit(v, depth)) scratch.next.push_back(v);
            });
        }
        std::swap(scratch.frontier, scratch.next);
        if (scratch.frontier.empty()) break;
    }

    for (std::size_t j = 0; j < targets.size(); ++j) {
        row[j] = scratch.seen(targets[j]) ? scratch.dist(targets[j]) : max_transport_cost;
    }
}

} // namespace

void cost_row_undirected(const Network& net, NodeId source, std::span<const NodeId> targets,
                         DistanceScratch& scratch, std::span<int> row) {
    cost_row(net, source, targets, scratch, row, [&](NodeId u, auto visit) {
        for (EdgeId e : net.incident(u)) {
            const Edge& edge = net.edge(e);
            visit(edge.tail == u ? edge.head : edge.tail);
        }
    });
}

void cost_row_directed(const Network& net, NodeId source, std::span<const NodeId> targets,
                       DistanceScratch& scratch, std::span<int> row) {
    cost_row(net, source, targets, scratch, row, [&](NodeId u, auto visit) {
        for (EdgeId e : net.out_edges(u)) visit(net.edge(e).head);
    });
}

void cost_row_hyper(const Network& net, NodeId source, std::span<const NodeId> targets,
                    DistanceScratch& scratch, std::span<int> row) {
    cost_row(net, source, targets, scratch, row, [&](NodeId u, auto visit) {
        for (EdgeId e : net.tail_of(u)) {
            for (NodeId v : net.hyperedge(e).head) visit(v);
        }
    });
}

} // namespace curv
