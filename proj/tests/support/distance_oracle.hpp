#pragma once

#include "curv/network.hpp"

#include <cstddef>
#include <deque>
#include <vector>

// Uncapped breadth-first distances, written against the public incidence
// accessors only. The production code truncates its searches; these oracles
// never do, so they certify that truncation loses nothing where it matters.
namespace testsupport {

inline constexpr int unreachable = -1;

// Hop distance from u to v; follows arc direction on digraphs and ignores it
// on undirected graphs.
inline int full_graph_distance(const curv::Network& net, curv::NodeId u,
                               curv::NodeId v) {
    if (u == v) return 0;
    std::vector<int> dist(net.node_count(), unreachable);
    dist[u] = 0;
    std::deque<curv::NodeId> queue{u};
    while (!queue.empty()) {
        const curv::NodeId x = queue.front();
        queue.pop_front();
        const auto step = [&](curv::NodeId y) {
            if (dist[y] != unreachable) return;
            dist[y] = dist[x] + 1;
            queue.push_back(y);
        };
        if (net.kind() == curv::NetworkKind::undirected_graph) {
            for (const curv::EdgeId e : net.incident(x)) {
                const curv::Edge& edge = net.edge(e);
                step(edge.tail == x ? edge.head : edge.tail);
            }
        } else {
            for (const curv::EdgeId e : net.out_edges(x)) step(net.edge(e).head);
        }
        if (dist[v] != unreachable) return dist[v];
    }
    return dist[v];
}

// Hop distance from u to v through directed hyperedges: one hop goes from any
// tail vertex to any head vertex of the same hyperedge.
inline int full_hyper_distance(const curv::Network& net, curv::NodeId u,
                               curv::NodeId v) {
    if (u == v) return 0;
    std::vector<int> dist(net.node_count(), unreachable);
    dist[u] = 0;
    std::deque<curv::NodeId> queue{u};
    while (!queue.empty()) {
        const curv::NodeId x = queue.front();
        queue.pop_front();
        for (const curv::EdgeId e : net.tail_of(x)) {
            for (const curv::NodeId y : net.hyperedge(e).head) {
                if (dist[y] != unreachable) continue;
                dist[y] = dist[x] + 1;
                queue.push_back(y);
                if (y == v) return dist[v];
            }
        }
    }
    return dist[v];
}

} // namespace testsupport
