#include "curv/transport.hpp"

#include "curv/errors.hpp"

#include <cstdint>
#include <limits>
#include <queue>
#include <stdexcept>
#include <utility>

namespace curv {

namespace {

void validate(const TransportInstance& instance) {
    const std::size_t ns = instance.supplies.size();
    const std::size_t nd = instance.demands.size();
    if (ns == 0 || nd == 0) {
        throw ContractError("transport instance has an empty side");
    }
    if (instance.costs.size() != ns * nd) {
        throw ContractError("transport cost matrix has " +
                            std::to_string(instance.costs.size()) + " entries, expected " +
                            std::to_string(ns * nd));
    }
    for (int c : instance.costs) {
        if (c < 0 || c > max_transport_cost) {
            throw ContractError("transport cost " + std::to_string(c) + " outside [0, " +
                                std::to_string(max_transport_cost) + "]");
        }
    }
    Rational total_supply{0};
    for (const Rational& s : instance.supplies) {
        if (s <= 0) throw ContractError("transport supply is not positive");
        total_supply += s;
    }
    Rational total_demand{0};
    for (const Rational& d : instance.demands) {
        if (d <= 0) throw ContractError("transport demand is not positive");
        total_demand += d;
    }
    if (total_supply != 1) {
        throw ContractError("transport supplies sum to " + format_rational(total_supply) +
                            ", expected 1");
    }
    if (total_demand != 1) {
        throw ContractError("transport demands sum to " + format_rational(total_demand) +
                            ", expected 1");
    }
}

// Min-cost flow with successive shortest paths and Dijkstra on reduced
// costs. Capacities carry exact integers; unit costs and hence potentials
// stay tiny. Arc scan order and the (distance, node) heap ordering are
// fixed, so the computation is deterministic.
class FlowNetwork {
public:
    explicit FlowNetwork(std::size_t nodes) : adjacency_(nodes) {}

    void add_arc(int from, int to, BigInt cap, int cost) {
        adjacency_[from].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back({to, std::move(cap), cost});
        adjacency_[to].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back({from, BigInt(0), -cost});
    }

    // Pushes flow from source to sink until the source is exhausted.
    void run(int source, int sink) {
        const std::size_t n = adjacency_.size();
        std::vector<std::int64_t> potential(n, 0);
        std::vector<std::int64_t> distance(n);
        std::vector<int> reached_via(n);
        constexpr std::int64_t unreached = std::numeric_limits<std::int64_t>::max();

        while (true) {
            std::fill(distance.begin(), distance.end(), unreached);
            distance[source] = 0;
            using Item = std::pair<std::int64_t, int>;
            std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
            heap.push({0, source});
            while (!heap.empty()) {
                auto [d, u] = heap.top();
                heap.pop();
                if (d != distance[u]) continue;
                for (int id : adjacency_[u]) {
                    const Arc& arc = arcs_[id];
                    if (arc.cap == 0) continue;
                    const std::int64_t nd = d + arc.cost + potential[u] - potential[arc.to];
                    if (nd < distance[arc.to]) {
                        distance[arc.to] = nd;
                        reached_via[arc.to] = id;
                        heap.push({nd, arc.to});
                    }
                }
            }
            if (distance[sink] == unreached) break;
            for (std::size_t v = 0; v < n; ++v) {
                if (distance[v] != unreached) potential[v] += distance[v];
            }

            BigInt push = -1;
            for (int v = sink; v != source; v = arcs_[reached_via[v] ^ 1].to) {
                const BigInt& cap = arcs_[reached_via[v]].cap;
                if (push < 0 || cap < push) push = cap;
            }
            for (int v = sink; v != source; v = arcs_[reached_via[v] ^ 1].to) {
                arcs_[reached_via[v]].cap -= push;
                arcs_[reached_via[v] ^ 1].cap += push;
            }
        }
    }

    // Flow that ended up on the forward arc of pair `pair_index`.
    const BigInt& flow(std::size_t pair_index) const { return arcs_[2 * pair_index + 1].cap; }

private:
    struct Arc {
        int to;
        BigInt cap;
        int cost;
    };

    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> adjacency_;
};

} // namespace

TransportPlan solve_transport(const TransportInstance& instance) {
    validate(instance);
    const std::size_t ns = instance.supplies.size();
    const std::size_t nd = instance.demands.size();

    BigInt scale{1};
    for (const Rational& s : instance.supplies) scale = lcm(scale, denominator(s));
    for (const Rational& d : instance.demands) scale = lcm(scale, denominator(d));

    auto scaled = [&](const Rational& r) { return numerator(r) * (scale / denominator(r)); };

    // Node layout: 0 = source, 1..ns = supplies, ns+1..ns+nd = demands, last
    // = sink. Middle arcs get capacity `scale`, which no single pair can
    // exceed, so only source and sink arcs ever saturate.
    const int source = 0;
    const int sink = static_cast<int>(ns + nd + 1);
    FlowNetwork flow(ns + nd + 2);
    for (std::size_t i = 0; i < ns; ++i) {
        flow.add_arc(source, static_cast<int>(1 + i), scaled(instance.supplies[i]), 0);
    }
    for (std::size_t i = 0; i < ns; ++i) {
        for (std::size_t j = 0; j < nd; ++j) {
            flow.add_arc(static_cast<int>(1 + i), static_cast<int>(1 + ns + j), scale,
                         instance.cost(i, j));
        }
    }
    for (std::size_t j = 0; j < nd; ++j) {
        flow.add_arc(static_cast<int>(1 + ns + j), sink, scaled(instance.demands[j]), 0);
    }
    flow.run(source, sink);

    TransportPlan plan;
    std::vector<BigInt> supply_sent(ns, 0);
    std::vector<BigInt> demand_met(nd, 0);
    for (std::size_t i = 0; i < ns; ++i) {
        for (std::size_t j = 0; j < nd; ++j) {
            const BigInt& moved = flow.flow(ns + i * nd + j);
            if (moved == 0) continue;
            supply_sent[i] += moved;
            demand_met[j] += moved;
            const Rational amount{moved, scale};
            plan.entries.push_back({i, j, amount});
            plan.mass_at_distance[instance.cost(i, j)] += amount;
            plan.total_cost += instance.cost(i, j) * amount;
        }
    }

    for (std::size_t i = 0; i < ns; ++i) {
        if (supply_sent[i] != scaled(instance.supplies[i])) {
            throw std::logic_error("transport plan does not exhaust supply " + std::to_string(i));
        }
    }
    for (std::size_t j = 0; j < nd; ++j) {
        if (demand_met[j] != scaled(instance.demands[j])) {
            throw std::logic_error("transport plan does not meet demand " + std::to_string(j));
        }
    }
    Rational bucket_total{0};
    Rational weighted_total{0};
    for (int d = 0; d <= max_transport_cost; ++d) {
        bucket_total += plan.mass_at_distance[d];
        weighted_total += d * plan.mass_at_distance[d];
    }
    if (bucket_total != 1 || weighted_total != plan.total_cost) {
        throw std::logic_error("transport mass buckets do not add up");
    }
    const Rational identity = plan.mass_at_distance[0] - plan.mass_at_distance[2] -
                              2 * plan.mass_at_distance[3];
    if (identity != 1 - plan.total_cost) {
        throw std::logic_error("transport bucket identity violated");
    }

    return plan;
}

} // namespace curv
