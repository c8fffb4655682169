#include "curv/transport.hpp"

#include "doctest.h"
#include "support/generators.hpp"
#include "support/lp_oracle.hpp"

#include <random>

using namespace curv;

namespace {

// Structural checks every returned plan must satisfy, independent of
// optimality: feasibility, ordering, bucket bookkeeping, and the bucket
// identity that turns a transport distance into a curvature value.
void check_plan_shape(const TransportInstance& instance, const TransportPlan& plan) {
    std::vector<Rational> supply_sent(instance.supplies.size(), 0);
    std::vector<Rational> demand_met(instance.demands.size(), 0);
    Rational cost = 0;
    for (std::size_t k = 0; k < plan.entries.size(); ++k) {
        const PlanEntry& entry = plan.entries[k];
        REQUIRE(entry.supply < instance.supplies.size());
        REQUIRE(entry.demand < instance.demands.size());
        CHECK(entry.amount > 0);
        if (k > 0) {
            const PlanEntry& prev = plan.entries[k - 1];
            CHECK((prev.supply < entry.supply ||
                   (prev.supply == entry.supply && prev.demand < entry.demand)));
        }
        supply_sent[entry.supply] += entry.amount;
        demand_met[entry.demand] += entry.amount;
        cost += entry.amount * instance.cost(entry.supply, entry.demand);
    }
    CHECK(supply_sent == instance.supplies);
    CHECK(demand_met == instance.demands);
    CHECK(cost == plan.total_cost);

    Rational bucket_total = 0;
    Rational bucket_cost = 0;
    for (int d = 0; d <= max_transport_cost; ++d) {
        CHECK(plan.mass_at_distance[d] >= 0);
        bucket_total += plan.mass_at_distance[d];
        bucket_cost += d * plan.mass_at_distance[d];
    }
    CHECK(bucket_total == 1);
    CHECK(bucket_cost == plan.total_cost);
    CHECK(plan.mass_at_distance[0] - plan.mass_at_distance[2] -
              2 * plan.mass_at_distance[3] ==
          1 - plan.total_cost);
}

} // namespace

TEST_CASE("transport on a single pair moves everything at that cost") {
    const TransportInstance instance{{Rational(1)}, {Rational(1)}, {2}};
    const TransportPlan plan = solve_transport(instance);
    CHECK(plan.total_cost == 2);
    REQUIRE(plan.entries.size() == 1);
    CHECK(plan.entries[0].amount == 1);
    CHECK(plan.mass_at_distance[2] == 1);
    check_plan_shape(instance, plan);
}

TEST_CASE("transport finds the unique optimal plan of a small instance") {
    const TransportInstance instance{{Rational(1, 3), Rational(2, 3)},
                                     {Rational(1, 2), Rational(1, 2)},
                                     {0, 2, 1, 0}};
    const TransportPlan plan = solve_transport(instance);
    CHECK(plan.total_cost == Rational(1, 6));
    REQUIRE(plan.entries.size() == 3);
    CHECK(plan.entries[0].supply == 0);
    CHECK(plan.entries[0].demand == 0);
    CHECK(plan.entries[0].amount == Rational(1, 3));
    CHECK(plan.entries[1].supply == 1);
    CHECK(plan.entries[1].demand == 0);
    CHECK(plan.entries[1].amount == Rational(1, 6));
    CHECK(plan.entries[2].supply == 1);
    CHECK(plan.entries[2].demand == 1);
    CHECK(plan.entries[2].amount == Rational(1, 2));
    CHECK(plan.mass_at_distance[0] == Rational(5, 6));
    CHECK(plan.mass_at_distance[1] == Rational(1, 6));
    check_plan_shape(instance, plan);
}

TEST_CASE("transport matches the simplex oracle on an instance with ties") {
    const TransportInstance instance{{Rational(1, 2), Rational(1, 2)},
                                     {Rational(1, 4), Rational(1, 4), Rational(1, 2)},
                                     {0, 1, 2, 1, 0, 3}};
    const TransportPlan plan = solve_transport(instance);
    CHECK(plan.total_cost == Rational(5, 4));
    CHECK(plan.total_cost ==
          testsupport::lp_transport_cost(instance.supplies, instance.demands,
                                         instance.costs));
    check_plan_shape(instance, plan);
}

TEST_CASE("transport validates its inputs") {
    const auto ok = TransportInstance{{Rational(1)}, {Rational(1)}, {0}};
    CHECK_NOTHROW(solve_transport(ok));

    CHECK_THROWS_AS(solve_transport({{}, {Rational(1)}, {}}), ContractError);
    CHECK_THROWS_AS(solve_transport({{Rational(1)}, {}, {}}), ContractError);
    CHECK_THROWS_AS(
        solve_transport({{Rational(1, 2)}, {Rational(1, 2)}, {0}}),
        ContractError);
    CHECK_THROWS_AS(
        solve_transport(
            {{Rational(3, 2), Rational(-1, 2)}, {Rational(1)}, {0, 0}}),
        ContractError);
    CHECK_THROWS_AS(
        solve_transport({{Rational(1), Rational(0)}, {Rational(1)}, {0, 0}}),
        ContractError);
    CHECK_THROWS_AS(solve_transport({{Rational(1)}, {Rational(1)}, {0, 0}}),
                    ContractError);
    CHECK_THROWS_AS(solve_transport({{Rational(1)}, {Rational(1)}, {4}}),
                    ContractError);
    CHECK_THROWS_AS(solve_transport({{Rational(1)}, {Rational(1)}, {-1}}),
                    ContractError);
}

TEST_CASE("transport cost agrees with the simplex oracle on random instances") {
    std::mt19937_64 rng(40001);
    for (int i = 0; i < 300; ++i) {
        TransportInstance instance;
        instance.supplies = testsupport::random_masses(rng);
        instance.demands = testsupport::random_masses(rng);
        instance.costs =
            testsupport::random_costs(rng, instance.supplies.size(), instance.demands.size());

        const TransportPlan plan = solve_transport(instance);
        check_plan_shape(instance, plan);
        CHECK(plan.total_cost ==
              testsupport::lp_transport_cost(instance.supplies, instance.demands,
                                             instance.costs));
    }
}

TEST_CASE("transport is deterministic across repeated solves") {
    std::mt19937_64 rng(40002);
    for (int i = 0; i < 50; ++i) {
        TransportInstance instance;
        instance.supplies = testsupport::random_masses(rng);
        instance.demands = testsupport::random_masses(rng);
        instance.costs =
            testsupport::random_costs(rng, instance.supplies.size(), instance.demands.size());

        const TransportPlan first = solve_transport(instance);
        const TransportPlan second = solve_transport(instance);
        CHECK(first.total_cost == second.total_cost);
        CHECK(first.mass_at_distance == second.mass_at_distance);
        REQUIRE(first.entries.size() == second.entries.size());
        for (std::size_t k = 0; k < first.entries.size(); ++k) {
            CHECK(first.entries[k].supply == second.entries[k].supply);
            CHECK(first.entries[k].demand == second.entries[k].demand);
            CHECK(first.entries[k].amount == second.entries[k].amount);
        }
    }
}
