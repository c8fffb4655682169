#include "curv/netstats.hpp"

#include "curv/batch.hpp"
#include "curv/network.hpp"

#include "doctest.h"
#include "support/generators.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <vector>

using namespace curv;

namespace {

Network complete_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v) edges.push_back({u, v});
    }
    return Network::undirected(testsupport::vertex_labels(n), edges);
}

Network path_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (NodeId v = 0; v + 1 < n; ++v) edges.push_back({v, static_cast<NodeId>(v + 1)});
    return Network::undirected(testsupport::vertex_labels(n), edges);
}

Network star_graph(std::size_t leaves) {
    std::vector<Edge> edges;
    for (NodeId v = 1; v <= leaves; ++v) edges.push_back({0, v});
    return Network::undirected(testsupport::vertex_labels(leaves + 1), edges);
}

std::vector<CurvatureRecord> records_of(const Network& net) {
    return compute_records_serial(net, BatchOptions{});
}

} // namespace

TEST_CASE("histogram bins values left-closed right-open") {
    HistogramSpec spec;
    spec.edges = {Rational(0), Rational(1), Rational(2)};

    const Histogram hist = histogram({Rational(0), Rational(0), Rational(1)}, spec);
    REQUIRE(hist.counts.size() == 2);
    CHECK(hist.counts[0] == 2);
    CHECK(hist.counts[1] == 1);
    CHECK(hist.underflow == 0);
    CHECK(hist.overflow == 0);
    CHECK(hist.edges == spec.edges);
}

TEST_CASE("histogram of no values has zero counts") {
    const Histogram hist = histogram({}, HistogramSpec::integer_range(BigInt(0), BigInt(2)));
    for (std::size_t count : hist.counts) CHECK(count == 0);
    CHECK(hist.underflow == 0);
    CHECK(hist.overflow == 0);
}

TEST_CASE("histogram puts the top edge into the last bin") {
    HistogramSpec spec;
    spec.edges = {Rational(0), Rational(1), Rational(2)};
    const Histogram hist = histogram({Rational(2)}, spec);
    CHECK(hist.counts[0] == 0);
    CHECK(hist.counts[1] == 1);
    CHECK(hist.overflow == 0);
}

TEST_CASE("histogram routes out-of-range values to underflow and overflow") {
    HistogramSpec spec;
    spec.edges = {Rational(0), Rational(1)};
    const Histogram hist = histogram(
        {Rational(-1, 2), Rational(-3), Rational(5, 4), Rational(1, 2)}, spec);
    CHECK(hist.counts[0] == 1);
    CHECK(hist.underflow == 2);
    CHECK(hist.overflow == 1);
}

TEST_CASE("histogram rejects malformed bin edges") {
    HistogramSpec descending;
    descending.edges = {Rational(1), Rational(0)};
    CHECK_THROWS_AS(histogram({}, descending), ContractError);

    HistogramSpec repeated;
    repeated.edges = {Rational(0), Rational(0), Rational(1)};
    CHECK_THROWS_AS(histogram({}, repeated), ContractError);

    HistogramSpec single;
    single.edges = {Rational(0)};
    CHECK_THROWS_AS(histogram({}, single), ContractError);
}

TEST_CASE("integer_range spec covers each integer with a unit bin") {
    const HistogramSpec spec = HistogramSpec::integer_range(BigInt(-2), BigInt(3));
    const std::vector<Rational> expected = {Rational(-2), Rational(-1), Rational(0),
                                            Rational(1),  Rational(2),  Rational(3),
                                            Rational(4)};
    CHECK(spec.edges == expected);

    CHECK(HistogramSpec::integer_range(BigInt(5), BigInt(5)).edges ==
          std::vector<Rational>{Rational(5), Rational(6)});
    CHECK_THROWS_AS(HistogramSpec::integer_range(BigInt(1), BigInt(0)), ContractError);
}

TEST_CASE("uniform spec tiles the range and may overhang at the top") {
    const HistogramSpec quarters = HistogramSpec::uniform(Rational(0), Rational(1), Rational(1, 4));
    const std::vector<Rational> expected = {Rational(0), Rational(1, 4), Rational(1, 2),
                                            Rational(3, 4), Rational(1)};
    CHECK(quarters.edges == expected);

    const HistogramSpec overhang = HistogramSpec::uniform(Rational(0), Rational(1), Rational(2, 5));
    CHECK(overhang.edges == std::vector<Rational>{Rational(0), Rational(2, 5), Rational(4, 5),
                                                  Rational(6, 5)});
    CHECK(overhang.edges.back() > 1);

    const HistogramSpec wide = HistogramSpec::uniform(Rational(0), Rational(1), Rational(2));
    CHECK(wide.edges == std::vector<Rational>{Rational(0), Rational(2)});

    CHECK_THROWS_AS(HistogramSpec::uniform(Rational(0), Rational(1), Rational(0)), ContractError);
    CHECK_THROWS_AS(HistogramSpec::uniform(Rational(0), Rational(1), Rational(-1)), ContractError);
    CHECK_THROWS_AS(HistogramSpec::uniform(Rational(1), Rational(1), Rational(1)), ContractError);
}

TEST_CASE("histogram accounts for every value") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Rational> values;
        const std::size_t n = testsupport::pick(rng, 0, 40);
        for (std::size_t i = 0; i < n; ++i) {
            const int numerator = static_cast<int>(testsupport::pick(rng, 0, 60)) - 30;
            values.emplace_back(numerator, static_cast<int>(testsupport::pick(rng, 1, 6)));
        }
        const BigInt lo = -static_cast<int>(testsupport::pick(rng, 0, 4));
        const BigInt hi = static_cast<int>(testsupport::pick(rng, 1, 4));
        const Histogram hist = histogram(values, HistogramSpec::integer_range(lo, hi));
        const std::size_t binned =
            std::accumulate(hist.counts.begin(), hist.counts.end(), std::size_t{0});
        CHECK(binned + hist.underflow + hist.overflow == values.size());
    }
}

TEST_CASE("assortativity of a star is exactly -1") {
    for (std::size_t leaves : {3, 5, 12}) {
        const auto r = assortativity(star_graph(leaves));
        REQUIRE(r.has_value());
        CHECK(*r == -1.0);
    }
    const auto p3 = assortativity(path_graph(3));
    REQUIRE(p3.has_value());
    CHECK(*p3 == -1.0);
}

TEST_CASE("assortativity is undefined on degree-regular graphs") {
    CHECK_FALSE(assortativity(complete_graph(4)).has_value());

    const Network lonely = Network::undirected(testsupport::vertex_labels(3), {});
    CHECK_FALSE(assortativity(lonely).has_value());

    // Constant out-degree on every tail.
    const Network chain =
        Network::directed(testsupport::vertex_labels(3), {{0, 1}, {1, 2}});
    CHECK_FALSE(assortativity(chain).has_value());
}

TEST_CASE("directed assortativity pairs tail out-degree with head in-degree") {
    const Network net =
        Network::directed(testsupport::vertex_labels(3), {{0, 1}, {0, 2}, {2, 1}});
    const auto r = assortativity(net);
    REQUIRE(r.has_value());
    CHECK(*r == -0.5);
}

TEST_CASE("assortativity does not depend on edge order") {
    const std::vector<Edge> edges = {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}, {2, 5}, {1, 5}};
    std::vector<Edge> shuffled = edges;
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        const auto a = assortativity(Network::undirected(testsupport::vertex_labels(6), edges));
        const auto b = assortativity(Network::undirected(testsupport::vertex_labels(6), shuffled));
        REQUIRE(a.has_value());
        REQUIRE(b.has_value());
        CHECK(*a == *b);
    }

    // Unequal marginal variances, so the value passes through a square root;
    // the moments underneath are still exact, so shuffling changes nothing.
    const std::vector<Edge> arcs = {{0, 1}, {0, 2}, {0, 3}, {1, 2}};
    std::vector<Edge> arcs_shuffled = arcs;
    for (int trial = 0; trial < 10; ++trial) {
        std::shuffle(arcs_shuffled.begin(), arcs_shuffled.end(), rng);
        const auto a = assortativity(Network::directed(testsupport::vertex_labels(4), arcs));
        const auto b =
            assortativity(Network::directed(testsupport::vertex_labels(4), arcs_shuffled));
        REQUIRE(a.has_value());
        REQUIRE(b.has_value());
        CHECK(*a == *b);
    }
}

TEST_CASE("assortativity rejects hypergraphs") {
    const Network net =
        Network::hypergraph(testsupport::vertex_labels(2), {{{0}, {1}, Rational(1), "r"}});
    CHECK_THROWS_AS(assortativity(net), ContractError);
}

TEST_CASE("summarize reports structure and measure statistics for a triangle") {
    const Network k3 = complete_graph(3);
    const SummaryReport report = summarize(k3, records_of(k3));

    CHECK(report.kind == NetworkKind::undirected_graph);
    CHECK_FALSE(report.weighted);
    CHECK(report.n_nodes == 3);
    CHECK(report.n_edges == 3);
    CHECK(report.component_count == 1);
    CHECK(report.giant_component_size == 3);
    CHECK_FALSE(report.out_degree_gt_100.has_value());
    CHECK_FALSE(report.assortativity.has_value());

    REQUIRE(report.forman.has_value());
    CHECK(report.forman->min == 0);
    CHECK(report.forman->max == 0);
    CHECK(report.forman->mean == 0);
    CHECK(report.forman->median == 0);

    REQUIRE(report.degree_difference.has_value());
    CHECK(report.degree_difference->max == 0);

    REQUIRE(report.ollivier.has_value());
    CHECK(report.ollivier->min == Rational(1, 2));
    CHECK(report.ollivier->max == Rational(1, 2));
    CHECK(report.ollivier->mean == Rational(1, 2));
    CHECK(report.ollivier->median == Rational(1, 2));
}

TEST_CASE("summarize medians sort the values and average even-length middles") {
    // Path on five vertices: end edges sit at 1, interior edges at 0.
    const Network p5 = path_graph(5);
    const SummaryReport report = summarize(p5, records_of(p5));
    REQUIRE(report.forman.has_value());
    CHECK(report.forman->min == 0);
    CHECK(report.forman->max == 1);
    CHECK(report.forman->mean == Rational(1, 2));
    CHECK(report.forman->median == Rational(1, 2));

    const Network p4 = path_graph(4);
    const SummaryReport odd = summarize(p4, records_of(p4));
    REQUIRE(odd.forman.has_value());
    CHECK(odd.forman->median == 1);
    CHECK(odd.forman->mean == Rational(2, 3));
}

TEST_CASE("summarize counts components and the giant one") {
    const Network two = Network::undirected(testsupport::vertex_labels(5), {{0, 1}, {2, 3}});
    const SummaryReport report = summarize(two, records_of(two));
    CHECK(report.component_count == 3); // v4 is isolated
    CHECK(report.giant_component_size == 2);
}

TEST_CASE("summarize flags high-fanout vertices in directed graphs") {
    std::vector<Edge> edges;
    for (NodeId v = 1; v <= 101; ++v) edges.push_back({0, v});
    const Network hub = Network::directed(testsupport::vertex_labels(102), edges);
    const SummaryReport report = summarize(hub, records_of(hub));
    CHECK(report.out_degree_gt_100 == 1);
    CHECK(report.component_count == 1);
    CHECK(report.giant_component_size == 102);

    const Network chain = Network::directed(testsupport::vertex_labels(3), {{0, 1}, {1, 2}});
    CHECK(summarize(chain, records_of(chain)).out_degree_gt_100 == 0);
}

TEST_CASE("summarize leaves graph-only fields empty for hypergraphs") {
    const Network net = Network::hypergraph(
        testsupport::vertex_labels(3),
        {{{0}, {1}, Rational(1), "r1"}, {{1}, {0, 2}, Rational(1), "r2"}});
    const SummaryReport report = summarize(net, records_of(net));
    CHECK(report.kind == NetworkKind::directed_hypergraph);
    CHECK(report.n_nodes == 3);
    CHECK(report.n_edges == 2);
    CHECK_FALSE(report.component_count.has_value());
    CHECK_FALSE(report.giant_component_size.has_value());
    CHECK_FALSE(report.assortativity.has_value());
    CHECK_FALSE(report.out_degree_gt_100.has_value());
    CHECK(report.forman.has_value());
    CHECK(report.ollivier.has_value());
}

TEST_CASE("summarize skips statistics for measures that were not computed") {
    const Network k3 = complete_graph(3);
    BatchOptions options;
    options.measures.degree_difference = false;
    options.measures.ollivier = false;
    const SummaryReport report = summarize(k3, compute_records_serial(k3, options));
    CHECK(report.forman.has_value());
    CHECK_FALSE(report.degree_difference.has_value());
    CHECK_FALSE(report.ollivier.has_value());
}

TEST_CASE("summarize insists on one record per edge in order") {
    const Network k3 = complete_graph(3);
    std::vector<CurvatureRecord> records = records_of(k3);

    std::vector<CurvatureRecord> short_list(records.begin(), records.end() - 1);
    CHECK_THROWS_AS(summarize(k3, short_list), ContractError);

    std::vector<CurvatureRecord> swapped = records;
    std::swap(swapped[0], swapped[1]);
    CHECK_THROWS_AS(summarize(k3, swapped), ContractError);
}
