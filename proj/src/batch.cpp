#include "curv/batch.hpp"

#include "curv/curvature_digraph.hpp"
#include "curv/curvature_graph.hpp"

#include <cstdint>

namespace curv {

namespace {

OllivierSummary summarize_plan(Rational value, const TransportPlan& plan) {
    OllivierSummary summary;
    summary.value = std::move(value);
    summary.w1 = plan.total_cost;
    summary.mass_at_distance = plan.mass_at_distance;
    return summary;
}

CurvatureRecord graph_record(const Network& net, EdgeId e, const BatchOptions& options,
                             DistanceScratch& scratch) {
    const bool directed = net.kind() == NetworkKind::directed_graph;
    const Edge& edge = net.edge(e);

    CurvatureRecord record;
    record.edge = e;
    record.label = net.label(edge.tail) + (directed ? "->" : "--") + net.label(edge.head);
    if (options.measures.forman) {
        record.forman = directed ? forman_directed(net, e) : forman(net, e);
    }
    if (options.measures.degree_difference) {
        record.degree_difference =
            directed ? directed_degree_difference(net, e) : degree_difference(net, e);
    }
    if (options.measures.ollivier) {
        OllivierResult result =
            directed ? ollivier_directed(net, e, scratch) : ollivier(net, e, scratch);
        record.ollivier = summarize_plan(std::move(result.value), result.plan);
    }
    return record;
}

CurvatureRecord hyperedge_record(const Network& net, EdgeId e, const BatchOptions& options,
                                 DistanceScratch& scratch) {
    const Hyperedge& he = net.hyperedge(e);

    CurvatureRecord record;
    record.edge = e;
    record.label = he.label;
    record.tail_size = he.tail.size();
    record.head_size = he.head.size();
    if (options.measures.forman) {
        record.forman = forman_hyper(net, e, options.hyper);
    }
    if (options.measures.degree_difference) {
        record.degree_difference = degree_difference_hyper(net, e, options.hyper);
    }
    if (options.measures.ollivier && !he.tail.empty() && !he.head.empty()) {
        HyperOllivierResult result = ollivier_hyper(net, e, scratch, options.hyper);
        record.ollivier = summarize_plan(std::move(result.value), result.plan);
        record.ollivier->n_masses = result.in.masses_or_holes.size();
        record.ollivier->n_holes = result.out.masses_or_holes.size();
    }
    return record;
}

CurvatureRecord compute_one(const Network& net, EdgeId e, const BatchOptions& options,
                            DistanceScratch& scratch) {
    return net.is_graph() ? graph_record(net, e, options, scratch)
                          : hyperedge_record(net, e, options, scratch);
}

void check_options(const Network& net, const BatchOptions& options) {
    if (options.measures.ollivier && net.weighted()) {
        throw ContractError("Ollivier curvature requires an unweighted network");
    }
    if (options.threads < 1) {
        throw ContractError("thread count must be at least 1");
    }
}

} // namespace

std::vector<CurvatureRecord> compute_records_serial(const Network& net,
                                                    const BatchOptions& options) {
    check_options(net, options);
    std::vector<CurvatureRecord> records(net.edge_count());
    DistanceScratch scratch;
    for (EdgeId e = 0; e < records.size(); ++e) {
        records[e] = compute_one(net, e, options, scratch);
    }
    return records;
}

std::vector<CurvatureRecord> compute_records(const Network& net, const BatchOptions& options) {
    check_options(net, options);
    std::vector<CurvatureRecord> records(net.edge_count());
    const auto count = static_cast<std::int64_t>(records.size());
#ifdef _OPENMP
#pragma omp parallel num_threads(options.threads)
    {
        DistanceScratch scratch;
#pragma omp for schedule(dynamic, 16)
        for (std::int64_t e = 0; e < count; ++e) {
            records[e] = compute_one(net, static_cast<EdgeId>(e), options, scratch);
        }
    }
#else
    DistanceScratch scratch;
    for (std::int64_t e = 0; e < count; ++e) {
        records[e] = compute_one(net, static_cast<EdgeId>(e), options, scratch);
    }
#endif
    return records;
}

} // namespace curv
