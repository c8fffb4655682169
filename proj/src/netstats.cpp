#include "curv/netstats.hpp"

#include <algorithm>
#include <cmath>

namespace curv {

HistogramSpec HistogramSpec::uniform(const Rational& lo, const Rational& hi,
                                     const Rational& width) {
    if (width <= 0) throw ContractError("histogram bin width must be positive");
    if (hi <= lo) throw ContractError("histogram range is empty");
    HistogramSpec spec;
    for (Rational edge = lo; edge < hi; edge += width) spec.edges.push_back(edge);
    spec.edges.push_back(spec.edges.back() + width);
    return spec;
}

HistogramSpec HistogramSpec::integer_range(const BigInt& lo, const BigInt& hi) {
    if (hi < lo) throw ContractError("histogram range is empty");
    HistogramSpec spec;
    for (BigInt edge = lo; edge <= hi + 1; ++edge) spec.edges.emplace_back(edge);
    return spec;
}

Histogram histogram(const std::vector<Rational>& values, const HistogramSpec& spec) {
    if (spec.edges.size() < 2) {
        throw ContractError("histogram needs at least one bin");
    }
    for (std::size_t i = 1; i < spec.edges.size(); ++i) {
        if (spec.edges[i - 1] >= spec.edges[i]) {
            throw ContractError("histogram bin edges must be strictly ascending");
        }
    }

    Histogram hist;
    hist.edges = spec.edges;
    hist.counts.assign(spec.edges.size() - 1, 0);
    for (const Rational& value : values) {
        if (value < hist.edges.front()) {
            ++hist.underflow;
        } else if (value > hist.edges.back()) {
            ++hist.overflow;
        } else if (value == hist.edges.back()) {
            ++hist.counts.back();
        } else {
            const auto above = std::upper_bound(hist.edges.begin(), hist.edges.end(), value);
            ++hist.counts[static_cast<std::size_t>(above - hist.edges.begin()) - 1];
        }
    }
    return hist;
}

namespace {

// Pearson correlation from exact integer moments; returns nullopt when a
// marginal variance vanishes.
std::optional<double> pearson(const BigInt& n, const BigInt& sx, const BigInt& sy,
                              const BigInt& sxx, const BigInt& syy, const BigInt& sxy) {
    const BigInt var_x = n * sxx - sx * sx;
    const BigInt var_y = n * syy - sy * sy;
    if (var_x == 0 || var_y == 0) return std::nullopt;
    const BigInt cov = n * sxy - sx * sy;
    if (var_x == var_y) {
        return Rational(cov, var_x).convert_to<double>();
    }
    return cov.convert_to<double>() /
           std::sqrt(var_x.convert_to<double>() * var_y.convert_to<double>());
}

} // namespace

std::optional<double> assortativity(const Network& net) {
    if (!net.is_graph()) {
        throw ContractError(std::string("assortativity() requires a graph, got ") +
                            to_string(net.kind()));
    }
    if (net.edges().empty()) return std::nullopt;

    BigInt n{0}, sx{0}, sy{0}, sxx{0}, syy{0}, sxy{0};
    auto tally = [&](std::size_t x, std::size_t y) {
        const BigInt bx{x}, by{y};
        ++n;
        sx += bx;
        sy += by;
        sxx += bx * bx;
        syy += by * by;
        sxy += bx * by;
    };
    const bool directed = net.kind() == NetworkKind::directed_graph;
    for (const Edge& e : net.edges()) {
        if (directed) {
            tally(net.out_edges(e.tail).size(), net.in_edges(e.head).size());
        } else {
            tally(net.degree(e.tail), net.degree(e.head));
            tally(net.degree(e.head), net.degree(e.tail));
        }
    }
    return pearson(n, sx, sy, sxx, syy, sxy);
}

namespace {

struct ComponentSummary {
    std::size_t count = 0;
    std::size_t giant = 0;
};

ComponentSummary components(const Network& net) {
    const std::size_t n = net.node_count();
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
    ComponentSummary summary;
    for (NodeId v = 0; v < n; ++v) {
        std::size_t& s = size[find(v)];
        if (s == 0) ++summary.count;
        ++s;
        summary.giant = std::max(summary.giant, s);
    }
    return summary;
}

MeasureStats stats_of(std::vector<Rational> values) {
    std::sort(values.begin(), values.end());
    MeasureStats stats;
    stats.min = values.front();
    stats.max = values.back();
    Rational sum{0};
    for (const Rational& v : values) sum += v;
    stats.mean = sum / values.size();
    const std::size_t half = values.size() / 2;
    stats.median = values.size() % 2 == 1 ? values[half]
                                          : (values[half - 1] + values[half]) / 2;
    return stats;
}

} // namespace

SummaryReport summarize(const Network& net, const std::vector<CurvatureRecord>& records) {
    if (records.size() != net.edge_count()) {
        throw ContractError("summarize() got " + std::to_string(records.size()) +
                            " records for " + std::to_string(net.edge_count()) + " edges");
    }
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (records[i].edge != i) {
            throw ContractError("summarize() records are not in edge order");
        }
    }

    SummaryReport report;
    report.kind = net.kind();
    report.weighted = net.weighted();
    report.n_nodes = net.node_count();
    report.n_edges = net.edge_count();

    if (net.is_graph()) {
        const ComponentSummary comp = components(net);
        report.component_count = comp.count;
        report.giant_component_size = comp.giant;
        report.assortativity = assortativity(net);
    }
    if (net.kind() == NetworkKind::directed_graph) {
        std::size_t high = 0;
        for (NodeId v = 0; v < net.node_count(); ++v) {
            if (net.out_edges(v).size() > 100) ++high;
        }
        report.out_degree_gt_100 = high;
    }

    std::vector<Rational> forman_values, ddiff_values, ollivier_values;
    for (const CurvatureRecord& record : records) {
        if (record.forman) forman_values.push_back(*record.forman);
        if (record.degree_difference) ddiff_values.push_back(*record.degree_difference);
        if (record.ollivier) ollivier_values.push_back(record.ollivier->value);
    }
    if (!forman_values.empty()) report.forman = stats_of(std::move(forman_values));
    if (!ddiff_values.empty()) {
        report.degree_difference = stats_of(std::move(ddiff_values));
    }
    if (!ollivier_values.empty()) report.ollivier = stats_of(std::move(ollivier_values));

    return report;
}

} // namespace curv
