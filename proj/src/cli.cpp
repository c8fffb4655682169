#include "curv/cli.hpp"

#include "curv/netstats.hpp"
#include "curv/network_io.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace curv {

namespace {

namespace fs = std::filesystem;

std::ofstream open_output(const fs::path& path) {
    std::ofstream file(path);
    if (!file) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    return file;
}

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\r\n") == std::string::npos) return text;
    std::string quoted = "\"";
    for (char c : text) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

// Exact value plus its 6-digit decimal rendering, as two CSV fields.
void put_value(std::ostream& out, const Rational& value) {
    out << ',' << format_rational(value) << ',' << format_decimal(value);
}

void write_edges_csv(const fs::path& path, const Network& net, const MeasureSelection& measures,
                     const std::vector<CurvatureRecord>& records) {
    std::ofstream out = open_output(path);
    const bool hyper = !net.is_graph();

    out << "edge_id,label,tail_size,head_size";
    if (measures.forman) out << ",forman,forman_dec";
    if (measures.degree_difference) out << ",ddiff,ddiff_dec";
    if (measures.ollivier) {
        out << ",ollivier,ollivier_dec,w1,w1_dec,m0,m1,m2,m3";
        if (hyper) out << ",n_masses,n_holes";
    }
    out << '\n';

    for (const CurvatureRecord& record : records) {
        out << record.edge << ',' << csv_field(record.label) << ',' << record.tail_size << ','
            << record.head_size;
        if (measures.forman) put_value(out, *record.forman);
        if (measures.degree_difference) put_value(out, *record.degree_difference);
        if (measures.ollivier) {
            if (record.ollivier) {
                const OllivierSummary& o = *record.ollivier;
                put_value(out, o.value);
                put_value(out, o.w1);
                for (const Rational& m : o.mass_at_distance) out << ',' << format_rational(m);
                if (hyper) out << ',' << o.n_masses << ',' << o.n_holes;
            } else {
                // Undefined (hyperedge with an empty side): empty fields.
                out << ",,,,,,,,";
                if (hyper) out << ",,";
            }
        }
        out << '\n';
    }
}

std::string significant(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.6g", value);
    return buffer;
}

void put_stats(std::ostream& out, const char* name,
               const std::optional<MeasureStats>& stats) {
    if (!stats) return;
    auto line = [&](const char* suffix, const Rational& value) {
        out << name << '_' << suffix << ": " << format_rational(value) << " ("
            << format_decimal(value) << ")\n";
    };
    line("min", stats->min);
    line("max", stats->max);
    line("mean", stats->mean);
    line("median", stats->median);
}

void write_summary(const fs::path& path, const SummaryReport& report,
                   const ParseReport& parse_report) {
    std::ofstream out = open_output(path);
    out << "kind: " << to_string(report.kind) << '\n';
    out << "weighted: " << (report.weighted ? "yes" : "no") << '\n';
    out << "nodes: " << report.n_nodes << '\n';
    out << "edges: " << report.n_edges << '\n';
    out << "duplicates_collapsed: " << parse_report.duplicates_collapsed << '\n';
    out << "self_loops_dropped: " << parse_report.self_loops_dropped << '\n';
    if (report.component_count) out << "components: " << *report.component_count << '\n';
    if (report.giant_component_size) {
        out << "giant_component: " << *report.giant_component_size << '\n';
    }
    if (report.out_degree_gt_100) {
        out << "out_degree_gt_100: " << *report.out_degree_gt_100 << '\n';
    }
    if (report.kind != NetworkKind::directed_hypergraph) {
        out << "assortativity: "
            << (report.assortativity ? significant(*report.assortativity) : "undefined")
            << '\n';
    }
    put_stats(out, "forman", report.forman);
    put_stats(out, "ddiff", report.degree_difference);
    put_stats(out, "ollivier", report.ollivier);
}

void write_histogram(const fs::path& path, const Histogram& hist) {
    std::ofstream out = open_output(path);
    out << "lo,hi,count\n";
    for (std::size_t i = 0; i < hist.counts.size(); ++i) {
        out << format_rational(hist.edges[i]) << ',' << format_rational(hist.edges[i + 1])
            << ',' << hist.counts[i] << '\n';
    }
    out << "underflow,," << hist.underflow << '\n';
    out << "overflow,," << hist.overflow << '\n';
}

// Default binning: unit-width bins anchored on integers spanning the
// observed range; an override keeps the floor(min) anchor with the given
// width.
Histogram spanning_histogram(const std::vector<Rational>& values, const Rational& width) {
    Rational lo{floor_rational(*std::min_element(values.begin(), values.end()))};
    Rational hi = *std::max_element(values.begin(), values.end());
    if (hi <= lo) hi = lo + width;
    return histogram(values, HistogramSpec::uniform(lo, hi, width));
}

void write_measure_histograms(const fs::path& dir, const RunConfig& config,
                              const std::vector<CurvatureRecord>& records) {
    std::vector<Rational> forman_values, ddiff_values, ollivier_values;
    for (const CurvatureRecord& record : records) {
        if (record.forman) forman_values.push_back(*record.forman);
        if (record.degree_difference) ddiff_values.push_back(*record.degree_difference);
        if (record.ollivier) ollivier_values.push_back(record.ollivier->value);
    }
    const Rational width = config.bin_width.value_or(Rational(1));
    if (!forman_values.empty()) {
        write_histogram(dir / "hist_forman.csv", spanning_histogram(forman_values, width));
    }
    if (!ddiff_values.empty()) {
        write_histogram(dir / "hist_ddiff.csv", spanning_histogram(ddiff_values, width));
    }
    if (!ollivier_values.empty()) {
        const Rational o_width = config.ollivier_bin_width.value_or(Rational(1, 20));
        write_histogram(dir / "hist_ollivier.csv",
                        histogram(ollivier_values,
                                  HistogramSpec::uniform(Rational(-2), Rational(1), o_width)));
    }
}

void run_impl(const RunConfig& config) {
    const bool hyper = config.kind == NetworkKind::directed_hypergraph;
    if (config.weighted && hyper) {
        throw ContractError("hypergraph inputs are unweighted");
    }
    if (config.weighted && config.measures.ollivier) {
        throw ContractError("Ollivier curvature requires an unweighted network; "
                            "drop --weighted or deselect ollivier");
    }
    if (config.giant_component && hyper) {
        throw ContractError("--giant-component applies to graphs only");
    }

    ParsedNetwork parsed = hyper ? read_hyperedges(config.input_path, config.split_reversible)
                                 : read_edge_list(config.input_path, config.kind,
                                                  config.weighted);
    Network net = std::move(parsed.net);
    if (config.giant_component) net = largest_component(net);

    BatchOptions batch_options;
    batch_options.measures = config.measures;
    batch_options.threads = config.threads;
    batch_options.hyper.include_self_incidence = config.include_self_incidence;
    const std::vector<CurvatureRecord> records = compute_records(net, batch_options);
    const SummaryReport report = summarize(net, records);

    std::error_code ec;
    fs::create_directories(config.output_dir, ec);
    if (ec) {
        throw IoError("cannot create output directory '" + config.output_dir +
                      "': " + ec.message());
    }
    const fs::path dir{config.output_dir};
    write_edges_csv(dir / "edges.csv", net, config.measures, records);
    write_summary(dir / "summary.txt", report, parsed.report);
    write_measure_histograms(dir, config, records);
}

} // namespace

int run(const RunConfig& config) {
    try {
        run_impl(config);
        return 0;
    } catch (const ParseError& error) {
        std::cerr << "parse error: " << config.input_path << ": " << error.what() << '\n';
        return 1;
    } catch (const IoError& error) {
        std::cerr << "I/O error: " << error.what() << '\n';
        return 3;
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << '\n';
        return 2;
    }
}

} // namespace curv
