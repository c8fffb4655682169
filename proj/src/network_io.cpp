#include "curv/network_io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <utility>

namespace curv {

namespace {

struct LabelPool {
    std::unordered_map<std::string, NodeId> ids;
    std::vector<std::string> labels;

    NodeId intern(const std::string& name) {
        auto [it, inserted] = ids.try_emplace(name, static_cast<NodeId>(labels.size()));
        if (inserted) labels.push_back(name);
        return it->second;
    }
};

std::string strip_line(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

bool is_blank_or_comment(const std::string& line) {
    const std::size_t first = line.find_first_not_of(" \t");
    return first == std::string::npos || line[first] == '#';
}

std::vector<std::string> split_whitespace(const std::string& line) {
    std::istringstream stream(line);
    std::vector<std::string> tokens;
    std::string token;
    while (stream >> token) tokens.push_back(std::move(token));
    return tokens;
}

std::string trim(const std::string& text) {
    const std::size_t first = text.find_first_not_of(" \t");
    if (first == std::string::npos) return {};
    const std::size_t last = text.find_last_not_of(" \t");
    return text.substr(first, last - first + 1);
}

} // namespace

ParsedNetwork parse_edge_list(std::istream& in, NetworkKind kind, bool weighted) {
    if (kind == NetworkKind::directed_hypergraph) {
        throw ContractError("parse_edge_list() handles graphs; use parse_hyperedges()");
    }
    const bool undirected = kind == NetworkKind::undirected_graph;

    LabelPool pool;
    std::vector<Edge> edges;
    std::map<std::pair<NodeId, NodeId>, std::size_t> index;
    ParseReport report;

    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = strip_line(std::move(raw));
        if (is_blank_or_comment(line)) continue;

        const std::vector<std::string> tokens = split_whitespace(line);
        if (!weighted && tokens.size() != 2) {
            throw ParseError(line_no, "expected 2 tokens, got " + std::to_string(tokens.size()));
        }
        if (weighted && (tokens.size() < 2 || tokens.size() > 3)) {
            throw ParseError(line_no,
                             "expected 2 or 3 tokens, got " + std::to_string(tokens.size()));
        }

        if (tokens[0] == tokens[1]) {
            ++report.self_loops_dropped;
            continue;
        }

        Rational weight{1};
        if (weighted && tokens.size() == 3) {
            try {
                weight = parse_rational(tokens[2]);
            } catch (const std::invalid_argument&) {
                throw ParseError(line_no, "bad weight '" + tokens[2] + "'");
            }
            if (weight <= 0) {
                throw ParseError(line_no, "non-positive weight '" + tokens[2] + "'");
            }
        }

        const NodeId tail = pool.intern(tokens[0]);
        const NodeId head = pool.intern(tokens[1]);
        std::pair<NodeId, NodeId> key{tail, head};
        if (undirected && key.first > key.second) std::swap(key.first, key.second);

        auto [it, inserted] = index.try_emplace(key, edges.size());
        if (inserted) {
            edges.push_back({tail, head, weight});
        } else {
            ++report.duplicates_collapsed;
            if (weighted) edges[it->second].weight += weight;
        }
    }

    Network net = undirected
                      ? Network::undirected(std::move(pool.labels), std::move(edges), weighted)
                      : Network::directed(std::move(pool.labels), std::move(edges), weighted);
    return {std::move(net), report};
}

namespace {

std::vector<NodeId> parse_vertex_set(const std::string& text, LabelPool& pool,
                                     std::size_t line_no) {
    std::vector<NodeId> side;
    if (trim(text).empty()) return side;

    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const std::string token =
            trim(text.substr(start, comma == std::string::npos ? comma : comma - start));
        if (token.empty()) {
            throw ParseError(line_no, "empty vertex name in '" + trim(text) + "'");
        }
        side.push_back(pool.intern(token));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }

    std::sort(side.begin(), side.end());
    side.erase(std::unique(side.begin(), side.end()), side.end());
    return side;
}

} // namespace

ParsedNetwork parse_hyperedges(std::istream& in, bool split_reversible) {
    LabelPool pool;
    std::vector<Hyperedge> edges;
    ParseReport report;

    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = strip_line(std::move(raw));
        if (is_blank_or_comment(line)) continue;

        std::string label;
        if (const std::size_t bar = line.find('|'); bar != std::string::npos) {
            label = trim(line.substr(bar + 1));
            if (label.empty()) {
                throw ParseError(line_no, "empty label after '|'");
            }
            line = line.substr(0, bar);
        }

        bool reversible = false;
        std::size_t arrow = line.find("<->");
        std::size_t arrow_len = 3;
        if (arrow != std::string::npos) {
            reversible = true;
        } else {
            arrow = line.find("->");
            arrow_len = 2;
        }
        if (arrow == std::string::npos) {
            throw ParseError(line_no, "missing '->' between tail and head");
        }
        if (reversible && !split_reversible) {
            throw ParseError(line_no,
                             "reversible hyperedge requires the split-reversible option");
        }

        Hyperedge edge;
        edge.tail = parse_vertex_set(line.substr(0, arrow), pool, line_no);
        edge.head = parse_vertex_set(line.substr(arrow + arrow_len), pool, line_no);
        if (edge.tail.empty() && edge.head.empty()) {
            throw ParseError(line_no, "hyperedge with empty tail and head");
        }
        edge.label = label.empty() ? "e" + std::to_string(edges.size()) : label;

        if (reversible) {
            Hyperedge reverse;
            reverse.tail = edge.head;
            reverse.head = edge.tail;
            reverse.label = edge.label + "_rev";
            edges.push_back(std::move(edge));
            edges.push_back(std::move(reverse));
        } else {
            edges.push_back(std::move(edge));
        }
    }

    Network net = Network::hypergraph(std::move(pool.labels), std::move(edges), false);
    return {std::move(net), report};
}

namespace {

std::ifstream open_input(const std::string& path) {
    std::ifstream file(path);
    if (!file) {
        throw IoError("cannot open '" + path + "' for reading");
    }
    return file;
}

} // namespace

ParsedNetwork read_edge_list(const std::string& path, NetworkKind kind, bool weighted) {
    std::ifstream file = open_input(path);
    return parse_edge_list(file, kind, weighted);
}

ParsedNetwork read_hyperedges(const std::string& path, bool split_reversible) {
    std::ifstream file = open_input(path);
    return parse_hyperedges(file, split_reversible);
}

void write_edge_list(std::ostream& out, const Network& net) {
    if (!net.is_graph()) {
        throw ContractError("write_edge_list() handles graphs; use write_hyperedges()");
    }
    for (const Edge& e : net.edges()) {
        out << net.label(e.tail) << ' ' << net.label(e.head);
        if (net.weighted()) out << ' ' << format_rational(e.weight);
        out << '\n';
    }
}

void write_hyperedges(std::ostream& out, const Network& net) {
    if (net.is_graph()) {
        throw ContractError("write_hyperedges() requires a directed hypergraph");
    }
    for (const Hyperedge& e : net.hyperedges()) {
        for (std::size_t i = 0; i < e.tail.size(); ++i) {
            if (i > 0) out << ',';
            out << net.label(e.tail[i]);
        }
        out << " -> ";
        for (std::size_t i = 0; i < e.head.size(); ++i) {
            if (i > 0) out << ',';
            out << net.label(e.head[i]);
        }
        out << " | " << e.label << '\n';
    }
}

} // namespace curv
