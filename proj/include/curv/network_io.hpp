#pragma once

#include "curv/network.hpp"

#include <iosfwd>
#include <string>

namespace curv {

struct ParseReport {
    std::size_t duplicates_collapsed = 0;
    std::size_t self_loops_dropped = 0;
};

struct ParsedNetwork {
    Network net;
    ParseReport report;
};

// Edge lists: one edge per line as "u v" (or "u v weight" when weighted),
// whitespace separated. Blank lines and lines starting with '#' are skipped.
// Vertex labels are interned in first-appearance order. Self-loop lines are
// dropped and duplicate edges are collapsed (weights summed in weighted
// mode); both events are counted in the report. Unweighted lines must have
// exactly two tokens; weighted lines may omit the weight, which defaults
// to 1. Undirected duplicates are detected up to endpoint order.
ParsedNetwork parse_edge_list(std::istream& in, NetworkKind kind, bool weighted);

// Hyperedge lists: one hyperedge per line as
//   "a,b -> c,d"        tail set -> head set
//   "a,b <-> c,d"       reversible; only allowed with split_reversible, which
//                       stores forward and reverse copies
// with an optional " | label" suffix. Either side may be empty, not both.
// Vertices repeated within one side are collapsed; a vertex may appear on
// both sides. Unlabeled hyperedges get "e<id>"; the reverse copy of a
// reversible one appends "_rev" to the forward label.
ParsedNetwork parse_hyperedges(std::istream& in, bool split_reversible);

ParsedNetwork read_edge_list(const std::string& path, NetworkKind kind, bool weighted);
ParsedNetwork read_hyperedges(const std::string& path, bool split_reversible);

// Serializers matching the parsers above: parsing the written text
// reproduces the same labels, edges, and weights.
void write_edge_list(std::ostream& out, const Network& net);
void write_hyperedges(std::ostream& out, const Network& net);

} // namespace curv
