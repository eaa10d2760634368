#pragma once

#include "gatex/galled_tree.hpp"
#include "gatex/graph.hpp"
#include "gatex/tie_breaks.hpp"

#include <iosfwd>
#include <string>

namespace gatex::io {

// All readers throw std::invalid_argument on malformed input.

// First line "n m", then m lines "u v". Endpoints are 0-based ids when every
// token is an integer in [0, n); otherwise they are names, numbered by first
// appearance, with unused vertices named by their id.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

// "p edge n m" header, "e u v" lines with 1-based ids, "c" comment lines.
Graph read_dimacs(std::istream& in);
void write_dimacs(std::ostream& out, const Graph& g);

// format: "edgelist", "dimacs" or "auto" (DIMACS iff a line starts with "p").
Graph read_graph(std::istream& in, const std::string& format);

// {"nodes":[{"id","kind","label","name"?}],"edges":[[parent,child],...]}.
// Ids must be 0..k-1; children are stored in the order of the edges array.
GalledTree read_network_json(std::istream& in);
GalledTree parse_network_json(const std::string& text);
std::string network_to_json(const GalledTree& n, int indent = 2);

// {"tie_breaks":{"concat_order":{"<id>":[ids]},"argmax_pick":{"<id>":id}}}.
TieBreaks read_overrides(std::istream& in);

void write_dot(std::ostream& out, const Graph& g);
void write_dot(std::ostream& out, const GalledTree& n);

}  // namespace gatex::io
