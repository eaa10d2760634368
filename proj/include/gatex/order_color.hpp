#pragma once

#include "gatex/galled_tree.hpp"
#include "gatex/graph.hpp"
#include "gatex/network_view.hpp"
#include "gatex/pvr_builder.hpp"
#include "gatex/tie_breaks.hpp"

#include <utility>
#include <vector>

namespace gatex {

struct VertexOrder {
	std::vector<Vertex> sequence;

	// position[v] = index of v in sequence.
	std::vector<int> positions() const;
};

struct Coloring {
	std::vector<int> color;  // 1-based
	int num_colors = 0;
};

// Perfect order of the graph explained by a pvr-shaped network, built
// bottom-up over the tree part of the network with O(1) concatenations.
VertexOrder perfect_order(const NetworkView& view, const std::vector<CycleDescriptor>& cyc, const TieBreaks& ties = {});
VertexOrder perfect_order(const GalledTree& net, const std::vector<CycleDescriptor>& cyc, const TieBreaks& ties = {});
VertexOrder perfect_order(const PvrNetwork& p, const TieBreaks& ties = {});

// Throws std::invalid_argument if `order` is not a permutation of V(G).
Coloring greedy_color(const Graph& g, const VertexOrder& order);

// Throws NotGatexError for non-GaTEx input.
std::pair<int, Coloring> chromatic_number(const Graph& g);

// True iff no induced P4 a-b-c-d has a before b and d before c.
bool is_perfect_order(const Graph& g, const VertexOrder& order);

}  // namespace gatex
