#pragma once

#include "gatex/galled_tree.hpp"
#include "gatex/graph.hpp"
#include "gatex/network_view.hpp"
#include "gatex/pvr_builder.hpp"
#include "gatex/tie_breaks.hpp"

#include <vector>

namespace gatex {

struct OmegaTables {
	std::vector<int> omega;          // per node
	std::vector<int> omega_not_eta;  // cycle vertices other than their root; -1 elsewhere
	std::vector<char> active;
	std::vector<int> alpha;          // per cycle; -1 when the cycle root is labeled 0
	std::vector<int> beta;
};

struct CliqueResult {
	VertexSet vertices;
	int size = 0;
};

// Runs the table pass and the active marking over the whole network.
OmegaTables omega_tables(const NetworkView& view, const std::vector<CycleDescriptor>& cyc, const TieBreaks& ties = {});
OmegaTables omega_tables(const GalledTree& net, const std::vector<CycleDescriptor>& cyc, const TieBreaks& ties = {});
OmegaTables omega_tables(const PvrNetwork& p, const TieBreaks& ties = {});

// Marking step at one cycle. For root_label 0, `side` (1 or 2) is the side
// holding the chosen child of rho; it is ignored for root_label 1.
void activate(const GalledTree& net, const CycleDescriptor& c, OmegaTables& tables, int alpha, int beta, Label root_label,
              int side, const TieBreaks& ties = {});

// Leaves reachable from the root along active vertices (root exempt).
VertexSet extract_clique(const NetworkView& view, const OmegaTables& tables);
VertexSet extract_clique(const GalledTree& net, const OmegaTables& tables);

CliqueResult max_clique(const PvrNetwork& p, const TieBreaks& ties = {});
CliqueResult max_independent_set(const PvrNetwork& p, const TieBreaks& ties = {});

// Graph-level entry points; results are checked against the graph and a
// std::logic_error is raised if the marking did not yield a clique of size
// omega(root). Throw NotGatexError for non-GaTEx input.
CliqueResult max_clique(const Graph& g);
CliqueResult max_independent_set(const Graph& g);

}  // namespace gatex
