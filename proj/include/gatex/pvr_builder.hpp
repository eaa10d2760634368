#pragma once

#include "gatex/galled_tree.hpp"
#include "gatex/graph.hpp"
#include "gatex/modular_decomposition.hpp"
#include "gatex/network_view.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace gatex {

// Labeled galled-tree obtained from the modular decomposition tree by
// replacing every prime node with an elementary cycle.
struct PvrNetwork {
	GalledTree network;
	MDTree mdt;
	std::vector<CycleDescriptor> cycles;
	std::vector<NodeId> mdt_to_network;  // network node of each MDT node
	std::vector<int> cycle_of_mdt;       // cycle index of each prime MDT node, else -1
	std::vector<int> mdt_of_cycle;       // inverse of cycle_of_mdt
	NetworkView view;                    // flat copy of network; rebuild after editing it

	// Wraps an existing pvr-shaped network of a GaTEx graph, computing the
	// MDT of the explained graph and matching prime modules to cycles by leaf
	// set. Throws std::invalid_argument if the correspondence does not hold.
	static PvrNetwork from_network(GalledTree network);
};

// Raised when the input graph is not GaTEx. `witness` is a prime module whose
// quotient admits no strong quasi-discriminating elementary explanation.
class NotGatexError : public std::runtime_error {
public:
	explicit NotGatexError(VertexSet witness);
	const VertexSet& witness() const { return witness_; }

private:
	VertexSet witness_;
};

// Leaves are nodes 0..|V(H)|-1 (vertex order of H). nullopt if H has no such
// explanation. Throws std::invalid_argument if H is not prime or |V(H)| < 4.
std::optional<GalledTree> explain_prime_by_elementary(const Graph& h);

// Leaves of the result are nodes 0..n-1 in vertex order, carrying G's names.
PvrNetwork build_pvr(const Graph& g);

// Same DAG with all inner labels flipped; explains the complement.
PvrNetwork complement_labeling(const PvrNetwork& p);

bool is_gatex(const Graph& g);

}  // namespace gatex
