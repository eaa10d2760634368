#pragma once

#include "gatex/galled_tree.hpp"

#include <map>
#include <vector>

namespace gatex {

// Explicit choices for the points where the ordering and clique algorithms
// may pick freely. Absent entries fall back to the defaults: stored child
// order / side1-then-side2 for concatenation, smallest node id for argmax.
struct TieBreaks {
	// Ordering: for a non-cycle node, a permutation of its children; for a
	// cycle root, a permutation of the cycle vertices other than rho and eta.
	std::map<NodeId, std::vector<NodeId>> concat_order;
	// Clique: node at which an argmax is taken -> the child to mark. Must be
	// one of the maximizers.
	std::map<NodeId, NodeId> argmax_pick;

	bool empty() const { return concat_order.empty() && argmax_pick.empty(); }
};

}  // namespace gatex
