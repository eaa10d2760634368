#pragma once

#include "gatex/galled_tree.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace gatex {

// Flat copy of what the ordering and clique passes read from a pvr-shaped
// network: labels, children in CSR form, cycle links and the postorder of the
// tree part (every node not strictly inside a cycle). Indexed by node id.
class NetworkView {
public:
	NetworkView() = default;
	NetworkView(const GalledTree& net, const std::vector<CycleDescriptor>& cyc);

	std::size_t size() const { return label_.size(); }
	NodeId root() const { return root_; }
	Label label(NodeId x) const { return static_cast<Label>(label_[at(x)]); }
	bool is_leaf(NodeId x) const { return label(x) == Label::Odot; }
	std::span<const NodeId> children(NodeId x) const {
		return {kids_.data() + kid_begin_[at(x)], kids_.data() + kid_begin_[at(x) + 1]};
	}
	// Graph vertex of a leaf (rank among leaves by node id); -1 otherwise.
	int vertex(NodeId x) const { return vertex_[at(x)]; }
	int leaf_count() const { return leaf_count_; }
	// Cycle whose root is x, or -1.
	int root_cycle(NodeId x) const { return root_cycle_[at(x)]; }
	// Children of a cycle vertex other than its root, on and off the cycle
	// (-1 for the hybrid's on-cycle child).
	NodeId on(NodeId x) const { return on_child_[at(x)]; }
	NodeId off(NodeId x) const { return off_child_[at(x)]; }
	const std::vector<NodeId>& postorder() const { return postorder_; }

	// Copy with all inner labels flipped.
	NetworkView flipped() const;

private:
	static std::size_t at(NodeId x) { return static_cast<std::size_t>(x); }

	std::vector<std::uint8_t> label_;
	std::vector<int> kid_begin_;
	std::vector<NodeId> kids_;
	std::vector<int> vertex_;
	std::vector<int> root_cycle_;
	std::vector<NodeId> on_child_, off_child_;
	std::vector<NodeId> postorder_;
	NodeId root_ = -1;
	int leaf_count_ = 0;
};

}  // namespace gatex
