#include "gatex/network_view.hpp"

#include <stdexcept>
#include <utility>

namespace gatex {

NetworkView::NetworkView(const GalledTree& net, const std::vector<CycleDescriptor>& cyc) {
	const std::size_t n = net.size();
	label_.resize(n);
	kid_begin_.resize(n + 1);
	vertex_.assign(n, -1);
	root_cycle_.assign(n, -1);
	on_child_.assign(n, -1);
	off_child_.assign(n, -1);
	for (std::size_t x = 0; x < n; ++x) {
		const auto id = static_cast<NodeId>(x);
		label_[x] = static_cast<std::uint8_t>(net.label(id));
		kid_begin_[x] = static_cast<int>(kids_.size());
		kids_.insert(kids_.end(), net.children(id).begin(), net.children(id).end());
		if (net.is_leaf(id)) vertex_[x] = leaf_count_++;
	}
	kid_begin_[n] = static_cast<int>(kids_.size());
	root_ = net.root();
	if (root_ < 0) throw std::invalid_argument("network has no unique root");

	const auto member = cycle_membership(net, cyc);
	for (std::size_t c = 0; c < cyc.size(); ++c) root_cycle_[at(cyc[c].rho)] = static_cast<int>(c);
	for (std::size_t x = 0; x < n; ++x) {
		const int c = member[x];
		if (c == -1) continue;
		for (NodeId k : children(static_cast<NodeId>(x))) (member[at(k)] == c ? on_child_ : off_child_)[x] = k;
	}

	postorder_.reserve(n);
	std::vector<std::pair<NodeId, bool>> stack{{root_, false}};
	std::vector<NodeId> kids;
	while (!stack.empty()) {
		auto [x, expanded] = stack.back();
		stack.pop_back();
		if (expanded) {
			postorder_.push_back(x);
			continue;
		}
		stack.emplace_back(x, true);
		kids.clear();
		const int c = root_cycle_[at(x)];
		if (c == -1) {
			for (NodeId k : children(x)) kids.push_back(k);
		} else {
			const auto& cd = cyc[static_cast<std::size_t>(c)];
			for (const auto* side : {&cd.side1, &cd.side2})
				for (std::size_t i = 1; i + 1 < side->size(); ++i) kids.push_back(off((*side)[i]));
			kids.push_back(off(cd.eta));
		}
		for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.emplace_back(*it, false);
	}
}

NetworkView NetworkView::flipped() const {
	NetworkView out = *this;
	for (auto& l : out.label_) l = static_cast<std::uint8_t>(flip(static_cast<Label>(l)));
	return out;
}

}  // namespace gatex
