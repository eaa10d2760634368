#include "gatex/order_color.hpp"

#include <algorithm>
#include <span>
#include <stdexcept>

namespace gatex {

std::vector<int> VertexOrder::positions() const {
	std::vector<int> pos(sequence.size(), -1);
	for (std::size_t i = 0; i < sequence.size(); ++i) {
		const auto v = static_cast<std::size_t>(sequence[i]);
		if (v >= pos.size() || pos[v] != -1) throw std::invalid_argument("order is not a permutation of the vertex set");
		pos[v] = static_cast<int>(i);
	}
	return pos;
}

namespace {

void check_permutation(const std::vector<NodeId>& got, std::vector<NodeId> want, NodeId at) {
	std::vector<NodeId> sorted(got);
	std::sort(sorted.begin(), sorted.end());
	std::sort(want.begin(), want.end());
	if (sorted != want)
		throw std::invalid_argument("concat_order for node " + std::to_string(at) + " is not a permutation of the expected nodes");
}

}  // namespace

VertexOrder perfect_order(const NetworkView& view, const std::vector<CycleDescriptor>& cyc, const TieBreaks& ties) {
	VertexOrder out;
	const auto n_vertices = static_cast<std::size_t>(view.leaf_count());
	if (n_vertices == 0) return out;

	// Linked sequence over graph vertices; each processed node holds the
	// (first, last) handles of its suborder.
	std::vector<int> next(n_vertices, -1);
	std::vector<int> first(view.size(), -1), last(view.size(), -1);
	auto concat = [&](NodeId target, std::span<const NodeId> parts) {
		int head = -1, tail = -1;
		for (NodeId p : parts) {
			const int f = first[static_cast<std::size_t>(p)];
			const int l = last[static_cast<std::size_t>(p)];
			if (head == -1) head = f;
			else next[static_cast<std::size_t>(tail)] = f;
			tail = l;
		}
		first[static_cast<std::size_t>(target)] = head;
		last[static_cast<std::size_t>(target)] = tail;
	};
	auto inherit = [&](NodeId w, NodeId u) {
		first[static_cast<std::size_t>(w)] = first[static_cast<std::size_t>(u)];
		last[static_cast<std::size_t>(w)] = last[static_cast<std::size_t>(u)];
	};

	std::vector<NodeId> inner;
	for (NodeId v : view.postorder()) {
		if (view.is_leaf(v)) {
			first[static_cast<std::size_t>(v)] = last[static_cast<std::size_t>(v)] = view.vertex(v);
			continue;
		}
		const int c = view.root_cycle(v);
		const auto pick = ties.empty() ? ties.concat_order.end() : ties.concat_order.find(v);
		if (c == -1) {
			if (pick == ties.concat_order.end()) {
				concat(v, view.children(v));
			} else {
				check_permutation(pick->second, {view.children(v).begin(), view.children(v).end()}, v);
				concat(v, pick->second);
			}
			continue;
		}
		const auto& cd = cyc[static_cast<std::size_t>(c)];
		// Each cycle vertex inherits the suborder of its off-cycle child.
		inner.clear();
		for (const auto* side : {&cd.side1, &cd.side2})
			for (std::size_t i = 1; i + 1 < side->size(); ++i) {
				const NodeId w = (*side)[i];
				inherit(w, view.off(w));
				inner.push_back(w);
			}
		inherit(cd.eta, view.off(cd.eta));
		if (pick != ties.concat_order.end()) {
			check_permutation(pick->second, inner, v);
			inner = pick->second;
		}
		if (view.label(v) == Label::Zero) inner.insert(inner.begin(), cd.eta);
		else inner.push_back(cd.eta);
		concat(v, inner);
	}

	const NodeId root = view.root();
	out.sequence.reserve(n_vertices);
	for (int x = first[static_cast<std::size_t>(root)]; x != -1; x = next[static_cast<std::size_t>(x)]) {
		out.sequence.push_back(x);
		if (x == last[static_cast<std::size_t>(root)]) break;
	}
	if (out.sequence.size() != n_vertices) throw std::logic_error("perfect_order: suborders do not cover all leaves");
	return out;
}

VertexOrder perfect_order(const GalledTree& net, const std::vector<CycleDescriptor>& cyc, const TieBreaks& ties) {
	if (net.size() == 0) return {};
	return perfect_order(NetworkView(net, cyc), cyc, ties);
}

VertexOrder perfect_order(const PvrNetwork& p, const TieBreaks& ties) { return perfect_order(p.view, p.cycles, ties); }

Coloring greedy_color(const Graph& g, const VertexOrder& order) {
	if (order.sequence.size() != static_cast<std::size_t>(g.size()))
		throw std::invalid_argument("greedy_color: order length differs from the vertex count");
	order.positions();
	Coloring out;
	out.color.assign(static_cast<std::size_t>(g.size()), 0);
	std::vector<int> seen(static_cast<std::size_t>(g.size()) + 2, -1);
	for (Vertex v : order.sequence) {
		for (Vertex u : g.neighbors(v)) {
			const int c = out.color[static_cast<std::size_t>(u)];
			if (c > 0) seen[static_cast<std::size_t>(c)] = v;
		}
		int c = 1;
		while (seen[static_cast<std::size_t>(c)] == v) ++c;
		out.color[static_cast<std::size_t>(v)] = c;
		out.num_colors = std::max(out.num_colors, c);
	}
	return out;
}

std::pair<int, Coloring> chromatic_number(const Graph& g) {
	if (g.empty()) return {0, Coloring{}};
	auto p = build_pvr(g);
	auto col = greedy_color(g, perfect_order(p));
	return {col.num_colors, col};
}

bool is_perfect_order(const Graph& g, const VertexOrder& order) {
	if (order.sequence.size() != static_cast<std::size_t>(g.size()))
		throw std::invalid_argument("is_perfect_order: order length differs from the vertex count");
	const auto pos = order.positions();
	auto before = [&](Vertex x, Vertex y) { return pos[static_cast<std::size_t>(x)] < pos[static_cast<std::size_t>(y)]; };
	for (const auto& p : list_induced_p4s(g)) {
		// Obstruction: both ends precede their inner neighbors. Symmetric in
		// the reading direction of the path.
		if (before(p[0], p[1]) && before(p[3], p[2])) return false;
	}
	return true;
}

}  // namespace gatex
