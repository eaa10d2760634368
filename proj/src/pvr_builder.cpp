#include "gatex/pvr_builder.hpp"

#include <algorithm>
#include <map>

namespace gatex {

NotGatexError::NotGatexError(VertexSet witness)
	: std::runtime_error("graph is not GaTEx: prime module of size " + std::to_string(witness.size()) +
	                     " has no elementary galled-tree explanation"),
	  witness_(std::move(witness)) {}

namespace {

bool is_prime_graph(const Graph& h) {
	if (h.size() < 2) return false;
	auto tree = build_mdt(h);
	if (tree.node(tree.root()).label != MdLabel::Prime) return false;
	return tree.node(tree.root()).children.size() == static_cast<std::size_t>(h.size());
}

// Top-down order of one side. The leaf at position i is adjacent to every
// leaf below it on the side (and to the hybrid's leaf) iff its label is 1,
// and labels alternate starting from `first`.
std::optional<std::vector<Vertex>> forced_side_order(const Graph& h, VertexSet side, Vertex hybrid_leaf, Label first) {
	std::vector<Vertex> order;
	Label want = first;
	while (!side.empty()) {
		const bool joined = want == Label::One;
		Vertex pick = -1;
		for (Vertex x : side) {
			bool ok = h.adjacent(x, hybrid_leaf) == joined;
			for (Vertex y : side)
				if (ok && y != x && h.adjacent(x, y) != joined) ok = false;
			if (ok) {
				pick = x;
				break;
			}
		}
		if (pick == -1) return std::nullopt;
		order.push_back(pick);
		side.erase(std::find(side.begin(), side.end(), pick));
		want = flip(want);
	}
	return order;
}

GalledTree elementary_network(const Graph& h, Label root_label, Vertex hybrid_leaf, std::vector<Vertex> a, std::vector<Vertex> b) {
	GalledTree net;
	for (int v = 0; v < h.size(); ++v) net.add_node(NodeKind::Leaf, Label::Odot, h.has_names() ? h.name(v) : std::string{});
	if (b.front() < a.front()) std::swap(a, b);
	const NodeId rho = net.add_node(NodeKind::Root, root_label);
	std::vector<NodeId> side_a, side_b;
	Label l = flip(root_label);
	for (std::size_t i = 0; i < a.size(); ++i, l = flip(l)) side_a.push_back(net.add_node(NodeKind::Tree, l));
	l = flip(root_label);
	for (std::size_t i = 0; i < b.size(); ++i, l = flip(l)) side_b.push_back(net.add_node(NodeKind::Tree, l));
	const NodeId eta = net.add_node(NodeKind::Hybrid, Label::Zero);
	for (const auto* side : {&side_a, &side_b}) {
		const auto& verts = side == &side_a ? a : b;
		net.add_edge(rho, side->front());
		for (std::size_t i = 0; i < side->size(); ++i) {
			net.add_edge((*side)[i], i + 1 < side->size() ? (*side)[i + 1] : eta);
			net.add_edge((*side)[i], verts[i]);
		}
	}
	net.add_edge(eta, hybrid_leaf);
	return net;
}

bool same_edges(const Graph& a, const Graph& b) {
	return a.size() == b.size() && a.edges() == b.edges();
}

}  // namespace

std::optional<GalledTree> explain_prime_by_elementary(const Graph& h) {
	if (h.size() < 4) throw std::invalid_argument("explain_prime_by_elementary: prime graphs have at least 4 vertices");
	if (!is_prime_graph(h)) throw std::invalid_argument("explain_prime_by_elementary: input graph is not prime");

	for (Label root_label : {Label::Zero, Label::One}) {
		for (Vertex hybrid_leaf = 0; hybrid_leaf < h.size(); ++hybrid_leaf) {
			VertexSet rest;
			for (int v = 0; v < h.size(); ++v)
				if (v != hybrid_leaf) rest.push_back(v);
			Graph sub = induced_subgraph(h, rest);
			// Cross-side pairs all meet at the root, so the sides are the
			// (co-)components of H minus the hybrid's leaf.
			auto parts = root_label == Label::Zero ? connected_components(sub) : co_components(sub);
			if (parts.size() != 2) continue;
			std::vector<std::vector<Vertex>> orders;
			for (const auto& local : parts) {
				VertexSet side;
				for (Vertex x : local) side.push_back(rest[static_cast<std::size_t>(x)]);
				auto order = forced_side_order(h, side, hybrid_leaf, flip(root_label));
				if (!order) break;
				orders.push_back(std::move(*order));
			}
			if (orders.size() != 2) continue;
			GalledTree net = elementary_network(h, root_label, hybrid_leaf, orders[0], orders[1]);
			if (!validate(net, true).empty()) continue;
			auto cls = classify(net);
			if (!cls.elementary || !cls.strong || !cls.quasi_discriminating) continue;
			if (!same_edges(explain(net), h)) continue;
			return net;
		}
	}
	return std::nullopt;
}

PvrNetwork build_pvr(const Graph& g) {
	PvrNetwork out;
	out.mdt = build_mdt(g);
	const auto& mdt = out.mdt;
	GalledTree& net = out.network;
	for (int v = 0; v < g.size(); ++v) net.add_node(NodeKind::Leaf, Label::Odot, g.has_names() ? g.name(v) : std::string{});

	out.mdt_to_network.assign(mdt.size(), -1);
	out.cycle_of_mdt.assign(mdt.size(), -1);
	for (std::size_t i = 0; i < mdt.size(); ++i) {
		const auto& nd = mdt.nodes[i];
		if (nd.label == MdLabel::Leaf) {
			out.mdt_to_network[i] = nd.module.front();
			continue;
		}
		const NodeKind kind = i == 0 ? NodeKind::Root : NodeKind::Tree;
		const Label label = nd.label == MdLabel::Series ? Label::One : Label::Zero;
		out.mdt_to_network[i] = net.add_node(kind, label);
	}

	for (std::size_t i = 0; i < mdt.size(); ++i) {
		const auto& nd = mdt.nodes[i];
		const NodeId here = out.mdt_to_network[i];
		if (nd.label == MdLabel::Parallel || nd.label == MdLabel::Series) {
			for (int c : nd.children) net.add_edge(here, out.mdt_to_network[static_cast<std::size_t>(c)]);
			continue;
		}
		if (nd.label != MdLabel::Prime) continue;

		std::vector<Edge> qedges;
		for (std::size_t a = 0; a < nd.children.size(); ++a)
			for (std::size_t b = a + 1; b < nd.children.size(); ++b) {
				Vertex x = mdt.node(nd.children[a]).module.front();
				Vertex y = mdt.node(nd.children[b]).module.front();
				if (g.adjacent(x, y)) qedges.emplace_back(static_cast<int>(a), static_cast<int>(b));
			}
		Graph h(static_cast<int>(nd.children.size()), qedges);
		auto elem = explain_prime_by_elementary(h);
		if (!elem) throw NotGatexError(nd.module);

		// Splice: elementary root becomes this node, its leaves become the
		// MDT children, everything else is copied.
		std::vector<NodeId> map(elem->size(), -1);
		for (std::size_t k = 0; k < nd.children.size(); ++k)
			map[k] = out.mdt_to_network[static_cast<std::size_t>(nd.children[k])];
		const NodeId elem_root = elem->root();
		map[static_cast<std::size_t>(elem_root)] = here;
		net.set_label(here, elem->label(elem_root));
		for (std::size_t k = 0; k < elem->size(); ++k)
			if (map[k] == -1) map[k] = net.add_node(elem->kind(static_cast<NodeId>(k)), elem->label(static_cast<NodeId>(k)));
		for (std::size_t k = 0; k < elem->size(); ++k)
			for (NodeId c : elem->children(static_cast<NodeId>(k))) net.add_edge(map[k], map[static_cast<std::size_t>(c)]);
	}

	if (g.size() == 1) {
		out.view = NetworkView(net, out.cycles);
		return out;
	}
	out.cycles = gatex::cycles(net);
	out.mdt_of_cycle.assign(out.cycles.size(), -1);
	std::map<NodeId, int> by_root;
	for (std::size_t c = 0; c < out.cycles.size(); ++c) by_root[out.cycles[c].rho] = static_cast<int>(c);
	for (std::size_t i = 0; i < mdt.size(); ++i) {
		if (mdt.nodes[i].label != MdLabel::Prime) continue;
		int c = by_root.at(out.mdt_to_network[i]);
		out.cycle_of_mdt[i] = c;
		out.mdt_of_cycle[static_cast<std::size_t>(c)] = static_cast<int>(i);
	}
	out.view = NetworkView(net, out.cycles);
	return out;
}

PvrNetwork PvrNetwork::from_network(GalledTree network) {
	auto problems = validate(network, true);
	if (!problems.empty()) throw std::invalid_argument("from_network: " + to_string(problems.front()));
	PvrNetwork out;
	out.network = std::move(network);
	const GalledTree& net = out.network;
	out.mdt = build_mdt(explain(net));
	out.mdt_to_network.assign(out.mdt.size(), -1);
	out.cycle_of_mdt.assign(out.mdt.size(), -1);
	if (net.size() == 1) {
		out.mdt_to_network[0] = 0;
		out.view = NetworkView(net, out.cycles);
		return out;
	}
	out.cycles = gatex::cycles(net);
	out.mdt_of_cycle.assign(out.cycles.size(), -1);
	const auto member = cycle_membership(net, out.cycles);
	std::vector<int> root_cycle(net.size(), -1);
	for (std::size_t c = 0; c < out.cycles.size(); ++c) root_cycle[static_cast<std::size_t>(out.cycles[c].rho)] = static_cast<int>(c);

	const auto sets = leaf_sets(net);
	std::map<VertexSet, NodeId> tree_nodes;
	for (std::size_t x = 0; x < net.size(); ++x) {
		if (member[x] != -1) continue;
		if (!tree_nodes.emplace(sets[x], static_cast<NodeId>(x)).second)
			throw std::invalid_argument("from_network: two tree nodes share a leaf set");
	}
	if (tree_nodes.size() != out.mdt.size())
		throw std::invalid_argument("from_network: tree part of the network differs from the modular decomposition");
	for (std::size_t i = 0; i < out.mdt.size(); ++i) {
		const auto& nd = out.mdt.nodes[i];
		auto it = tree_nodes.find(nd.module);
		if (it == tree_nodes.end())
			throw std::invalid_argument("from_network: strong module without a matching network node");
		const NodeId x = it->second;
		out.mdt_to_network[i] = x;
		const bool is_root_of_cycle = root_cycle[static_cast<std::size_t>(x)] != -1;
		if ((nd.label == MdLabel::Prime) != is_root_of_cycle)
			throw std::invalid_argument("from_network: prime modules and cycle roots do not correspond");
		if (nd.label == MdLabel::Prime) {
			out.cycle_of_mdt[i] = root_cycle[static_cast<std::size_t>(x)];
			out.mdt_of_cycle[static_cast<std::size_t>(out.cycle_of_mdt[i])] = static_cast<int>(i);
		} else if (nd.label != MdLabel::Leaf) {
			const Label want = nd.label == MdLabel::Series ? Label::One : Label::Zero;
			if (net.label(x) != want) throw std::invalid_argument("from_network: label differs from the modular decomposition");
		}
	}
	out.view = NetworkView(net, out.cycles);
	return out;
}

PvrNetwork complement_labeling(const PvrNetwork& p) {
	PvrNetwork out = p;
	for (std::size_t x = 0; x < out.network.size(); ++x) {
		const auto id = static_cast<NodeId>(x);
		out.network.set_label(id, flip(out.network.label(id)));
	}
	for (auto& nd : out.mdt.nodes) {
		if (nd.label == MdLabel::Parallel) nd.label = MdLabel::Series;
		else if (nd.label == MdLabel::Series) nd.label = MdLabel::Parallel;
	}
	out.view = p.view.flipped();
	return out;
}

bool is_gatex(const Graph& g) {
	if (g.empty()) return true;
	try {
		build_pvr(g);
		return true;
	} catch (const NotGatexError&) {
		return false;
	}
}

}  // namespace gatex
