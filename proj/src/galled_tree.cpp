#include "gatex/galled_tree.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace gatex {

std::string to_string(NodeKind kind) {
	switch (kind) {
	case NodeKind::Root: return "root";
	case NodeKind::Tree: return "tree";
	case NodeKind::Hybrid: return "hybrid";
	case NodeKind::Leaf: return "leaf";
	}
	return "?";
}

std::string to_string(Label label) {
	switch (label) {
	case Label::Zero: return "0";
	case Label::One: return "1";
	case Label::Odot: return "leaf";
	}
	return "?";
}

NodeKind parse_kind(const std::string& s) {
	if (s == "root") return NodeKind::Root;
	if (s == "tree") return NodeKind::Tree;
	if (s == "hybrid") return NodeKind::Hybrid;
	if (s == "leaf") return NodeKind::Leaf;
	throw std::invalid_argument("unknown node kind '" + s + "'");
}

Label parse_label(const std::string& s) {
	if (s == "0") return Label::Zero;
	if (s == "1") return Label::One;
	if (s == "leaf") return Label::Odot;
	throw std::invalid_argument("unknown node label '" + s + "'");
}

NodeId GalledTree::add_node(NodeKind kind, Label label, std::string name) {
	nodes_.push_back({kind, label, std::move(name), {}, {}});
	return static_cast<NodeId>(nodes_.size() - 1);
}

void GalledTree::add_edge(NodeId parent, NodeId child) {
	const auto n = static_cast<NodeId>(nodes_.size());
	if (parent < 0 || child < 0 || parent >= n || child >= n) throw std::invalid_argument("add_edge: node id out of range");
	if (parent == child) throw std::invalid_argument("add_edge: self-loop at node " + std::to_string(parent));
	auto& kids = nodes_[static_cast<std::size_t>(parent)].children;
	if (std::find(kids.begin(), kids.end(), child) != kids.end())
		throw std::invalid_argument("add_edge: duplicate edge " + std::to_string(parent) + "->" + std::to_string(child));
	kids.push_back(child);
	nodes_[static_cast<std::size_t>(child)].parents.push_back(parent);
}

std::size_t GalledTree::edge_count() const {
	std::size_t m = 0;
	for (const auto& nd : nodes_) m += nd.children.size();
	return m;
}

NodeId GalledTree::root() const {
	NodeId found = -1;
	for (std::size_t i = 0; i < nodes_.size(); ++i)
		if (nodes_[i].parents.empty()) {
			if (found != -1) return -1;
			found = static_cast<NodeId>(i);
		}
	return found;
}

std::vector<NodeId> GalledTree::leaves() const {
	std::vector<NodeId> out;
	for (std::size_t i = 0; i < nodes_.size(); ++i)
		if (nodes_[i].kind == NodeKind::Leaf) out.push_back(static_cast<NodeId>(i));
	return out;
}

std::string GalledTree::leaf_name(NodeId leaf) const {
	if (!node(leaf).name.empty()) return node(leaf).name;
	int index = 0;
	for (NodeId i = 0; i < leaf; ++i)
		if (kind(i) == NodeKind::Leaf) ++index;
	return std::to_string(index);
}

bool operator==(const GalledTree& a, const GalledTree& b) {
	if (a.nodes_.size() != b.nodes_.size()) return false;
	for (std::size_t i = 0; i < a.nodes_.size(); ++i) {
		const auto& x = a.nodes_[i];
		const auto& y = b.nodes_[i];
		if (x.kind != y.kind || x.label != y.label || x.name != y.name || x.children != y.children) return false;
	}
	return true;
}

std::string to_string(const Violation& v) {
	std::string s = "(" + v.axiom + ")";
	if (v.node >= 0) s += " node " + std::to_string(v.node);
	if (!v.detail.empty()) s += ": " + v.detail;
	return s;
}

std::vector<NodeId> CycleDescriptor::internal() const {
	std::vector<NodeId> out;
	for (std::size_t i = 1; i + 1 < side1.size(); ++i) out.push_back(side1[i]);
	for (std::size_t i = 1; i + 1 < side2.size(); ++i) out.push_back(side2[i]);
	return out;
}

bool CycleDescriptor::contains(NodeId x) const {
	return std::find(side1.begin(), side1.end(), x) != side1.end() || std::find(side2.begin(), side2.end(), x) != side2.end();
}

int CycleDescriptor::side_of(NodeId x) const {
	if (x == rho || x == eta) return 0;
	if (std::find(side1.begin(), side1.end(), x) != side1.end()) return 1;
	if (std::find(side2.begin(), side2.end(), x) != side2.end()) return 2;
	return 0;
}

namespace {

// Kahn order; empty if the graph has a directed cycle.
std::vector<NodeId> topological_order(const GalledTree& n) {
	std::vector<int> indeg(n.size());
	std::vector<NodeId> order;
	for (std::size_t i = 0; i < n.size(); ++i) {
		indeg[i] = static_cast<int>(n.parents(static_cast<NodeId>(i)).size());
		if (indeg[i] == 0) order.push_back(static_cast<NodeId>(i));
	}
	for (std::size_t head = 0; head < order.size(); ++head)
		for (NodeId c : n.children(order[head]))
			if (--indeg[static_cast<std::size_t>(c)] == 0) order.push_back(c);
	if (order.size() != n.size()) order.clear();
	return order;
}

// Vertex sets of the biconnected components of the underlying undirected
// graph that have at least two edges.
std::vector<std::vector<NodeId>> nontrivial_blocks(const GalledTree& n) {
	struct Arc {
		NodeId to;
		int edge;
	};
	const std::size_t sz = n.size();
	std::vector<std::vector<Arc>> adj(sz);
	std::vector<std::pair<NodeId, NodeId>> edge_list;
	for (std::size_t u = 0; u < sz; ++u)
		for (NodeId c : n.children(static_cast<NodeId>(u))) {
			int e = static_cast<int>(edge_list.size());
			edge_list.emplace_back(static_cast<NodeId>(u), c);
			adj[u].push_back({c, e});
			adj[static_cast<std::size_t>(c)].push_back({static_cast<NodeId>(u), e});
		}

	std::vector<int> disc(sz, -1), low(sz, 0);
	std::vector<int> edge_stack;
	std::vector<std::vector<NodeId>> blocks;
	int timer = 0;
	struct Frame {
		NodeId v;
		int parent_edge;
		std::size_t next;
	};
	std::vector<Frame> stack;
	for (std::size_t s = 0; s < sz; ++s) {
		if (disc[s] != -1) continue;
		disc[s] = low[s] = timer++;
		stack.push_back({static_cast<NodeId>(s), -1, 0});
		while (!stack.empty()) {
			Frame& f = stack.back();
			const auto v = static_cast<std::size_t>(f.v);
			if (f.next < adj[v].size()) {
				Arc a = adj[v][f.next++];
				if (a.edge == f.parent_edge) continue;
				const auto w = static_cast<std::size_t>(a.to);
				if (disc[w] == -1) {
					edge_stack.push_back(a.edge);
					disc[w] = low[w] = timer++;
					stack.push_back({a.to, a.edge, 0});
				} else if (disc[w] < disc[v]) {
					edge_stack.push_back(a.edge);
					low[v] = std::min(low[v], disc[w]);
				}
				continue;
			}
			const int parent_edge = f.parent_edge;
			stack.pop_back();
			if (stack.empty()) break;
			const auto u = static_cast<std::size_t>(stack.back().v);
			low[u] = std::min(low[u], low[v]);
			if (low[v] >= disc[u]) {
				std::vector<int> block_edges;
				while (true) {
					int e = edge_stack.back();
					edge_stack.pop_back();
					block_edges.push_back(e);
					if (e == parent_edge) break;
				}
				if (block_edges.size() >= 2) {
					std::vector<NodeId> verts;
					for (int e : block_edges) {
						verts.push_back(edge_list[static_cast<std::size_t>(e)].first);
						verts.push_back(edge_list[static_cast<std::size_t>(e)].second);
					}
					std::sort(verts.begin(), verts.end());
					verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
					blocks.push_back(std::move(verts));
				}
			}
		}
	}
	return blocks;
}

struct BlockShape {
	bool ok = false;
	std::string problem;
	CycleDescriptor cycle;
};

BlockShape analyze_block(const GalledTree& n, const std::vector<NodeId>& verts) {
	BlockShape out;
	auto in_block = [&](NodeId x) { return std::binary_search(verts.begin(), verts.end(), x); };
	std::vector<NodeId> sources, sinks;
	for (NodeId x : verts) {
		int up = 0, down = 0;
		for (NodeId p : n.parents(x)) up += in_block(p);
		for (NodeId c : n.children(x)) down += in_block(c);
		if (up + down != 2) {
			out.problem = "biconnected component is not a simple cycle";
			return out;
		}
		if (up == 0) sources.push_back(x);
		if (up == 2) sinks.push_back(x);
	}
	if (sinks.size() != 1 || sources.size() != 1) {
		out.problem = "cycle must have one root and one hybrid";
		return out;
	}
	CycleDescriptor c;
	c.rho = sources.front();
	c.eta = sinks.front();
	std::vector<std::vector<NodeId>> sides;
	for (NodeId first : n.children(c.rho)) {
		if (!in_block(first)) continue;
		std::vector<NodeId> side{c.rho, first};
		NodeId cur = first;
		while (cur != c.eta) {
			NodeId next = -1;
			for (NodeId ch : n.children(cur))
				if (in_block(ch)) next = ch;
			if (next == -1) {
				out.problem = "cycle side does not reach the hybrid";
				return out;
			}
			side.push_back(next);
			cur = next;
		}
		sides.push_back(std::move(side));
	}
	if (sides.size() != 2) {
		out.problem = "cycle root must have two cycle children";
		return out;
	}
	if (sides[1][1] < sides[0][1]) std::swap(sides[0], sides[1]);
	c.side1 = std::move(sides[0]);
	c.side2 = std::move(sides[1]);
	out.cycle = std::move(c);
	out.ok = true;
	return out;
}

std::vector<Violation> validate_cycles(const GalledTree& n, std::vector<CycleDescriptor>* found) {
	std::vector<Violation> out;
	for (const auto& block : nontrivial_blocks(n)) {
		int inner_hybrids = 0;
		auto in_block = [&](NodeId x) { return std::binary_search(block.begin(), block.end(), x); };
		for (NodeId x : block) {
			const auto& ps = n.parents(x);
			if (ps.size() == 2 && in_block(ps[0]) && in_block(ps[1])) ++inner_hybrids;
		}
		if (inner_hybrids > 1)
			out.push_back({"N4", block.front(), "biconnected component contains " + std::to_string(inner_hybrids) + " hybrids"});
		auto shape = analyze_block(n, block);
		if (!shape.ok) out.push_back({"cycle", block.front(), shape.problem});
		else if (found) found->push_back(std::move(shape.cycle));
	}
	return out;
}

}  // namespace

std::vector<Violation> validate(const GalledTree& n, bool pvr_shaped) {
	std::vector<Violation> out;
	if (n.size() == 0) {
		out.push_back({"N0", -1, "empty network"});
		return out;
	}
	if (n.size() == 1) {
		if (n.kind(0) != NodeKind::Leaf) out.push_back({"N0", 0, "single vertex must be a leaf"});
		if (n.label(0) != Label::Odot) out.push_back({"label", 0, "leaf must carry the leaf label"});
		return out;
	}
	if (topological_order(n).empty()) {
		out.push_back({"DAG", -1, "network contains a directed cycle"});
		return out;
	}
	const NodeId root = n.root();
	if (root == -1) out.push_back({"N1", -1, "root is not unique"});
	for (std::size_t i = 0; i < n.size(); ++i) {
		const auto x = static_cast<NodeId>(i);
		const auto in = n.parents(x).size();
		const auto outd = n.children(x).size();
		const NodeKind k = n.kind(x);
		if (in == 0) {
			if (outd < 2) out.push_back({"N1", x, "root has outdegree < 2"});
			if (k != NodeKind::Root) out.push_back({"N1", x, "indegree-0 vertex not marked root"});
		} else if (outd == 0) {
			if (in != 1) out.push_back({"N2", x, "leaf must have indegree 1"});
			if (k != NodeKind::Leaf) out.push_back({"N2", x, "outdegree-0 vertex not marked leaf"});
		} else if (in == 1) {
			if (outd < 2) out.push_back({"N3", x, "tree-vertex has outdegree < 2"});
			if (k != NodeKind::Tree) out.push_back({"N3", x, "indegree-1 inner vertex not marked tree"});
		} else if (in == 2) {
			if (k != NodeKind::Hybrid) out.push_back({"N3", x, "indegree-2 vertex not marked hybrid"});
		} else {
			out.push_back({"N3", x, "indegree > 2"});
		}
		if ((k == NodeKind::Leaf) != (n.label(x) == Label::Odot))
			out.push_back({"label", x, "leaf label must be used exactly on leaves"});
	}
	std::vector<CycleDescriptor> cyc;
	auto cv = validate_cycles(n, &cyc);
	out.insert(out.end(), cv.begin(), cv.end());
	if (!pvr_shaped || !out.empty()) return out;
	for (const auto& c : cyc) {
		if (n.children(c.eta).size() != 1) out.push_back({"pvr", c.eta, "hybrid must have exactly one child"});
		if (n.children(c.rho).size() != 2) out.push_back({"pvr", c.rho, "cycle root must have exactly two children"});
		for (NodeId w : c.internal()) {
			const auto& kids = n.children(w);
			int on = 0;
			for (NodeId k : kids) on += c.contains(k);
			if (kids.size() != 2 || on != 1)
				out.push_back({"pvr", w, "cycle vertex must have one child on and one child off the cycle"});
		}
	}
	return out;
}

std::vector<CycleDescriptor> cycles(const GalledTree& n) {
	auto problems = validate(n, false);
	if (!problems.empty()) throw std::invalid_argument("cycles: invalid network " + to_string(problems.front()));
	std::vector<CycleDescriptor> out;
	validate_cycles(n, &out);
	std::sort(out.begin(), out.end(), [](const CycleDescriptor& a, const CycleDescriptor& b) {
		return a.rho != b.rho ? a.rho < b.rho : a.side1[1] < b.side1[1];
	});
	return out;
}

std::vector<int> cycle_membership(const GalledTree& n, const std::vector<CycleDescriptor>& cyc) {
	std::vector<int> member(n.size(), -1);
	for (std::size_t i = 0; i < cyc.size(); ++i) {
		for (std::size_t k = 1; k < cyc[i].side1.size(); ++k) member[static_cast<std::size_t>(cyc[i].side1[k])] = static_cast<int>(i);
		for (std::size_t k = 1; k < cyc[i].side2.size(); ++k) member[static_cast<std::size_t>(cyc[i].side2[k])] = static_cast<int>(i);
	}
	return member;
}

NodeId off_cycle_child(const GalledTree& n, const CycleDescriptor& c, NodeId w) {
	for (NodeId k : n.children(w))
		if (!c.contains(k)) return k;
	return -1;
}

NodeId on_cycle_child(const GalledTree& n, const CycleDescriptor& c, NodeId w) {
	if (w == c.eta) return -1;
	for (NodeId k : n.children(w))
		if (c.contains(k)) return k;
	return -1;
}

NodeId lca(const GalledTree& n, const std::vector<NodeId>& leaves) {
	if (leaves.empty()) throw std::invalid_argument("lca: empty leaf set");
	std::vector<NodeId> distinct(leaves);
	std::sort(distinct.begin(), distinct.end());
	distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
	for (NodeId a : distinct)
		if (a < 0 || static_cast<std::size_t>(a) >= n.size() || !n.is_leaf(a))
			throw std::invalid_argument("lca: argument is not a leaf");

	// count[x] = number of arguments below x; common ancestors have the full count.
	std::vector<int> count(n.size(), 0);
	std::vector<int> stamp(n.size(), -1);
	std::vector<NodeId> queue;
	for (std::size_t round = 0; round < distinct.size(); ++round) {
		const auto r = static_cast<int>(round);
		queue.assign(1, distinct[round]);
		stamp[static_cast<std::size_t>(distinct[round])] = r;
		for (std::size_t head = 0; head < queue.size(); ++head) {
			NodeId x = queue[head];
			++count[static_cast<std::size_t>(x)];
			for (NodeId p : n.parents(x))
				if (stamp[static_cast<std::size_t>(p)] != r) {
					stamp[static_cast<std::size_t>(p)] = r;
					queue.push_back(p);
				}
		}
	}
	// Common ancestors are closed upwards, so x is minimal iff no child is common.
	const int need = static_cast<int>(distinct.size());
	NodeId best = -1;
	for (std::size_t i = 0; i < n.size(); ++i) {
		if (count[i] != need) continue;
		bool minimal = true;
		for (NodeId c : n.children(static_cast<NodeId>(i)))
			if (count[static_cast<std::size_t>(c)] == need) minimal = false;
		if (!minimal) continue;
		if (best != -1) throw std::logic_error("lca: not unique (network is not an lca-network)");
		best = static_cast<NodeId>(i);
	}
	if (best == -1) throw std::logic_error("lca: no common ancestor");
	return best;
}

std::vector<VertexSet> leaf_sets(const GalledTree& n) {
	auto order = topological_order(n);
	if (order.empty() && n.size() > 0) throw std::invalid_argument("leaf_sets: network is not a DAG");
	std::vector<int> index(n.size(), -1);
	int next = 0;
	for (std::size_t i = 0; i < n.size(); ++i)
		if (n.is_leaf(static_cast<NodeId>(i))) index[i] = next++;
	std::vector<VertexSet> sets(n.size());
	for (auto it = order.rbegin(); it != order.rend(); ++it) {
		const auto x = static_cast<std::size_t>(*it);
		if (index[x] >= 0) {
			sets[x] = {index[x]};
			continue;
		}
		VertexSet acc;
		for (NodeId c : n.children(*it)) {
			VertexSet merged;
			std::set_union(acc.begin(), acc.end(), sets[static_cast<std::size_t>(c)].begin(),
			               sets[static_cast<std::size_t>(c)].end(), std::back_inserter(merged));
			acc.swap(merged);
		}
		sets[x] = std::move(acc);
	}
	return sets;
}

namespace {

std::vector<std::string> leaf_names(const GalledTree& n, const std::vector<NodeId>& lv) {
	bool any = false;
	for (NodeId x : lv) any = any || !n.node(x).name.empty();
	std::vector<std::string> names;
	if (!any) return names;
	for (std::size_t i = 0; i < lv.size(); ++i)
		names.push_back(n.node(lv[i]).name.empty() ? std::to_string(i) : n.node(lv[i]).name);
	return names;
}

// Generic route: {x,y} has lca v iff both lie in L(v) and no child of v
// contains both.
Graph explain_by_leaf_sets(const GalledTree& n, const std::vector<NodeId>& lv) {
	const auto sets = leaf_sets(n);
	const std::size_t words = (lv.size() + 63) / 64;
	auto bits = [&](const VertexSet& s) {
		std::vector<std::uint64_t> b(words, 0);
		for (Vertex x : s) b[static_cast<std::size_t>(x) / 64] |= std::uint64_t{1} << (x % 64);
		return b;
	};
	std::vector<Edge> edges;
	for (std::size_t i = 0; i < n.size(); ++i) {
		const auto v = static_cast<NodeId>(i);
		if (n.label(v) != Label::One || n.is_leaf(v)) continue;
		std::vector<std::vector<std::uint64_t>> child_bits;
		for (NodeId c : n.children(v)) child_bits.push_back(bits(sets[static_cast<std::size_t>(c)]));
		const auto all = bits(sets[i]);
		for (Vertex x : sets[i]) {
			auto partners = all;
			for (const auto& cb : child_bits)
				if (cb[static_cast<std::size_t>(x) / 64] >> (x % 64) & 1U)
					for (std::size_t w = 0; w < words; ++w) partners[w] &= ~cb[w];
			for (std::size_t w = 0; w < words; ++w) {
				std::uint64_t word = partners[w];
				while (word) {
					int bit = __builtin_ctzll(word);
					word &= word - 1;
					int y = static_cast<int>(w * 64) + bit;
					if (y > x) edges.emplace_back(x, y);
				}
			}
		}
	}
	return Graph(static_cast<int>(lv.size()), edges, leaf_names(n, lv));
}

// pvr-shaped route: every non-root vertex has children with disjoint leaf
// sets; at a cycle root exactly the leaves outside L(eta) on opposite sides
// meet.
Graph explain_pvr_shaped(const GalledTree& n, const std::vector<NodeId>& lv, const std::vector<CycleDescriptor>& cyc) {
	std::vector<int> index(n.size(), -1);
	for (std::size_t i = 0; i < lv.size(); ++i) index[static_cast<std::size_t>(lv[i])] = static_cast<int>(i);
	std::vector<int> root_cycle(n.size(), -1);
	for (std::size_t i = 0; i < cyc.size(); ++i) root_cycle[static_cast<std::size_t>(cyc[i].rho)] = static_cast<int>(i);

	std::vector<int> stamp(n.size(), -1);
	int round = 0;
	std::vector<NodeId> stack;
	auto collect = [&](NodeId from, std::vector<Vertex>& out) {
		++round;
		stack.assign(1, from);
		stamp[static_cast<std::size_t>(from)] = round;
		while (!stack.empty()) {
			NodeId x = stack.back();
			stack.pop_back();
			if (index[static_cast<std::size_t>(x)] >= 0) out.push_back(index[static_cast<std::size_t>(x)]);
			for (NodeId c : n.children(x))
				if (stamp[static_cast<std::size_t>(c)] != round) {
					stamp[static_cast<std::size_t>(c)] = round;
					stack.push_back(c);
				}
		}
	};
	std::vector<Edge> edges;
	std::vector<std::vector<Vertex>> groups;
	for (std::size_t i = 0; i < n.size(); ++i) {
		const auto v = static_cast<NodeId>(i);
		if (n.label(v) != Label::One || n.is_leaf(v) || n.kind(v) == NodeKind::Hybrid) continue;
		groups.clear();
		if (root_cycle[i] >= 0) {
			const auto& c = cyc[static_cast<std::size_t>(root_cycle[i])];
			for (const auto* side : {&c.side1, &c.side2}) {
				groups.emplace_back();
				for (std::size_t k = 1; k + 1 < side->size(); ++k) collect(off_cycle_child(n, c, (*side)[k]), groups.back());
			}
		} else {
			for (NodeId c : n.children(v)) {
				groups.emplace_back();
				collect(c, groups.back());
			}
		}
		for (std::size_t a = 0; a < groups.size(); ++a)
			for (std::size_t b = a + 1; b < groups.size(); ++b)
				for (Vertex x : groups[a])
					for (Vertex y : groups[b]) edges.emplace_back(std::min(x, y), std::max(x, y));
	}
	return Graph(static_cast<int>(lv.size()), edges, leaf_names(n, lv));
}

}  // namespace

Graph explain(const GalledTree& n) {
	auto problems = validate(n, false);
	if (!problems.empty()) throw std::invalid_argument("explain: invalid network " + to_string(problems.front()));
	const auto lv = n.leaves();
	std::vector<CycleDescriptor> cyc;
	validate_cycles(n, &cyc);
	bool shaped = true;
	for (const auto& c : cyc) {
		if (n.children(c.eta).size() != 1 || n.children(c.rho).size() != 2) shaped = false;
		for (NodeId w : c.internal())
			if (n.children(w).size() != 2) shaped = false;
	}
	// A vertex on two cycles (e.g. a hybrid that roots another cycle) breaks
	// the disjointness the fast route relies on.
	auto member = cycle_membership(n, cyc);
	for (const auto& c : cyc)
		if (member[static_cast<std::size_t>(c.rho)] != -1) shaped = false;
	return shaped ? explain_pvr_shaped(n, lv, cyc) : explain_by_leaf_sets(n, lv);
}

Graph explain_generic(const GalledTree& n) {
	auto problems = validate(n, false);
	if (!problems.empty()) throw std::invalid_argument("explain: invalid network " + to_string(problems.front()));
	return explain_by_leaf_sets(n, n.leaves());
}

Classification classify(const GalledTree& n) {
	Classification out;
	const auto cyc = cycles(n);
	const auto lv = n.leaves();

	out.strong = std::all_of(cyc.begin(), cyc.end(), [](const CycleDescriptor& c) {
		const bool direct_side = c.side1.size() == 2 || c.side2.size() == 2;
		const bool both_single = c.side1.size() == 3 && c.side2.size() == 3;
		return !direct_side && !both_single;
	});

	out.quasi_discriminating = true;
	for (std::size_t i = 0; i < n.size(); ++i)
		for (NodeId c : n.children(static_cast<NodeId>(i)))
			if (n.kind(c) != NodeKind::Hybrid && n.label(c) == n.label(static_cast<NodeId>(i))) out.quasi_discriminating = false;

	if (cyc.size() == 1 && cyc[0].rho == n.root()) {
		const auto& c = cyc[0];
		const std::size_t cycle_len = c.side1.size() + c.side2.size() - 2;
		bool ok = cycle_len == lv.size() + 1 && n.size() == cycle_len + lv.size();
		for (NodeId k : n.children(c.rho)) ok = ok && !n.is_leaf(k);
		std::vector<NodeId> members = c.internal();
		members.push_back(c.eta);
		for (NodeId w : members) {
			int leaf_kids = 0;
			for (NodeId k : n.children(w)) leaf_kids += n.is_leaf(k);
			ok = ok && leaf_kids == 1;
		}
		out.elementary = ok;
	}
	return out;
}

}  // namespace gatex
