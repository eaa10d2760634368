#include "gatex/testkit.hpp"

#include "gatex/modular_decomposition.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>
#include <stdexcept>

namespace gatex::testkit {

namespace {

void gate(const Graph& g, int limit, const char* what) {
	if (g.size() > limit)
		throw std::invalid_argument(std::string(what) + ": graph has " + std::to_string(g.size()) + " vertices, oracle gate is " +
		                            std::to_string(limit));
}

std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
	std::vector<std::uint32_t> adj(static_cast<std::size_t>(g.size()), 0);
	for (auto [u, v] : g.edges()) {
		adj[static_cast<std::size_t>(u)] |= 1u << v;
		adj[static_cast<std::size_t>(v)] |= 1u << u;
	}
	return adj;
}

void clique_search(const std::vector<std::uint32_t>& adj, std::uint32_t current, std::uint32_t cand, std::uint32_t& best) {
	if (cand == 0) {
		if (std::popcount(current) > std::popcount(best)) best = current;
		return;
	}
	while (cand != 0) {
		if (std::popcount(current) + std::popcount(cand) <= std::popcount(best)) return;
		const int v = std::countr_zero(cand);
		cand &= cand - 1;
		clique_search(adj, current | (1u << v), cand & adj[static_cast<std::size_t>(v)], best);
	}
	if (std::popcount(current) > std::popcount(best)) best = current;
}

VertexSet mask_to_set(std::uint32_t m) {
	VertexSet out;
	for (; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
	return out;
}

bool colorable(const Graph& g, std::vector<int>& color, int v, int k) {
	if (v == g.size()) return true;
	// Symmetry: vertex v may only open one new color.
	int used = 0;
	for (int u = 0; u < v; ++u) used = std::max(used, color[static_cast<std::size_t>(u)]);
	for (int c = 1; c <= std::min(k, used + 1); ++c) {
		bool ok = true;
		for (Vertex u : g.neighbors(v))
			if (u < v && color.at(static_cast<std::size_t>(u)) == c) ok = false;
		if (!ok) continue;
		color[static_cast<std::size_t>(v)] = c;
		if (colorable(g, color, v + 1, k)) return true;
	}
	color[static_cast<std::size_t>(v)] = 0;
	return false;
}

}  // namespace

std::pair<VertexSet, int> brute_max_clique(const Graph& g) {
	gate(g, kCliqueGate, "brute_max_clique");
	if (g.empty()) return {{}, 0};
	const auto adj = adjacency_masks(g);
	std::uint32_t best = 0;
	clique_search(adj, 0, (1u << g.size()) - 1, best);
	auto set = mask_to_set(best);
	const int size = static_cast<int>(set.size());
	return {std::move(set), size};
}

int brute_chromatic(const Graph& g) {
	gate(g, kChromaticGate, "brute_chromatic");
	if (g.empty()) return 0;
	std::vector<int> color(static_cast<std::size_t>(g.size()), 0);
	for (int k = 1;; ++k)
		if (colorable(g, color, 0, k)) return k;
}

std::pair<VertexSet, int> brute_max_independent(const Graph& g) {
	gate(g, kIndependentGate, "brute_max_independent");
	return brute_max_clique(complement(g));
}

std::vector<VertexSet> brute_strong_modules(const Graph& g) {
	gate(g, kModuleGate, "brute_strong_modules");
	const int n = g.size();
	std::vector<std::uint32_t> modules;
	for (std::uint32_t m = 1; m < (1u << n); ++m)
		if (is_module(g, mask_to_set(m))) modules.push_back(m);
	std::vector<VertexSet> out;
	for (std::uint32_t m : modules) {
		bool strong = true;
		for (std::uint32_t o : modules) {
			const std::uint32_t both = m & o;
			if (both != 0 && both != m && both != o) {
				strong = false;
				break;
			}
		}
		if (strong) out.push_back(mask_to_set(m));
	}
	std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
		if (a.size() != b.size()) return a.size() > b.size();
		return a < b;
	});
	return out;
}

Graph explain_by_pairwise_lca(const GalledTree& n) {
	const auto lv = n.leaves();
	std::vector<Edge> edges;
	for (std::size_t i = 0; i < lv.size(); ++i)
		for (std::size_t j = i + 1; j < lv.size(); ++j)
			if (n.label(lca(n, {lv[i], lv[j]})) == Label::One) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
	std::vector<std::string> names;
	bool any = false;
	for (NodeId x : lv) any = any || !n.node(x).name.empty();
	if (any)
		for (std::size_t i = 0; i < lv.size(); ++i) names.push_back(n.leaf_name(lv[i]));
	return Graph(static_cast<int>(lv.size()), edges, names);
}

namespace {

class Generator {
public:
	Generator(GalledTree& net, double density, std::uint64_t seed) : net_(net), density_(density), rng_(seed) {}

	// Builds a subnetwork with `count` leaves below `parent` (-1: the root).
	// A non-prime node never gets the label in `forbidden`.
	void fill(NodeId parent, int count, Label forbidden) {
		std::vector<Item> work{{parent, count, forbidden}};
		while (!work.empty()) {
			const Item it = work.back();
			work.pop_back();
			const NodeKind kind = it.parent == -1 ? NodeKind::Root : NodeKind::Tree;
			if (it.count == 1) {
				const NodeId leaf = net_.add_node(NodeKind::Leaf, Label::Odot);
				if (it.parent != -1) net_.add_edge(it.parent, leaf);
				continue;
			}
			if (it.count >= 4 && std::bernoulli_distribution(density_)(rng_)) {
				const int k = uniform(4, std::min(it.count, 8));
				const Label root_label = coin() ? Label::Zero : Label::One;
				const NodeId rho = net_.add_node(kind, root_label);
				if (it.parent != -1) net_.add_edge(it.parent, rho);
				const int a = uniform(1, k - 2);
				std::vector<NodeId> slots;
				std::vector<NodeId> sides[2];
				for (int s = 0; s < 2; ++s) {
					Label l = flip(root_label);
					const int len = s == 0 ? a : k - 1 - a;
					for (int i = 0; i < len; ++i, l = flip(l)) sides[s].push_back(net_.add_node(NodeKind::Tree, l));
				}
				const NodeId eta = net_.add_node(NodeKind::Hybrid, Label::Zero);
				for (auto& side : sides) {
					net_.add_edge(rho, side.front());
					for (std::size_t i = 0; i < side.size(); ++i) {
						net_.add_edge(side[i], i + 1 < side.size() ? side[i + 1] : eta);
						slots.push_back(side[i]);
					}
				}
				slots.push_back(eta);
				const auto parts = split(it.count, k);
				for (std::size_t i = 0; i < parts.size(); ++i) work.push_back({slots[i], parts[i], Label::Odot});
				continue;
			}
			Label label = coin() ? Label::Zero : Label::One;
			if (label == it.forbidden) label = flip(label);
			const NodeId v = net_.add_node(kind, label);
			if (it.parent != -1) net_.add_edge(it.parent, v);
			const int k = uniform(2, std::min(it.count, 4));
			for (int part : split(it.count, k)) work.push_back({v, part, label});
		}
	}

	int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

private:
	struct Item {
		NodeId parent;
		int count;
		Label forbidden;
	};

	bool coin() { return std::bernoulli_distribution(0.5)(rng_); }

	// `count` split into k positive parts.
	std::vector<int> split(int count, int k) {
		std::set<int> cuts;
		while (static_cast<int>(cuts.size()) < k - 1) cuts.insert(uniform(1, count - 1));
		std::vector<int> parts;
		int prev = 0;
		for (int c : cuts) {
			parts.push_back(c - prev);
			prev = c;
		}
		parts.push_back(count - prev);
		return parts;
	}

	GalledTree& net_;
	double density_;
	std::mt19937_64 rng_;
};

}  // namespace

GalledTree random_pvr_network(int n_leaves, double cycle_density, std::uint64_t seed) {
	if (n_leaves < 1) throw std::invalid_argument("random_pvr_network: need at least one leaf");
	GalledTree net;
	Generator gen(net, cycle_density, seed);
	gen.fill(-1, n_leaves, Label::Odot);
	return net;
}

GalledTree random_pvr_forest(int n_leaves, int block_min, int block_max, double cycle_density, std::uint64_t seed) {
	if (n_leaves < 1) throw std::invalid_argument("random_pvr_forest: need at least one leaf");
	if (block_min < 1 || block_max < block_min) throw std::invalid_argument("random_pvr_forest: bad block size range");
	GalledTree net;
	Generator gen(net, cycle_density, seed);
	std::vector<int> blocks;
	for (int left = n_leaves; left > 0;) {
		const int s = std::min(left, gen.uniform(block_min, block_max));
		blocks.push_back(s);
		left -= s;
	}
	if (blocks.size() == 1) {
		gen.fill(-1, n_leaves, Label::Odot);
		return net;
	}
	const NodeId root = net.add_node(NodeKind::Root, Label::Zero);
	for (int s : blocks) gen.fill(root, s, Label::Zero);
	return net;
}

bool p4_conditions_check(const Graph& g, const PvrNetwork& p) {
	const auto& mdt = p.mdt;
	const auto leaf = mdt.leaf_of_vertex();
	const auto& net = p.network;
	for (const auto& q : list_induced_p4s(g)) {
		const int m = mdt.lowest_common_node({q.begin(), q.end()});
		if (mdt.node(m).label != MdLabel::Prime) return false;
		const auto& c = p.cycles[static_cast<std::size_t>(p.cycle_of_mdt[static_cast<std::size_t>(m)])];
		std::vector<NodeId> u;
		for (Vertex x : q) {
			int child = leaf[static_cast<std::size_t>(x)];
			while (mdt.node(child).parent != m) child = mdt.node(child).parent;
			const NodeId top = p.mdt_to_network[static_cast<std::size_t>(child)];
			const auto& parents = net.parents(top);
			if (parents.size() != 1 || !c.contains(parents.front())) return false;
			u.push_back(parents.front());
		}
		std::vector<NodeId> sorted(u);
		std::sort(sorted.begin(), sorted.end());
		if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
		if (std::count(u.begin(), u.end(), c.eta) != 1) return false;
		int side_mask = 0;
		for (NodeId x : u)
			if (x != c.eta) side_mask |= 1 << c.side_of(x);
		if (side_mask != 0b110) return false;
	}
	return true;
}

NodeId find_node(const GalledTree& n, const std::string& name) {
	for (std::size_t x = 0; x < n.size(); ++x)
		if (n.node(static_cast<NodeId>(x)).name == name) return static_cast<NodeId>(x);
	throw std::invalid_argument("find_node: no node named " + name);
}

namespace {

struct Builder {
	GalledTree net;
	std::map<std::string, NodeId> id;

	void node(const std::string& name, NodeKind kind, Label label) { id[name] = net.add_node(kind, label, name); }
	void edges(std::initializer_list<std::pair<const char*, const char*>> list) {
		for (auto [p, c] : list) net.add_edge(id.at(p), id.at(c));
	}
};

}  // namespace

Fixture fig_net() {
	Builder b;
	b.node("v1", NodeKind::Root, Label::Zero);
	b.node("w", NodeKind::Tree, Label::One);
	b.node("w_a", NodeKind::Tree, Label::One);
	b.node("w_b", NodeKind::Tree, Label::Zero);
	b.node("w_c", NodeKind::Hybrid, Label::Zero);
	b.node("v2", NodeKind::Tree, Label::One);
	b.node("u", NodeKind::Tree, Label::Zero);
	b.node("u_d", NodeKind::Tree, Label::Zero);
	b.node("u_e", NodeKind::Tree, Label::One);
	b.node("u_f", NodeKind::Hybrid, Label::Zero);
	b.node("v3", NodeKind::Tree, Label::One);
	for (const char* leaf : {"a", "b", "c", "d", "e", "f", "g", "h"}) b.node(leaf, NodeKind::Leaf, Label::Odot);
	b.edges({{"v1", "w"}, {"v1", "w_a"}, {"w", "w_c"}, {"w", "v2"}, {"w_a", "w_b"}, {"w_a", "a"}, {"w_b", "w_c"},
	         {"w_b", "b"}, {"w_c", "c"}, {"v2", "u"}, {"v2", "u_d"}, {"u", "u_f"}, {"u", "v3"}, {"u_d", "u_e"},
	         {"u_d", "d"}, {"u_e", "u_f"}, {"u_e", "e"}, {"u_f", "f"}, {"v3", "g"}, {"v3", "h"}});
	Fixture f;
	f.name = "fig_net";
	const auto& id = b.id;
	f.ties.concat_order[id.at("v2")] = {id.at("u_d"), id.at("u_e"), id.at("u")};
	f.ties.concat_order[id.at("v1")] = {id.at("w_a"), id.at("w_b"), id.at("w")};
	f.ties.concat_order[id.at("v3")] = {id.at("g"), id.at("h")};
	f.ties.argmax_pick[id.at("u_d")] = id.at("d");
	f.network = std::move(b.net);
	f.expected_order = "cabdeghf";
	f.expected_clique = {"c", "d", "g", "h"};
	f.expected_omega = {{"v2", 3}, {"w", 4}, {"v1", 4}, {"u", 2}, {"w_a", 2}};
	return f;
}

Fixture p4_net() {
	Builder b;
	for (const char* leaf : {"a", "b", "c", "d"}) b.node(leaf, NodeKind::Leaf, Label::Odot);
	b.node("rho", NodeKind::Root, Label::Zero);
	b.node("v_a", NodeKind::Tree, Label::One);
	b.node("v_c", NodeKind::Tree, Label::One);
	b.node("v_d", NodeKind::Tree, Label::Zero);
	b.node("eta", NodeKind::Hybrid, Label::Zero);
	b.edges({{"rho", "v_a"}, {"rho", "v_c"}, {"v_a", "eta"}, {"v_a", "a"}, {"v_c", "v_d"}, {"v_c", "c"}, {"v_d", "eta"},
	         {"v_d", "d"}, {"eta", "b"}});
	Fixture f;
	f.name = "p4_net";
	f.network = std::move(b.net);
	f.expected_order = "bacd";
	f.expected_clique = {"a", "b"};
	f.expected_omega = {{"v_a", 2}, {"v_c", 2}, {"rho", 2}};
	return f;
}

}  // namespace gatex::testkit
