#include "gatex/modular_decomposition.hpp"

#include <algorithm>
#include <stdexcept>

namespace gatex {

std::string to_string(MdLabel label) {
	switch (label) {
	case MdLabel::Parallel: return "0";
	case MdLabel::Series: return "1";
	case MdLabel::Prime: return "prime";
	case MdLabel::Leaf: return "leaf";
	}
	return "?";
}

std::vector<int> MDTree::postorder() const {
	std::vector<int> order;
	order.reserve(nodes.size());
	std::vector<std::pair<int, std::size_t>> stack{{root(), 0}};
	while (!stack.empty()) {
		auto& [id, next] = stack.back();
		const auto& kids = node(id).children;
		if (next < kids.size()) {
			int child = kids[next++];
			stack.emplace_back(child, 0);
		} else {
			order.push_back(id);
			stack.pop_back();
		}
	}
	return order;
}

std::vector<int> MDTree::leaf_of_vertex() const {
	std::vector<int> out(node(root()).module.size(), -1);
	for (std::size_t id = 0; id < nodes.size(); ++id)
		if (nodes[id].label == MdLabel::Leaf) out[static_cast<std::size_t>(nodes[id].module.front())] = static_cast<int>(id);
	return out;
}

int MDTree::lowest_common_node(const VertexSet& vertices) const {
	if (vertices.empty()) throw std::invalid_argument("lowest_common_node: empty set");
	auto leaf = leaf_of_vertex();
	std::vector<int> depth(nodes.size(), 0);
	for (std::size_t id = 1; id < nodes.size(); ++id) {
		// Parents are created before children, so parent ids are smaller.
		depth[id] = depth[static_cast<std::size_t>(nodes[id].parent)] + 1;
	}
	int cur = leaf[static_cast<std::size_t>(vertices.front())];
	for (Vertex v : vertices) {
		int other = leaf[static_cast<std::size_t>(v)];
		while (depth[static_cast<std::size_t>(other)] > depth[static_cast<std::size_t>(cur)]) other = node(other).parent;
		while (depth[static_cast<std::size_t>(cur)] > depth[static_cast<std::size_t>(other)]) cur = node(cur).parent;
		while (cur != other) {
			cur = node(cur).parent;
			other = node(other).parent;
		}
	}
	return cur;
}

bool is_module(const Graph& g, const VertexSet& m) {
	if (m.empty()) throw std::invalid_argument("is_module: empty vertex set");
	std::vector<char> in_m(static_cast<std::size_t>(g.size()), 0);
	for (Vertex v : m) {
		if (v < 0 || v >= g.size()) throw std::invalid_argument("is_module: vertex not in graph");
		in_m[static_cast<std::size_t>(v)] = 1;
	}
	std::vector<char> mark(static_cast<std::size_t>(g.size()), 0);
	std::size_t outside = 0;
	for (Vertex z : g.neighbors(m.front()))
		if (!in_m[static_cast<std::size_t>(z)]) {
			mark[static_cast<std::size_t>(z)] = 1;
			++outside;
		}
	for (Vertex y : m) {
		std::size_t count = 0;
		for (Vertex z : g.neighbors(y)) {
			if (in_m[static_cast<std::size_t>(z)]) continue;
			if (!mark[static_cast<std::size_t>(z)]) return false;
			++count;
		}
		if (count != outside) return false;
	}
	return true;
}

namespace {

// Partition of V \ {v} into the maximal modules that avoid v.
std::vector<VertexSet> refine_from(const Graph& g, Vertex v) {
	const auto n = static_cast<std::size_t>(g.size());
	std::vector<VertexSet> parts;
	std::vector<int> part_of(n, 0);
	part_of[static_cast<std::size_t>(v)] = -1;
	VertexSet rest;
	for (int x = 0; x < g.size(); ++x)
		if (x != v) rest.push_back(x);
	if (rest.empty()) return parts;
	parts.push_back(rest);

	std::vector<Vertex> queue;
	std::vector<char> queued(n, 1);
	queue.push_back(v);
	for (Vertex x : rest) queue.push_back(x);
	std::vector<char> mark(n, 0);
	std::size_t head = 0;
	while (head < queue.size()) {
		Vertex x = queue[head++];
		queued[static_cast<std::size_t>(x)] = 0;
		for (Vertex y : g.neighbors(x)) mark[static_cast<std::size_t>(y)] = 1;
		const std::size_t count = parts.size();
		for (std::size_t p = 0; p < count; ++p) {
			if (part_of[static_cast<std::size_t>(x)] == static_cast<int>(p)) continue;
			VertexSet in, out;
			for (Vertex y : parts[p]) (mark[static_cast<std::size_t>(y)] ? in : out).push_back(y);
			if (in.empty() || out.empty()) continue;
			for (Vertex y : in)
				if (!queued[static_cast<std::size_t>(y)]) {
					queued[static_cast<std::size_t>(y)] = 1;
					queue.push_back(y);
				}
			for (Vertex y : out) {
				part_of[static_cast<std::size_t>(y)] = static_cast<int>(parts.size());
				if (!queued[static_cast<std::size_t>(y)]) {
					queued[static_cast<std::size_t>(y)] = 1;
					queue.push_back(y);
				}
			}
			parts[p] = std::move(in);
			parts.push_back(std::move(out));
		}
		for (Vertex y : g.neighbors(x)) mark[static_cast<std::size_t>(y)] = 0;
		if (head > 4096 && head * 2 > queue.size()) {
			queue.erase(queue.begin(), queue.begin() + static_cast<std::ptrdiff_t>(head));
			head = 0;
		}
	}
	return parts;
}

}  // namespace

std::vector<VertexSet> maximal_modules_of_prime(const Graph& g) {
	if (g.size() < 2) throw std::invalid_argument("maximal_modules_of_prime: graph too small");
	const Vertex v = 0;
	auto avoid_v = refine_from(g, v);
	// The child containing v is the part containing v in the refinement from
	// any vertex outside it; vertices inside it only yield proper subsets.
	VertexSet own{v};
	for (const auto& part : avoid_v) {
		for (const auto& cand : refine_from(g, part.front())) {
			if (!std::binary_search(cand.begin(), cand.end(), v)) continue;
			if (cand.size() > own.size()) own = cand;
		}
	}
	std::vector<VertexSet> children{own};
	for (auto& part : avoid_v)
		if (!std::binary_search(own.begin(), own.end(), part.front())) children.push_back(part);
	for (auto& c : children) std::sort(c.begin(), c.end());
	std::sort(children.begin(), children.end(), [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
	return children;
}

MDTree build_mdt(const Graph& g) {
	if (g.empty()) throw std::invalid_argument("build_mdt: empty graph");
	MDTree tree;
	VertexSet all(static_cast<std::size_t>(g.size()));
	for (int v = 0; v < g.size(); ++v) all[static_cast<std::size_t>(v)] = v;
	tree.nodes.push_back({all, MdLabel::Leaf, {}, -1});

	std::vector<int> work{0};
	while (!work.empty()) {
		int id = work.back();
		work.pop_back();
		const VertexSet module = tree.nodes[static_cast<std::size_t>(id)].module;
		if (module.size() == 1) {
			tree.nodes[static_cast<std::size_t>(id)].label = MdLabel::Leaf;
			continue;
		}
		Graph sub = induced_subgraph(g, module);
		MdLabel label = MdLabel::Parallel;
		auto parts = connected_components(sub);
		if (parts.size() == 1) {
			label = MdLabel::Series;
			parts = co_components(sub);
			if (parts.size() == 1) {
				label = MdLabel::Prime;
				parts = maximal_modules_of_prime(sub);
			}
		}
		tree.nodes[static_cast<std::size_t>(id)].label = label;
		for (const auto& local : parts) {
			VertexSet m;
			m.reserve(local.size());
			for (Vertex x : local) m.push_back(module[static_cast<std::size_t>(x)]);
			int child = static_cast<int>(tree.nodes.size());
			tree.nodes.push_back({std::move(m), MdLabel::Leaf, {}, id});
			tree.nodes[static_cast<std::size_t>(id)].children.push_back(child);
			work.push_back(child);
		}
	}
	return tree;
}

std::vector<VertexSet> strong_modules(const Graph& g) {
	if (g.empty()) return {};
	auto tree = build_mdt(g);
	std::vector<VertexSet> out;
	for (auto& node : tree.nodes) out.push_back(node.module);
	std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
		if (a.size() != b.size()) return a.size() > b.size();
		return a < b;
	});
	return out;
}

Graph quotient(const Graph& g, const std::vector<VertexSet>& parts) {
	if (parts.empty()) throw std::invalid_argument("quotient: no parts");
	std::vector<int> part_of(static_cast<std::size_t>(g.size()), -1);
	VertexSet m;
	for (std::size_t i = 0; i < parts.size(); ++i) {
		if (parts[i].empty()) throw std::invalid_argument("quotient: empty part");
		for (Vertex v : parts[i]) {
			if (v < 0 || v >= g.size()) throw std::invalid_argument("quotient: vertex not in graph");
			if (part_of[static_cast<std::size_t>(v)] != -1) throw std::invalid_argument("quotient: parts overlap");
			part_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
			m.push_back(v);
		}
	}
	std::sort(m.begin(), m.end());
	for (std::size_t i = 0; i < parts.size(); ++i) {
		Vertex rep = parts[i].front();
		for (Vertex y : parts[i])
			for (Vertex z : m) {
				if (part_of[static_cast<std::size_t>(z)] == static_cast<int>(i)) continue;
				if (g.adjacent(y, z) != g.adjacent(rep, z))
					throw std::invalid_argument("quotient: part " + std::to_string(i) + " is not a module");
			}
	}
	std::vector<Edge> edges;
	for (std::size_t i = 0; i < parts.size(); ++i)
		for (std::size_t j = i + 1; j < parts.size(); ++j)
			if (g.adjacent(parts[i].front(), parts[j].front())) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
	return Graph(static_cast<int>(parts.size()), edges);
}

}  // namespace gatex
