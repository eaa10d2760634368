#include "gatex/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace gatex {

Graph::Graph(int n, const std::vector<Edge>& edges, std::vector<std::string> names)
	: n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))), names_(std::move(names)) {
	if (n < 0) throw std::invalid_argument("graph: negative vertex count");
	if (!names_.empty()) {
		if (static_cast<int>(names_.size()) != n) throw std::invalid_argument("graph: name table size mismatch");
		std::unordered_set<std::string> seen;
		for (const auto& s : names_)
			if (!seen.insert(s).second) throw std::invalid_argument("graph: duplicate vertex name '" + s + "'");
	}
	pairs_.reserve(edges.size() * 2);
	for (auto [u, v] : edges) {
		if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("graph: edge endpoint out of range");
		if (u == v) throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(u));
		if (!pairs_.insert(key(u, v)).second)
			throw std::invalid_argument("graph: duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
		adj_[static_cast<std::size_t>(u)].push_back(v);
		adj_[static_cast<std::size_t>(v)].push_back(u);
	}
	edge_count_ = edges.size();
	for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::adjacent(Vertex u, Vertex v) const {
	if (u == v) return false;
	return pairs_.count(key(u, v)) != 0;
}

std::string Graph::name(Vertex v) const {
	return names_.empty() ? std::to_string(v) : names_[static_cast<std::size_t>(v)];
}

Vertex Graph::find(const std::string& name) const {
	for (int v = 0; v < n_; ++v)
		if (this->name(v) == name) return v;
	return -1;
}

std::vector<Edge> Graph::edges() const {
	std::vector<Edge> out;
	out.reserve(edge_count_);
	for (int u = 0; u < n_; ++u)
		for (Vertex v : adj_[static_cast<std::size_t>(u)])
			if (u < v) out.emplace_back(u, v);
	return out;
}

bool operator==(const Graph& a, const Graph& b) {
	if (a.n_ != b.n_ || a.edge_count_ != b.edge_count_) return false;
	for (int v = 0; v < a.n_; ++v)
		if (a.name(v) != b.name(v)) return false;
	return a.adj_ == b.adj_;
}

Graph induced_subgraph(const Graph& g, const VertexSet& w) {
	if (w.empty()) throw std::invalid_argument("induced_subgraph: empty vertex set");
	std::vector<int> local(static_cast<std::size_t>(g.size()), -1);
	for (std::size_t i = 0; i < w.size(); ++i) {
		Vertex v = w[i];
		if (v < 0 || v >= g.size()) throw std::invalid_argument("induced_subgraph: vertex not in graph");
		if (i > 0 && w[i - 1] >= v) throw std::invalid_argument("induced_subgraph: vertex set must be sorted and unique");
		local[static_cast<std::size_t>(v)] = static_cast<int>(i);
	}
	std::vector<Edge> edges;
	std::vector<std::string> names;
	names.reserve(w.size());
	for (std::size_t i = 0; i < w.size(); ++i) {
		names.push_back(g.name(w[i]));
		for (Vertex x : g.neighbors(w[i])) {
			int j = local[static_cast<std::size_t>(x)];
			if (j > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), j);
		}
	}
	return Graph(static_cast<int>(w.size()), edges, std::move(names));
}

Graph complement(const Graph& g) {
	std::vector<Edge> edges;
	for (int u = 0; u < g.size(); ++u)
		for (int v = u + 1; v < g.size(); ++v)
			if (!g.adjacent(u, v)) edges.emplace_back(u, v);
	return Graph(g.size(), edges, g.names());
}

std::vector<VertexSet> connected_components(const Graph& g) {
	std::vector<VertexSet> parts;
	std::vector<char> seen(static_cast<std::size_t>(g.size()), 0);
	std::vector<Vertex> queue;
	for (int s = 0; s < g.size(); ++s) {
		if (seen[static_cast<std::size_t>(s)]) continue;
		queue.assign(1, s);
		seen[static_cast<std::size_t>(s)] = 1;
		for (std::size_t head = 0; head < queue.size(); ++head)
			for (Vertex x : g.neighbors(queue[head]))
				if (!seen[static_cast<std::size_t>(x)]) {
					seen[static_cast<std::size_t>(x)] = 1;
					queue.push_back(x);
				}
		std::sort(queue.begin(), queue.end());
		parts.push_back(queue);
	}
	return parts;
}

std::vector<VertexSet> co_components(const Graph& g) {
	// BFS in the complement over the set of still-unvisited vertices; each
	// scan either removes a vertex or is charged to one of its edges.
	std::vector<VertexSet> parts;
	std::vector<Vertex> unvisited(static_cast<std::size_t>(g.size()));
	std::iota(unvisited.begin(), unvisited.end(), 0);
	std::vector<char> mark(static_cast<std::size_t>(g.size()), 0);
	while (!unvisited.empty()) {
		VertexSet part{unvisited.back()};
		unvisited.pop_back();
		for (std::size_t head = 0; head < part.size(); ++head) {
			Vertex x = part[head];
			for (Vertex y : g.neighbors(x)) mark[static_cast<std::size_t>(y)] = 1;
			std::vector<Vertex> keep;
			for (Vertex y : unvisited) {
				if (mark[static_cast<std::size_t>(y)]) keep.push_back(y);
				else part.push_back(y);
			}
			unvisited.swap(keep);
			for (Vertex y : g.neighbors(x)) mark[static_cast<std::size_t>(y)] = 0;
		}
		std::sort(part.begin(), part.end());
		parts.push_back(std::move(part));
	}
	std::sort(parts.begin(), parts.end(), [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
	return parts;
}

std::vector<P4> list_induced_p4s(const Graph& g) {
	std::vector<P4> out;
	for (int b = 0; b < g.size(); ++b) {
		for (Vertex c : g.neighbors(b)) {
			for (Vertex a : g.neighbors(b)) {
				if (a == c || g.adjacent(a, c)) continue;
				for (Vertex d : g.neighbors(c)) {
					if (d == b || d == a || g.adjacent(d, b) || g.adjacent(a, d)) continue;
					if (a < d) out.push_back({a, b, static_cast<Vertex>(c), d});
				}
			}
		}
	}
	std::sort(out.begin(), out.end());
	return out;
}

bool is_cograph(const Graph& g) {
	// Early exit variant of the P4 scan.
	for (int b = 0; b < g.size(); ++b)
		for (Vertex c : g.neighbors(b))
			for (Vertex a : g.neighbors(b)) {
				if (a == c || g.adjacent(a, c)) continue;
				for (Vertex d : g.neighbors(c))
					if (d != b && d != a && !g.adjacent(d, b) && !g.adjacent(a, d)) return false;
			}
	return true;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
	auto edges = a.edges();
	for (auto [u, v] : b.edges()) edges.emplace_back(u + a.size(), v + a.size());
	std::vector<std::string> names;
	if (a.has_names() || b.has_names()) {
		for (int v = 0; v < a.size(); ++v) names.push_back(a.name(v));
		for (int v = 0; v < b.size(); ++v) names.push_back(b.has_names() ? b.name(v) : std::to_string(v + a.size()));
	}
	return Graph(a.size() + b.size(), edges, std::move(names));
}

}  // namespace gatex
