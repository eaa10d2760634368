#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace gatex {

using Vertex = int;
using VertexSet = std::vector<Vertex>;  // sorted ascending, no duplicates
using Edge = std::pair<Vertex, Vertex>;

// Undirected simple graph on dense ids 0..n-1 with optional names.
// Immutable after construction.
class Graph {
public:
	Graph() = default;

	// Throws std::invalid_argument on self-loops, duplicate edges, ids out of
	// range, or non-unique names. `names` is either empty or of size n.
	Graph(int n, const std::vector<Edge>& edges, std::vector<std::string> names = {});

	int size() const { return n_; }
	std::size_t edge_count() const { return edge_count_; }
	bool empty() const { return n_ == 0; }

	bool adjacent(Vertex u, Vertex v) const;
	const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
	int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

	bool has_names() const { return !names_.empty(); }
	// Falls back to the decimal id when the graph carries no names.
	std::string name(Vertex v) const;
	const std::vector<std::string>& names() const { return names_; }
	// -1 if absent.
	Vertex find(const std::string& name) const;

	// Edges (u, v) with u < v, lexicographically sorted.
	std::vector<Edge> edges() const;

	friend bool operator==(const Graph& a, const Graph& b);

private:
	static std::uint64_t key(Vertex u, Vertex v) {
		if (u > v) std::swap(u, v);
		return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) | static_cast<std::uint32_t>(v);
	}

	int n_ = 0;
	std::size_t edge_count_ = 0;
	std::vector<std::vector<Vertex>> adj_;
	std::unordered_set<std::uint64_t> pairs_;
	std::vector<std::string> names_;
};

// Vertex i of the result is W[i] (W sorted ascending); names carried over.
Graph induced_subgraph(const Graph& g, const VertexSet& w);

Graph complement(const Graph& g);

// Parts sorted by minimum vertex, each part sorted.
std::vector<VertexSet> connected_components(const Graph& g);

// Connected components of the complement, computed without materializing it.
std::vector<VertexSet> co_components(const Graph& g);

using P4 = std::array<Vertex, 4>;

// Every induced path a-b-c-d exactly once, oriented so that a < d.
std::vector<P4> list_induced_p4s(const Graph& g);

bool is_cograph(const Graph& g);

// Disjoint union; vertices of b are shifted by a.size().
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace gatex
