#pragma once

#include "gatex/graph.hpp"

#include <string>
#include <vector>

namespace gatex {

enum class MdLabel { Parallel, Series, Prime, Leaf };

std::string to_string(MdLabel label);

struct MdNode {
	VertexSet module;
	MdLabel label = MdLabel::Leaf;
	std::vector<int> children;  // ascending minimum vertex id
	int parent = -1;
};

// Modular decomposition tree. Node 0 is the root (module = V(G)).
struct MDTree {
	std::vector<MdNode> nodes;

	int root() const { return 0; }
	const MdNode& node(int id) const { return nodes[static_cast<std::size_t>(id)]; }
	std::size_t size() const { return nodes.size(); }
	// Node ids in postorder (children before parents).
	std::vector<int> postorder() const;
	// Leaf node of each vertex.
	std::vector<int> leaf_of_vertex() const;
	// Smallest node whose module contains all of `vertices`.
	int lowest_common_node(const VertexSet& vertices) const;
};

bool is_module(const Graph& g, const VertexSet& m);

// All strong modules, sorted by (size descending, then lexicographically).
std::vector<VertexSet> strong_modules(const Graph& g);

MDTree build_mdt(const Graph& g);

// Quotient of G[M] by `parts`, where M is the union of the parts. Vertex i of
// the result stands for parts[i]; throws std::invalid_argument if the parts
// overlap or are not modules of G[M].
Graph quotient(const Graph& g, const std::vector<VertexSet>& parts);

// Maximal strong modules of a graph that is known to be prime (G and its
// complement connected, at least two vertices). Exposed for testing.
std::vector<VertexSet> maximal_modules_of_prime(const Graph& g);

}  // namespace gatex
