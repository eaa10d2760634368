#pragma once

#include "gatex/galled_tree.hpp"
#include "gatex/graph.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace support {

using namespace gatex;

// Graph from "a-b b-c ..." on the given vertex names.
inline Graph named(const std::vector<std::string>& names, const std::string& edges) {
	std::vector<Edge> e;
	std::istringstream in(edges);
	auto id = [&](const std::string& s) {
		for (std::size_t i = 0; i < names.size(); ++i)
			if (names[i] == s) return static_cast<int>(i);
		throw std::invalid_argument("unknown vertex " + s);
	};
	for (std::string tok; in >> tok;) {
		const auto dash = tok.find('-');
		e.emplace_back(id(tok.substr(0, dash)), id(tok.substr(dash + 1)));
	}
	return Graph(static_cast<int>(names.size()), e, names);
}

inline Graph path(int n) {
	std::vector<Edge> e;
	for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
	return Graph(n, e);
}

inline Graph cycle(int n) {
	std::vector<Edge> e;
	for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
	return Graph(n, e);
}

inline Graph complete(int n) {
	std::vector<Edge> e;
	for (int i = 0; i < n; ++i)
		for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
	return Graph(n, e);
}

inline Graph edgeless(int n) { return Graph(n, {}); }

inline Graph random_graph(int n, double p, std::uint64_t seed) {
	std::mt19937_64 rng(seed);
	std::bernoulli_distribution coin(p);
	std::vector<Edge> e;
	for (int i = 0; i < n; ++i)
		for (int j = i + 1; j < n; ++j)
			if (coin(rng)) e.emplace_back(i, j);
	return Graph(n, e);
}

// Random cograph: recursive disjoint union / join.
inline Graph random_cograph(int n, std::uint64_t seed) {
	std::mt19937_64 rng(seed);
	std::vector<Graph> parts;
	for (int i = 0; i < n; ++i) parts.push_back(Graph(1, {}));
	while (parts.size() > 1) {
		std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
		std::size_t a = pick(rng), b = pick(rng);
		if (a == b) continue;
		Graph u = disjoint_union(parts[a], parts[b]);
		if (std::bernoulli_distribution(0.5)(rng)) u = complement(disjoint_union(complement(parts[a]), complement(parts[b])));
		if (a < b) std::swap(a, b);
		parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(a));
		parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(b));
		parts.push_back(u);
	}
	return parts.front();
}

inline VertexSet set_of(const Graph& g, const std::vector<std::string>& names) {
	VertexSet out;
	for (const auto& s : names) out.push_back(g.find(s));
	std::sort(out.begin(), out.end());
	return out;
}

// Network from named nodes and "p>c p>c ..." edges. Kinds: r, t, h, l.
struct NetBuilder {
	GalledTree net;
	std::map<std::string, NodeId> id;

	NetBuilder& node(const std::string& name, char kind, int label = -1) {
		const NodeKind k = kind == 'r' ? NodeKind::Root : kind == 't' ? NodeKind::Tree : kind == 'h' ? NodeKind::Hybrid : NodeKind::Leaf;
		const Label l = k == NodeKind::Leaf ? Label::Odot : label == 1 ? Label::One : Label::Zero;
		id[name] = net.add_node(k, l, name);
		return *this;
	}
	NetBuilder& leaves(const std::string& names) {
		std::istringstream in(names);
		for (std::string s; in >> s;) node(s, 'l');
		return *this;
	}
	NetBuilder& edges(const std::string& list) {
		std::istringstream in(list);
		for (std::string tok; in >> tok;) {
			const auto gt = tok.find('>');
			net.add_edge(id.at(tok.substr(0, gt)), id.at(tok.substr(gt + 1)));
		}
		return *this;
	}
	NodeId operator[](const std::string& name) const { return id.at(name); }
};

}  // namespace support
