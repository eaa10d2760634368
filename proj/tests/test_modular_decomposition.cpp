#include "support.hpp"

#include "gatex/modular_decomposition.hpp"
#include "gatex/testkit.hpp"

#include <doctest.h>

#include <algorithm>

using namespace gatex;
using namespace support;

namespace {

const std::vector<std::string> abcd{"a", "b", "c", "d"};

bool overlap(const VertexSet& a, const VertexSet& b) {
	VertexSet both;
	std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
	return !both.empty() && both.size() != a.size() && both.size() != b.size();
}

void check_tree_invariants(const Graph& g, const MDTree& t) {
	CHECK(t.node(t.root()).module.size() == static_cast<std::size_t>(g.size()));
	for (const auto& nd : t.nodes) {
		CHECK(is_module(g, nd.module));
		if (nd.module.size() == 1) {
			CHECK(nd.label == MdLabel::Leaf);
			continue;
		}
		VertexSet joined;
		for (int c : nd.children) {
			const auto& m = t.node(c).module;
			joined.insert(joined.end(), m.begin(), m.end());
		}
		std::sort(joined.begin(), joined.end());
		CHECK(joined == nd.module);
		Graph sub = induced_subgraph(g, nd.module);
		const bool connected = connected_components(sub).size() == 1;
		const bool co_connected = co_components(sub).size() == 1;
		if (!connected) CHECK(nd.label == MdLabel::Parallel);
		else if (!co_connected) CHECK(nd.label == MdLabel::Series);
		else CHECK(nd.label == MdLabel::Prime);
	}
	for (std::size_t i = 0; i < t.nodes.size(); ++i)
		for (std::size_t j = i + 1; j < t.nodes.size(); ++j) CHECK_FALSE(overlap(t.nodes[i].module, t.nodes[j].module));
}

}  // namespace

TEST_SUITE("modular_decomposition") {
	TEST_CASE("is_module") {
		Graph p4 = named(abcd, "a-b b-c c-d");
		for (int v = 0; v < 4; ++v) CHECK(is_module(p4, {v}));
		CHECK(is_module(p4, {0, 1, 2, 3}));
		CHECK_FALSE(is_module(p4, {0, 1}));
		CHECK_THROWS_AS(is_module(p4, {}), std::invalid_argument);

		const Graph fig = explain(testkit::fig_net().network);
		CHECK(is_module(fig, set_of(fig, {"g", "h"})));
		CHECK(is_module(fig, set_of(fig, {"d", "e", "f", "g", "h"})));
	}

	TEST_CASE("strong modules of small graphs") {
		CHECK(strong_modules(complete(2)) == std::vector<VertexSet>{{0, 1}, {0}, {1}});
		CHECK(strong_modules(path(4)) == std::vector<VertexSet>{{0, 1, 2, 3}, {0}, {1}, {2}, {3}});
		CHECK(strong_modules(path(4)) == testkit::brute_strong_modules(path(4)));
		Graph two = disjoint_union(complete(2), complete(2));
		CHECK(strong_modules(two) == std::vector<VertexSet>{{0, 1, 2, 3}, {0, 1}, {2, 3}, {0}, {1}, {2}, {3}});
		CHECK(strong_modules(two) == testkit::brute_strong_modules(two));
	}

	TEST_CASE("strong modules agree with subset enumeration") {
		for (std::uint64_t seed = 0; seed < 80; ++seed) {
			const int n = 2 + static_cast<int>(seed % 9);
			Graph g = seed % 3 == 0 ? random_cograph(n, seed) : random_graph(n, 0.2 + 0.1 * static_cast<double>(seed % 6), seed);
			CHECK(strong_modules(g) == testkit::brute_strong_modules(g));
		}
	}

	TEST_CASE("modular decomposition tree") {
		const auto k3 = build_mdt(complete(3));
		CHECK(k3.node(0).label == MdLabel::Series);
		CHECK(k3.node(0).children.size() == 3);
		const auto p4 = build_mdt(path(4));
		CHECK(p4.node(0).label == MdLabel::Prime);
		CHECK(p4.node(0).children.size() == 4);
		const auto two = build_mdt(disjoint_union(complete(2), complete(2)));
		CHECK(two.node(0).label == MdLabel::Parallel);
		REQUIRE(two.node(0).children.size() == 2);
		for (int c : two.node(0).children) CHECK(two.node(c).label == MdLabel::Series);
		CHECK(build_mdt(edgeless(1)).node(0).label == MdLabel::Leaf);
		CHECK_THROWS_AS(build_mdt(edgeless(0)), std::invalid_argument);
	}

	TEST_CASE("tree invariants on random graphs") {
		for (std::uint64_t seed = 0; seed < 50; ++seed) {
			Graph g = random_graph(10, 0.35, seed);
			const auto t = build_mdt(g);
			check_tree_invariants(g, t);
			for (const auto& nd : t.nodes)
				for (std::size_t i = 1; i < nd.children.size(); ++i)
					CHECK(t.node(nd.children[i - 1]).module.front() < t.node(nd.children[i]).module.front());
		}
	}

	TEST_CASE("fig graph decomposition") {
		const Graph fig = explain(testkit::fig_net().network);
		const auto t = build_mdt(fig);
		check_tree_invariants(fig, t);
		const auto m1 = set_of(fig, {"d", "e", "f", "g", "h"});
		const auto m2 = set_of(fig, {"g", "h"});
		auto label_of = [&](const VertexSet& m) {
			for (const auto& nd : t.nodes)
				if (nd.module == m) return to_string(nd.label);
			return std::string("absent");
		};
		CHECK(label_of(m1) == "prime");
		CHECK(label_of(m2) == "1");
		CHECK(t.node(0).label == MdLabel::Prime);
	}

	TEST_CASE("quotient") {
		CHECK(quotient(complete(2), {{0}, {1}}) == complete(2));
		CHECK(quotient(path(4), {{0}, {1}, {2}, {3}}) == path(4));
		CHECK_THROWS_AS(quotient(path(4), {{0, 1}, {2}, {3}}), std::invalid_argument);
		CHECK_THROWS_AS(quotient(path(4), {{0, 1}, {1, 2}}), std::invalid_argument);

		// Quotient of the fig graph by its maximal strong modules; adjacency
		// must equal that of every cross pair.
		const Graph fig = explain(testkit::fig_net().network);
		const auto t = build_mdt(fig);
		std::vector<VertexSet> parts;
		for (int c : t.node(0).children) parts.push_back(t.node(c).module);
		const Graph h1 = quotient(fig, parts);
		CHECK(h1.size() == static_cast<int>(parts.size()));
		for (std::size_t i = 0; i < parts.size(); ++i)
			for (std::size_t j = i + 1; j < parts.size(); ++j)
				for (Vertex x : parts[i])
					for (Vertex y : parts[j]) CHECK(h1.adjacent(static_cast<int>(i), static_cast<int>(j)) == fig.adjacent(x, y));
		CHECK(build_mdt(h1).node(0).label == MdLabel::Prime);
	}

	TEST_CASE("lowest common node") {
		const auto t = build_mdt(disjoint_union(complete(2), complete(2)));
		CHECK(t.node(t.lowest_common_node({0, 1})).module == VertexSet{0, 1});
		CHECK(t.lowest_common_node({1, 2}) == t.root());
		CHECK(t.node(t.lowest_common_node({3})).module == VertexSet{3});
	}
}
