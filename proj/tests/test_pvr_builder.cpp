#include "support.hpp"

#include "gatex/pvr_builder.hpp"
#include "gatex/testkit.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace gatex;
using namespace support;

namespace {

const std::vector<std::string> abcd{"a", "b", "c", "d"};

// Labels down one side, top-down, and the leaf names hanging off it.
std::pair<std::string, std::string> side_profile(const GalledTree& n, const CycleDescriptor& c, const std::vector<NodeId>& side) {
	std::string labels, leaves;
	for (std::size_t i = 1; i + 1 < side.size(); ++i) {
		labels += to_string(n.label(side[i]));
		leaves += n.leaf_name(off_cycle_child(n, c, side[i]));
	}
	return {labels, leaves};
}

std::set<VertexSet> leafsets_of_tree_part(const PvrNetwork& p) {
	const auto sets = leaf_sets(p.network);
	const auto member = cycle_membership(p.network, p.cycles);
	std::set<VertexSet> out;
	for (std::size_t x = 0; x < p.network.size(); ++x)
		if (member[x] == -1) out.insert(sets[x]);
	return out;
}

void check_pvr_invariants(const Graph& g, const PvrNetwork& p) {
	CHECK(validate(p.network, true).empty());
	CHECK(explain(p.network) == g);
	// Prime MDT nodes and cycles correspond one to one.
	std::size_t primes = 0;
	for (std::size_t i = 0; i < p.mdt.size(); ++i) {
		if (p.mdt.nodes[i].label != MdLabel::Prime) {
			CHECK(p.cycle_of_mdt[i] == -1);
			continue;
		}
		++primes;
		const int c = p.cycle_of_mdt[i];
		REQUIRE(c >= 0);
		CHECK(p.mdt_of_cycle[static_cast<std::size_t>(c)] == static_cast<int>(i));
		CHECK(p.cycles[static_cast<std::size_t>(c)].rho == p.mdt_to_network[i]);
	}
	CHECK(primes == p.cycles.size());
	// MDT nodes are exactly the off-cycle nodes and cycle roots.
	std::set<VertexSet> modules;
	for (const auto& nd : p.mdt.nodes) modules.insert(nd.module);
	CHECK(leafsets_of_tree_part(p) == modules);
	const auto sets = leaf_sets(p.network);
	for (const auto& c : p.cycles) {
		CHECK(p.network.parents(c.eta).size() == 2);
		CHECK(p.network.children(c.eta).size() == 1);
		for (NodeId w : c.internal()) CHECK(p.network.children(w).size() == 2);
		VertexSet both;
		const auto& l1 = sets[static_cast<std::size_t>(c.side1[1])];
		const auto& l2 = sets[static_cast<std::size_t>(c.side2[1])];
		std::set_intersection(l1.begin(), l1.end(), l2.begin(), l2.end(), std::back_inserter(both));
		CHECK(both == sets[static_cast<std::size_t>(c.eta)]);
	}
}

}  // namespace

TEST_SUITE("pvr_builder") {
	TEST_CASE("elementary explanation of P4") {
		Graph p4 = named(abcd, "a-b b-c c-d");
		auto n = explain_prime_by_elementary(p4);
		REQUIRE(n);
		CHECK(explain(*n) == p4);
		auto c = cycles(*n);
		REQUIRE(c.size() == 1);
		CHECK(n->label(c[0].rho) == Label::Zero);
		CHECK(n->leaf_name(off_cycle_child(*n, c[0], c[0].eta)) == "b");
		CHECK(side_profile(*n, c[0], c[0].side1) == std::pair<std::string, std::string>{"1", "a"});
		CHECK(side_profile(*n, c[0], c[0].side2) == std::pair<std::string, std::string>{"10", "cd"});
		const auto cls = classify(*n);
		CHECK((cls.elementary && cls.strong && cls.quasi_discriminating));
		// Same shape as the hand-built fixture.
		const auto fixture = testkit::p4_net().network;
		CHECK(explain(fixture) == p4);
		auto fc = cycles(fixture);
		CHECK(side_profile(fixture, fc[0], fc[0].side1) == side_profile(*n, c[0], c[0].side1));
		CHECK(side_profile(fixture, fc[0], fc[0].side2) == side_profile(*n, c[0], c[0].side2));
	}

	TEST_CASE("elementary explanation of P5") {
		Graph p5 = named({"a", "b", "c", "d", "e"}, "a-b b-c c-d d-e");
		auto n = explain_prime_by_elementary(p5);
		REQUIRE(n);
		CHECK(explain(*n) == p5);
		auto c = cycles(*n);
		REQUIRE(c.size() == 1);
		CHECK(n->label(c[0].rho) == Label::Zero);
		CHECK(n->leaf_name(off_cycle_child(*n, c[0], c[0].eta)) == "c");
		CHECK(side_profile(*n, c[0], c[0].side1) == std::pair<std::string, std::string>{"10", "ba"});
		CHECK(side_profile(*n, c[0], c[0].side2) == std::pair<std::string, std::string>{"10", "de"});
	}

	TEST_CASE("C5 has no elementary explanation") {
		CHECK_FALSE(explain_prime_by_elementary(cycle(5)));
		CHECK_THROWS_AS(explain_prime_by_elementary(complete(4)), std::invalid_argument);
		CHECK_THROWS_AS(explain_prime_by_elementary(path(3)), std::invalid_argument);
		CHECK_THROWS_AS(explain_prime_by_elementary(disjoint_union(path(4), edgeless(1))), std::invalid_argument);
	}

	TEST_CASE("every accepted elementary explanation verifies") {
		// Prime graphs on up to 7 vertices from random draws; any accepted
		// network must be strong, quasi-discriminating, elementary and exact.
		int accepted = 0, primes = 0;
		for (std::uint64_t seed = 0; seed < 400; ++seed) {
			Graph h = random_graph(4 + static_cast<int>(seed % 4), 0.5, seed);
			const auto t = build_mdt(h);
			if (t.node(0).label != MdLabel::Prime || t.node(0).children.size() != static_cast<std::size_t>(h.size())) continue;
			++primes;
			auto n = explain_prime_by_elementary(h);
			if (!n) continue;
			++accepted;
			const auto cls = classify(*n);
			CHECK((cls.elementary && cls.strong && cls.quasi_discriminating));
			CHECK(validate(*n, true).empty());
			CHECK(explain(*n) == h);
		}
		CHECK(primes > 50);
		CHECK(accepted > 0);
	}

	TEST_CASE("cographs give the MDT itself") {
		for (std::uint64_t seed = 0; seed < 30; ++seed) {
			Graph g = random_cograph(2 + static_cast<int>(seed % 10), seed);
			auto p = build_pvr(g);
			CHECK(p.cycles.empty());
			CHECK(p.network.size() == p.mdt.size());
			CHECK(is_gatex(g));
			check_pvr_invariants(g, p);
		}
		auto one = build_pvr(edgeless(1));
		CHECK(one.network.size() == 1);
		CHECK(validate(one.network).empty());
	}

	TEST_CASE("P4 builds the P4 fixture shape") {
		Graph p4 = named(abcd, "a-b b-c c-d");
		auto p = build_pvr(p4);
		REQUIRE(p.cycles.size() == 1);
		CHECK(p.cycles[0].rho == p.network.root());
		CHECK(p.network.size() == testkit::p4_net().network.size());
		check_pvr_invariants(p4, p);
	}

	TEST_CASE("fig graph builds a two-cycle network") {
		const Graph fig = explain(testkit::fig_net().network);
		auto p = build_pvr(fig);
		CHECK(p.cycles.size() == 2);
		CHECK(p.network.size() == testkit::fig_net().network.size());
		check_pvr_invariants(fig, p);
	}

	TEST_CASE("not GaTEx graphs and their witness") {
		CHECK_FALSE(is_gatex(cycle(5)));
		CHECK(is_gatex(path(4)));
		CHECK(is_gatex(path(5)));
		CHECK(is_gatex(Graph{}));
		try {
			build_pvr(disjoint_union(cycle(5), edgeless(1)));
			FAIL("expected NotGatexError");
		} catch (const NotGatexError& e) {
			CHECK(e.witness() == VertexSet{0, 1, 2, 3, 4});
		}
	}

	TEST_CASE("round trip over generated networks") {
		for (std::uint64_t seed = 0; seed < 80; ++seed) {
			const auto n = testkit::random_pvr_network(4 + static_cast<int>(seed % 20), 0.25 * static_cast<double>(seed % 5), seed);
			const Graph g = explain(n);
			auto p = build_pvr(g);
			check_pvr_invariants(g, p);
			CHECK(testkit::p4_conditions_check(g, p));
		}
	}

	TEST_CASE("from_network wraps pvr-shaped networks") {
		for (auto fx : {testkit::fig_net(), testkit::p4_net()}) {
			const Graph g = explain(fx.network);
			auto p = PvrNetwork::from_network(fx.network);
			CHECK(p.network == fx.network);
			check_pvr_invariants(g, p);
		}
		for (std::uint64_t seed = 0; seed < 30; ++seed) {
			const auto n = testkit::random_pvr_network(12, 0.7, seed);
			auto p = PvrNetwork::from_network(n);
			check_pvr_invariants(explain(n), p);
		}
		// Root label 1 over a series child: the tree part is not the MDT.
		NetBuilder b;
		b.leaves("p q s").node("r", 'r', 1).node("x", 't', 1).edges("r>x r>s x>p x>q");
		CHECK_THROWS_AS(PvrNetwork::from_network(b.net), std::invalid_argument);
		NetBuilder bad;
		bad.leaves("p").node("r", 'r', 1).edges("r>p");
		CHECK_THROWS_AS(PvrNetwork::from_network(bad.net), std::invalid_argument);
	}

	TEST_CASE("complement labeling") {
		auto p4 = PvrNetwork::from_network(testkit::p4_net().network);
		auto flipped = complement_labeling(p4);
		CHECK(explain(flipped.network) == named(abcd, "c-a a-d d-b"));
		CHECK(complement_labeling(flipped).network == p4.network);
		for (std::size_t x = 0; x < p4.network.size(); ++x)
			if (p4.network.is_leaf(static_cast<NodeId>(x))) CHECK(flipped.network.label(static_cast<NodeId>(x)) == Label::Odot);

		auto star = build_pvr(complete(5));
		CHECK(explain(complement_labeling(star).network).edge_count() == 0);

		for (std::uint64_t seed = 0; seed < 40; ++seed) {
			auto p = PvrNetwork::from_network(testkit::random_pvr_network(11, 0.7, seed));
			auto c = complement_labeling(p);
			CHECK(explain(c.network) == complement(explain(p.network)));
			CHECK(complement_labeling(c).network == p.network);
		}
	}
}
