#include "support.hpp"

#include "gatex/pvr_builder.hpp"
#include "gatex/testkit.hpp"

#include <doctest.h>

#include <algorithm>
#include <bit>

using namespace gatex;
using namespace support;

namespace {

// Largest clique by plain subset enumeration.
int omega_by_subsets(const Graph& g) {
	const int n = g.size();
	int best = 0;
	for (unsigned mask = 1; mask < (1u << n); ++mask) {
		bool ok = true;
		for (int u = 0; u < n && ok; ++u)
			for (int v = u + 1; v < n && ok; ++v)
				if ((mask >> u & 1u) && (mask >> v & 1u) && !g.adjacent(u, v)) ok = false;
		if (ok) best = std::max(best, std::popcount(mask));
	}
	return best;
}

// Fewest colors over every assignment in [0,k)^n, trying k = 1, 2, ...
int chi_by_assignments(const Graph& g) {
	const int n = g.size();
	for (int k = 1;; ++k) {
		std::vector<int> c(static_cast<std::size_t>(n), 0);
		while (true) {
			bool ok = true;
			for (auto [u, v] : g.edges()) ok = ok && c[static_cast<std::size_t>(u)] != c[static_cast<std::size_t>(v)];
			if (ok) return k;
			int i = 0;
			while (i < n && ++c[static_cast<std::size_t>(i)] == k) c[static_cast<std::size_t>(i++)] = 0;
			if (i == n) break;
		}
	}
}

}  // namespace

TEST_SUITE("testkit") {
	TEST_CASE("brute-force oracle examples") {
		CHECK(testkit::brute_max_clique(complete(4)).second == 4);
		CHECK(testkit::brute_max_clique(cycle(5)).second == 2);
		CHECK(testkit::brute_max_clique(path(4)).second == 2);
		CHECK(testkit::brute_chromatic(complete(4)) == 4);
		CHECK(testkit::brute_chromatic(cycle(5)) == 3);
		CHECK(testkit::brute_chromatic(path(4)) == 2);
		CHECK(testkit::brute_max_independent(complete(4)).second == 1);
		CHECK(testkit::brute_max_independent(cycle(5)).second == 2);
		CHECK(testkit::brute_max_independent(edgeless(5)).second == 5);
		CHECK(testkit::brute_max_clique(edgeless(1)).second == 1);
	}

	TEST_CASE("size gates") {
		CHECK_THROWS_AS(testkit::brute_max_clique(edgeless(testkit::kCliqueGate + 1)), std::invalid_argument);
		CHECK_THROWS_AS(testkit::brute_chromatic(edgeless(testkit::kChromaticGate + 1)), std::invalid_argument);
		CHECK_THROWS_AS(testkit::brute_max_independent(edgeless(testkit::kIndependentGate + 1)), std::invalid_argument);
		CHECK_THROWS_AS(testkit::brute_strong_modules(edgeless(testkit::kModuleGate + 1)), std::invalid_argument);
		CHECK(testkit::brute_max_clique(complete(testkit::kCliqueGate)).second == testkit::kCliqueGate);
	}

	TEST_CASE("oracles agree with plain enumeration") {
		for (std::uint64_t seed = 0; seed < 60; ++seed) {
			const Graph g = random_graph(2 + static_cast<int>(seed % 6), 0.5, seed);
			const auto [clique, omega] = testkit::brute_max_clique(g);
			CHECK(omega == omega_by_subsets(g));
			CHECK(static_cast<int>(clique.size()) == omega);
			for (std::size_t i = 0; i < clique.size(); ++i)
				for (std::size_t j = i + 1; j < clique.size(); ++j) CHECK(g.adjacent(clique[i], clique[j]));
			const auto [indep, alpha] = testkit::brute_max_independent(g);
			CHECK(alpha == omega_by_subsets(complement(g)));
			CHECK(static_cast<int>(indep.size()) == alpha);
			CHECK(testkit::brute_chromatic(g) == chi_by_assignments(g));
		}
	}

	TEST_CASE("random networks are valid and deterministic") {
		const auto one = testkit::random_pvr_network(1, 0.5, 7);
		CHECK(one.size() == 1);
		CHECK(one.is_leaf(0));
		CHECK(validate(one, true).empty());
		CHECK(testkit::random_pvr_network(30, 0.6, 42) == testkit::random_pvr_network(30, 0.6, 42));
		CHECK_FALSE(testkit::random_pvr_network(30, 0.6, 42) == testkit::random_pvr_network(30, 0.6, 43));
		int with_cycles = 0;
		for (std::uint64_t seed = 0; seed < 1000; ++seed) {
			const int n = 1 + static_cast<int>(seed % 12);
			const auto net = testkit::random_pvr_network(n, 0.1 * static_cast<double>(seed % 11), seed);
			REQUIRE(validate(net, true).empty());
			CHECK(net.leaves().size() == static_cast<std::size_t>(n));
			if (n > 1) with_cycles += !cycles(net).empty();
		}
		CHECK(with_cycles > 300);
	}

	TEST_CASE("random forests") {
		for (std::uint64_t seed = 0; seed < 20; ++seed) {
			const auto net = testkit::random_pvr_forest(200, 8, 32, 0.7, seed);
			REQUIRE(validate(net, true).empty());
			CHECK(net.leaves().size() == 200);
			const auto p = PvrNetwork::from_network(net);
			CHECK(p.mdt.node(0).label == MdLabel::Parallel);
		}
		CHECK(validate(testkit::random_pvr_forest(20, 32, 64, 0.7, 1), true).empty());
	}

	TEST_CASE("generated networks are pvr-shaped for their own graph") {
		for (std::uint64_t seed = 0; seed < 100; ++seed) {
			const auto net = testkit::random_pvr_network(12, 0.8, seed);
			CHECK_NOTHROW(PvrNetwork::from_network(net));
			for (const auto& c : cycles(net)) {
				const bool strong_shape = c.side1.size() > 2 && c.side2.size() > 2 && !(c.side1.size() == 3 && c.side2.size() == 3);
				CHECK(strong_shape);
			}
		}
	}

	TEST_CASE("P4 placement conditions") {
		const Graph co = random_cograph(9, 3);
		CHECK(testkit::p4_conditions_check(co, build_pvr(co)));
		const auto p4 = PvrNetwork::from_network(testkit::p4_net().network);
		CHECK(testkit::p4_conditions_check(explain(p4.network), p4));
		const auto fig = PvrNetwork::from_network(testkit::fig_net().network);
		CHECK(testkit::p4_conditions_check(explain(fig.network), fig));
		for (std::uint64_t seed = 0; seed < 100; ++seed) {
			const auto net = testkit::random_pvr_network(4 + static_cast<int>(seed % 9), 0.9, seed);
			const Graph g = explain(net);
			CHECK(testkit::p4_conditions_check(g, build_pvr(g)));
			CHECK(testkit::p4_conditions_check(g, PvrNetwork::from_network(net)));
		}
	}

	TEST_CASE("fixtures") {
		for (const auto& fx : {testkit::fig_net(), testkit::p4_net()}) {
			CHECK(validate(fx.network, true).empty());
			CHECK(fx.network.leaves().size() == fx.expected_order.size());
		}
		const auto fig = testkit::fig_net();
		CHECK(fig.network.size() == 19);
		CHECK(testkit::find_node(fig.network, "u_f") == 9);
		CHECK_THROWS_AS(testkit::find_node(fig.network, "zz"), std::invalid_argument);
		CHECK(fig.network.label(testkit::find_node(fig.network, "u")) == Label::Zero);
		CHECK(testkit::p4_net().ties.empty());
	}
}
