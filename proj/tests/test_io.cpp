#include "support.hpp"

#include "gatex/io.hpp"
#include "gatex/testkit.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace gatex;
using namespace support;

namespace {

Graph edge_list(const std::string& text) {
	std::istringstream in(text);
	return io::read_edge_list(in);
}

Graph dimacs(const std::string& text) {
	std::istringstream in(text);
	return io::read_dimacs(in);
}

std::string slurp(const std::string& path) {
	std::ifstream in(path);
	REQUIRE(in);
	std::stringstream buf;
	buf << in.rdbuf();
	return buf.str();
}

// Equal as graphs on named vertices: same name set, same adjacency by name.
bool same_by_names(const Graph& a, const Graph& b) {
	if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
	for (int v = 0; v < a.size(); ++v)
		if (b.find(a.name(v)) == -1) return false;
	for (auto [u, v] : a.edges())
		if (!b.adjacent(b.find(a.name(u)), b.find(a.name(v)))) return false;
	return true;
}

}  // namespace

TEST_SUITE("io") {
	TEST_CASE("edge list with ids") {
		const Graph g = edge_list("4 3\n0 1\n1 2\n# comment\n\n2 3\n");
		CHECK(g == path(4));
		CHECK_FALSE(g.has_names());
	}

	TEST_CASE("edge list with names") {
		const Graph g = edge_list("5 3\na b\nb c\nc d\n");
		CHECK(g.size() == 5);
		CHECK(g.name(0) == "a");
		CHECK(g.name(3) == "d");
		CHECK(g.name(4) == "4");
		CHECK(g.adjacent(g.find("b"), g.find("c")));
		// One token outside [0, n) switches the whole file to names.
		const Graph h = edge_list("3 2\n0 1\n1 7\n");
		CHECK(h.has_names());
		CHECK(h.name(2) == "7");
	}

	TEST_CASE("edge list errors") {
		CHECK_THROWS_AS(edge_list(""), std::invalid_argument);
		CHECK_THROWS_AS(edge_list("3\n"), std::invalid_argument);
		CHECK_THROWS_AS(edge_list("x 1\n0 1\n"), std::invalid_argument);
		CHECK_THROWS_AS(edge_list("3 2\n0 1\n"), std::invalid_argument);
		CHECK_THROWS_AS(edge_list("3 1\n0 1 2\n"), std::invalid_argument);
		CHECK_THROWS_AS(edge_list("3 1\n1 1\n"), std::invalid_argument);
		CHECK_THROWS_AS(edge_list("3 2\n0 1\n1 0\n"), std::invalid_argument);
		CHECK_THROWS_AS(edge_list("2 2\na b\nc d\n"), std::invalid_argument);
	}

	TEST_CASE("edge list round trip") {
		for (std::uint64_t seed = 0; seed < 30; ++seed) {
			const Graph g = random_graph(12, 0.3, seed);
			std::stringstream s;
			io::write_edge_list(s, g);
			CHECK(io::read_edge_list(s) == g);
		}
		// Named graphs come back with the same names and adjacency; vertex
		// ids follow first appearance in the file.
		const Graph fig = explain(testkit::fig_net().network);
		std::stringstream s;
		io::write_edge_list(s, fig);
		CHECK(same_by_names(io::read_edge_list(s), fig));
	}

	TEST_CASE("dimacs") {
		const Graph g = dimacs("c a comment\np edge 4 3\ne 1 2\ne 2 3\ne 3 4\n");
		CHECK(g == path(4));
		CHECK(dimacs("p col 2 1\ne 1 2\n") == complete(2));
		CHECK_THROWS_AS(dimacs("e 1 2\n"), std::invalid_argument);
		CHECK_THROWS_AS(dimacs("p edge 2 1\ne 0 1\n"), std::invalid_argument);
		CHECK_THROWS_AS(dimacs("p edge 2 1\ne 1 3\n"), std::invalid_argument);
		CHECK_THROWS_AS(dimacs("p edge 2 2\ne 1 2\n"), std::invalid_argument);
		CHECK_THROWS_AS(dimacs("p edge 2 1\nx 1 2\n"), std::invalid_argument);
		CHECK_THROWS_AS(dimacs("p edge 2 1\np edge 2 1\ne 1 2\n"), std::invalid_argument);
		CHECK_THROWS_AS(dimacs("p edge 2 2\ne 1 2\ne 2 1\n"), std::invalid_argument);
		for (std::uint64_t seed = 0; seed < 20; ++seed) {
			const Graph r = random_graph(15, 0.3, seed);
			std::stringstream s;
			io::write_dimacs(s, r);
			CHECK(io::read_dimacs(s) == r);
		}
	}

	TEST_CASE("format detection") {
		std::istringstream d("c x\np edge 2 1\ne 1 2\n");
		CHECK(io::read_graph(d, "auto") == complete(2));
		std::istringstream e("2 1\n0 1\n");
		CHECK(io::read_graph(e, "auto") == complete(2));
		std::istringstream bad("2 1\n0 1\n");
		CHECK_THROWS_AS(io::read_graph(bad, "xml"), std::invalid_argument);
	}

	TEST_CASE("network json round trip") {
		std::vector<GalledTree> nets{testkit::fig_net().network, testkit::p4_net().network};
		for (std::uint64_t seed = 0; seed < 30; ++seed) nets.push_back(testkit::random_pvr_network(15, 0.7, seed));
		for (const auto& n : nets) {
			const auto text = io::network_to_json(n);
			const auto back = io::parse_network_json(text);
			CHECK(back == n);
			CHECK(io::network_to_json(back, -1) == io::network_to_json(n, -1));
		}
	}

	TEST_CASE("network json errors") {
		const std::string ok = R"({"nodes":[{"id":0,"kind":"leaf","label":"leaf","name":"x"}],"edges":[]})";
		CHECK(io::parse_network_json(ok).size() == 1);
		CHECK_THROWS_AS(io::parse_network_json("{"), std::invalid_argument);
		CHECK_THROWS_AS(io::parse_network_json("[]"), std::invalid_argument);
		CHECK_THROWS_AS(io::parse_network_json(R"({"nodes":[],"edges":[],"extra":1})"), std::invalid_argument);
		CHECK_THROWS_AS(io::parse_network_json(R"({"nodes":[{"id":0,"kind":"leaf","label":"leaf","colour":1}],"edges":[]})"),
		                std::invalid_argument);
		CHECK_THROWS_AS(io::parse_network_json(R"({"nodes":[{"id":1,"kind":"leaf","label":"leaf"}],"edges":[]})"), std::invalid_argument);
		CHECK_THROWS_AS(io::parse_network_json(R"({"nodes":[{"id":0,"kind":"twig","label":"leaf"}],"edges":[]})"), std::invalid_argument);
		CHECK_THROWS_AS(io::parse_network_json(R"({"nodes":[{"id":0,"kind":"leaf","label":"2"}],"edges":[]})"), std::invalid_argument);
		CHECK_THROWS_AS(io::parse_network_json(R"({"nodes":[{"id":0,"kind":"leaf","label":"leaf"}],"edges":[[0,5]]})"),
		                std::invalid_argument);
		CHECK_THROWS_AS(io::parse_network_json(R"({"nodes":[{"id":0,"kind":"leaf"}],"edges":[]})"), std::invalid_argument);
	}

	TEST_CASE("fixture files match the built-in fixtures") {
		for (const auto& fx : {testkit::fig_net(), testkit::p4_net()}) {
			const std::string dir = FIXTURE_DIR;
			CHECK(io::parse_network_json(slurp(dir + "/" + fx.name + ".json")) == fx.network);
			std::istringstream side(slurp(dir + "/" + fx.name + ".expected.json"));
			const auto ties = io::read_overrides(side);
			CHECK(ties.concat_order == fx.ties.concat_order);
			CHECK(ties.argmax_pick == fx.ties.argmax_pick);
		}
	}

	TEST_CASE("overrides") {
		std::istringstream none("{}");
		CHECK(io::read_overrides(none).empty());
		std::istringstream one(R"({"tie_breaks":{"argmax_pick":{"7":14}},"expected":{}})");
		const auto t = io::read_overrides(one);
		CHECK(t.argmax_pick.at(7) == 14);
		std::istringstream bad_key(R"({"tie_breaks":{"argmax_pick":{"x":1}}})");
		CHECK_THROWS_AS(io::read_overrides(bad_key), std::invalid_argument);
		std::istringstream bad_field(R"({"tie_breaks":{"order":{}}})");
		CHECK_THROWS_AS(io::read_overrides(bad_field), std::invalid_argument);
		std::istringstream bad_json("{");
		CHECK_THROWS_AS(io::read_overrides(bad_json), std::invalid_argument);
	}

	TEST_CASE("dot output") {
		std::ostringstream g;
		io::write_dot(g, path(3));
		CHECK(g.str().find("0 -- 1;") != std::string::npos);
		std::ostringstream n;
		io::write_dot(n, testkit::p4_net().network);
		CHECK(n.str().find("doublecircle") != std::string::npos);
		CHECK(n.str().rfind("digraph", 0) == 0);
	}
}
