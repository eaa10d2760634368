#pragma once

#include "gatex/galled_tree.hpp"
#include "gatex/graph.hpp"
#include "gatex/pvr_builder.hpp"
#include "gatex/tie_breaks.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace gatex::testkit {

// Size gates of the exhaustive oracles.
inline constexpr int kCliqueGate = 20;
inline constexpr int kChromaticGate = 12;
inline constexpr int kIndependentGate = 20;
inline constexpr int kModuleGate = 12;

// Each throws std::invalid_argument above its gate.
std::pair<VertexSet, int> brute_max_clique(const Graph& g);
int brute_chromatic(const Graph& g);
std::pair<VertexSet, int> brute_max_independent(const Graph& g);
// Strong modules by subset enumeration, in the order of strong_modules().
std::vector<VertexSet> brute_strong_modules(const Graph& g);

// Reference route for explain(): one lca query per pair of leaves.
Graph explain_by_pairwise_lca(const GalledTree& n);

// Valid pvr-shaped labeled galled-tree on n_leaves leaves whose tree part is
// the MDT of the explained graph. Each inner node with at least four leaves
// below it becomes a cycle with probability cycle_density.
GalledTree random_pvr_network(int n_leaves, double cycle_density, std::uint64_t seed);

// Parallel root over random blocks whose leaf counts are drawn from
// [block_min, block_max]; each block root is a cycle or a series node.
GalledTree random_pvr_forest(int n_leaves, int block_min, int block_max, double cycle_density, std::uint64_t seed);

// Every induced P4 lies in a prime module whose cycle meets it in four
// distinct vertices, one of them the hybrid, not all on one side.
bool p4_conditions_check(const Graph& g, const PvrNetwork& p);

struct Fixture {
	std::string name;
	GalledTree network;
	TieBreaks ties;
	std::string expected_order;                // leaf names concatenated
	std::vector<std::string> expected_clique;  // sorted leaf names
	std::map<std::string, int> expected_omega; // by node name
};

// Labeled galled-tree of the worked examples on leaves a..h.
Fixture fig_net();
// Elementary explanation of the path a-b-c-d.
Fixture p4_net();

NodeId find_node(const GalledTree& n, const std::string& name);

}  // namespace gatex::testkit
