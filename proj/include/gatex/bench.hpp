#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace gatex::bench {

struct Family {
	std::string name;
	int block_min = 8;
	int block_max = 32;
	double cycle_density = 0.7;
};

struct Config {
	int min_exp = 10;
	int max_exp = 17;
	int decomposition_max_exp = 14;
	std::uint64_t seed = 1;
	double min_sample_ms = 20.0;  // warm runs repeat until this much time is spent
	int cold_repeats = 15;        // cold runs: fixed count, caches evicted before each
	std::size_t evict_bytes = std::size_t{32} << 20;
	std::vector<Family> families = {{"blocks-8-32", 8, 32, 0.7}, {"blocks-32-128", 32, 128, 0.7}};
};

struct Row {
	int n = 0;
	std::size_t network_size = 0;  // nodes + edges of the network
	std::size_t graph_size = 0;    // |V| + |E| of the explained graph
	// Median per-call times with caches evicted before each call.
	double order_ms = 0, color_ms = 0, clique_ms = 0, mis_ms = 0;
	// Same pipelines, repeated back to back on a warm cache.
	double warm_order_ms = 0, warm_color_ms = 0, warm_clique_ms = 0, warm_mis_ms = 0;
	double decomposition_ms = -1;  // -1 when not measured
};

struct Report {
	Family family;
	std::vector<Row> rows;
	// Least-squares slope of log(time) against log(|V|+|E|), cold timings.
	double slope_order = 0, slope_color = 0, slope_clique = 0, slope_mis = 0;
	// Warm-cache slopes; these include the step where the working set leaves
	// the private caches and are reported, not bounded.
	double warm_slope_order = 0, warm_slope_color = 0, warm_slope_clique = 0, warm_slope_mis = 0;
	double slope_decomposition = 0;  // over the measured rows only; NaN with fewer than two
};

inline constexpr double kSlopeLimit = 1.15;

std::vector<Report> run(const Config& cfg);
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);
bool within_limit(const Report& r);

}  // namespace gatex::bench
