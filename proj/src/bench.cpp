#include "gatex/bench.hpp"

#include "gatex/clique_mis.hpp"
#include "gatex/order_color.hpp"
#include "gatex/pvr_builder.hpp"
#include "gatex/testkit.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

namespace gatex::bench {

namespace {

// Median per-call time in ms over enough repetitions to fill min_ms.
template <class F>
double time_ms(F&& f, double min_ms) {
	using clock = std::chrono::steady_clock;
	std::vector<double> samples;
	double total = 0;
	while (total < min_ms || samples.size() < 3) {
		const auto t0 = clock::now();
		f();
		const double ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
		samples.push_back(ms);
		total += ms;
		if (samples.size() >= 1000) break;
	}
	std::sort(samples.begin(), samples.end());
	return samples[samples.size() / 2];
}

// Streams over a buffer larger than the private caches.
void evict(std::vector<unsigned char>& buf) {
	for (std::size_t i = 0; i < buf.size(); i += 64) buf[i] = static_cast<unsigned char>(buf[i] + 1);
}

template <class F>
double cold_ms(F&& f, int repeats, std::vector<unsigned char>& buf) {
	using clock = std::chrono::steady_clock;
	std::vector<double> samples;
	for (int r = 0; r < repeats; ++r) {
		evict(buf);
		const auto t0 = clock::now();
		f();
		samples.push_back(std::chrono::duration<double, std::milli>(clock::now() - t0).count());
	}
	std::sort(samples.begin(), samples.end());
	return samples[samples.size() / 2];
}

// Keeps results observable so the timed calls are not optimized away.
volatile std::size_t sink = 0;
void keep(std::size_t v) { sink = sink + v; }

}  // namespace

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
	if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("loglog_slope: need at least two points");
	double sx = 0, sy = 0, sxx = 0, sxy = 0;
	const auto k = static_cast<double>(x.size());
	for (std::size_t i = 0; i < x.size(); ++i) {
		const double lx = std::log(x[i]);
		const double ly = std::log(std::max(y[i], 1e-9));
		sx += lx;
		sy += ly;
		sxx += lx * lx;
		sxy += lx * ly;
	}
	return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

std::vector<Report> run(const Config& cfg) {
	std::vector<Report> out;
	std::vector<unsigned char> scratch(cfg.evict_bytes, 0);
	for (const auto& fam : cfg.families) {
		Report rep;
		rep.family = fam;
		for (int e = cfg.min_exp; e <= cfg.max_exp; ++e) {
			const int n = 1 << e;
			auto net = testkit::random_pvr_forest(n, fam.block_min, fam.block_max, fam.cycle_density, cfg.seed + static_cast<std::uint64_t>(e));
			const Graph g = explain(net);
			const auto pvr = PvrNetwork::from_network(std::move(net));
			Row row;
			row.n = n;
			row.network_size = pvr.network.size() + pvr.network.edge_count();
			row.graph_size = static_cast<std::size_t>(g.size()) + g.edge_count();
			auto order = [&] { keep(perfect_order(pvr).sequence.size()); };
			auto color = [&] { keep(static_cast<std::size_t>(greedy_color(g, perfect_order(pvr)).num_colors)); };
			auto clique = [&] { keep(max_clique(pvr).vertices.size()); };
			auto mis = [&] { keep(max_independent_set(pvr).vertices.size()); };
			row.order_ms = cold_ms(order, cfg.cold_repeats, scratch);
			row.color_ms = cold_ms(color, cfg.cold_repeats, scratch);
			row.clique_ms = cold_ms(clique, cfg.cold_repeats, scratch);
			row.mis_ms = cold_ms(mis, cfg.cold_repeats, scratch);
			row.warm_order_ms = time_ms(order, cfg.min_sample_ms);
			row.warm_color_ms = time_ms(color, cfg.min_sample_ms);
			row.warm_clique_ms = time_ms(clique, cfg.min_sample_ms);
			row.warm_mis_ms = time_ms(mis, cfg.min_sample_ms);
			if (e <= cfg.decomposition_max_exp)
				row.decomposition_ms = time_ms([&] { keep(build_pvr(g).network.size()); }, cfg.min_sample_ms);
			rep.rows.push_back(row);
		}
		std::vector<double> x, xd, order, color, clique, mis, dec, w_order, w_color, w_clique, w_mis;
		for (const auto& r : rep.rows) {
			x.push_back(static_cast<double>(r.graph_size));
			order.push_back(r.order_ms);
			color.push_back(r.color_ms);
			clique.push_back(r.clique_ms);
			mis.push_back(r.mis_ms);
			w_order.push_back(r.warm_order_ms);
			w_color.push_back(r.warm_color_ms);
			w_clique.push_back(r.warm_clique_ms);
			w_mis.push_back(r.warm_mis_ms);
			if (r.decomposition_ms >= 0) {
				xd.push_back(static_cast<double>(r.graph_size));
				dec.push_back(r.decomposition_ms);
			}
		}
		if (x.size() >= 2) {
			rep.slope_order = loglog_slope(x, order);
			rep.slope_color = loglog_slope(x, color);
			rep.slope_clique = loglog_slope(x, clique);
			rep.slope_mis = loglog_slope(x, mis);
			rep.warm_slope_order = loglog_slope(x, w_order);
			rep.warm_slope_color = loglog_slope(x, w_color);
			rep.warm_slope_clique = loglog_slope(x, w_clique);
			rep.warm_slope_mis = loglog_slope(x, w_mis);
		}
		rep.slope_decomposition = xd.size() >= 2 ? loglog_slope(xd, dec) : std::nan("");
		out.push_back(std::move(rep));
	}
	return out;
}

bool within_limit(const Report& r) {
	return r.slope_order <= kSlopeLimit && r.slope_color <= kSlopeLimit && r.slope_clique <= kSlopeLimit &&
	       r.slope_mis <= kSlopeLimit;
}

}  // namespace gatex::bench
