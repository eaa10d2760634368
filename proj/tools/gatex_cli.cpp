// Command-line front end: recognition, decomposition, ordering, coloring,
// clique / independent set, generation, oracle checks and benchmarks.

#include "gatex/bench.hpp"
#include "gatex/clique_mis.hpp"
#include "gatex/io.hpp"
#include "gatex/modular_decomposition.hpp"
#include "gatex/order_color.hpp"
#include "gatex/pvr_builder.hpp"
#include "gatex/testkit.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace gatex;
using nlohmann::json;

namespace {

constexpr int kObstructionGate = 60;

struct Options {
	std::string input = "-";
	std::string input_format = "auto";
	std::string format = "edgelist";
	std::string out;
	std::string overrides;
	bool json = false;
	bool oracle_check = false;
	std::uint64_t seed = 1;
	int leaves = 12;
	double density = 0.5;
	int min_exp = 10;
	int max_exp = 17;
	int decomposition_max_exp = 14;
};

// Input after format detection: a graph, plus the network when one was given.
struct Loaded {
	Graph graph;
	std::optional<PvrNetwork> network;
};

std::string slurp(const std::string& path) {
	std::stringstream buf;
	if (path == "-") {
		buf << std::cin.rdbuf();
	} else {
		std::ifstream in(path);
		if (!in) throw std::invalid_argument("cannot open " + path);
		buf << in.rdbuf();
	}
	return buf.str();
}

bool looks_like_json(const std::string& text) {
	for (char c : text)
		if (!std::isspace(static_cast<unsigned char>(c))) return c == '{';
	return false;
}

// Last loaded graph, for naming the witness of a failed recognition.
std::optional<Graph> last_graph;

Loaded load(const Options& o) {
	const std::string text = slurp(o.input);
	std::string fmt = o.input_format;
	if (fmt == "auto" && looks_like_json(text)) fmt = "network";
	if (fmt == "network") {
		auto pvr = PvrNetwork::from_network(io::parse_network_json(text));
		Graph g = explain(pvr.network);
		return {std::move(g), std::move(pvr)};
	}
	std::istringstream in(text);
	Graph g = io::read_graph(in, fmt);
	last_graph = g;
	return {std::move(g), std::nullopt};
}

PvrNetwork network_of(Loaded& l) {
	if (l.network) return *l.network;
	return build_pvr(l.graph);
}

TieBreaks load_overrides(const Options& o) {
	if (o.overrides.empty()) return {};
	std::ifstream in(o.overrides);
	if (!in) throw std::invalid_argument("cannot open " + o.overrides);
	return io::read_overrides(in);
}

// Writes to --out when given, else stdout.
void emit(const Options& o, const std::string& text) {
	if (o.out.empty()) {
		std::cout << text;
		return;
	}
	std::ofstream f(o.out);
	if (!f) throw std::invalid_argument("cannot write " + o.out);
	f << text;
}

std::vector<std::string> names_of(const Graph& g, const VertexSet& s) {
	std::vector<std::string> out;
	for (Vertex v : s) out.push_back(g.name(v));
	return out;
}

std::string joined(const std::vector<std::string>& xs) {
	std::string out;
	for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? " " : "") + xs[i];
	return out;
}

void require_gate(const Graph& g, int gate, const char* what) {
	if (g.size() > gate)
		throw std::invalid_argument(std::string("--oracle-check: ") + what + " oracle accepts at most " + std::to_string(gate) +
		                            " vertices, input has " + std::to_string(g.size()));
}

[[noreturn]] void oracle_failure(const std::string& what) { throw std::logic_error("oracle check failed: " + what); }

std::string graph_text(const Graph& g, const std::string& format) {
	std::ostringstream s;
	if (format == "edgelist") io::write_edge_list(s, g);
	else if (format == "dimacs") io::write_dimacs(s, g);
	else if (format == "dot") io::write_dot(s, g);
	else throw std::invalid_argument("unknown output format: " + format);
	return s.str();
}

int cmd_recognize(const Options& o) {
	Loaded l = load(o);
	auto p = network_of(l);
	if (o.oracle_check && !(explain(p.network) == l.graph)) oracle_failure("network does not explain the input");
	if (o.json) {
		emit(o, json{{"gatex", true}, {"network", json::parse(io::network_to_json(p.network))}}.dump(2) + "\n");
	} else {
		std::string text = "gatex: yes\ncycles: " + std::to_string(p.cycles.size()) + "\n";
		if (o.format == "dot") {
			std::ostringstream s;
			io::write_dot(s, p.network);
			text += s.str();
		} else {
			text += io::network_to_json(p.network) + "\n";
		}
		emit(o, text);
	}
	return 0;
}

int cmd_explain(const Options& o) {
	Loaded l = load(o);
	emit(o, graph_text(l.graph, o.format));
	return 0;
}

int cmd_mdt(const Options& o) {
	Loaded l = load(o);
	if (l.graph.empty()) throw std::invalid_argument("mdt: empty graph");
	const auto t = build_mdt(l.graph);
	if (o.json) {
		json nodes = json::array();
		for (const auto& nd : t.nodes)
			nodes.push_back({{"label", to_string(nd.label)}, {"module", names_of(l.graph, nd.module)}, {"children", nd.children}});
		emit(o, json{{"nodes", nodes}}.dump(2) + "\n");
		return 0;
	}
	std::string text;
	std::vector<std::pair<int, int>> stack{{t.root(), 0}};
	while (!stack.empty()) {
		auto [id, depth] = stack.back();
		stack.pop_back();
		const auto& nd = t.node(id);
		text += std::string(static_cast<std::size_t>(2 * depth), ' ') + to_string(nd.label) + " {" +
		        joined(names_of(l.graph, nd.module)) + "}\n";
		for (auto it = nd.children.rbegin(); it != nd.children.rend(); ++it) stack.emplace_back(*it, depth + 1);
	}
	emit(o, text);
	return 0;
}

int cmd_order(const Options& o) {
	Loaded l = load(o);
	auto p = network_of(l);
	const auto order = perfect_order(p, load_overrides(o));
	if (o.oracle_check) {
		require_gate(l.graph, kObstructionGate, "obstruction");
		if (!is_perfect_order(l.graph, order)) oracle_failure("order contains an obstruction");
	}
	const auto names = names_of(l.graph, order.sequence);
	if (o.json) emit(o, json{{"order", names}}.dump() + "\n");
	else emit(o, joined(names) + "\n");
	return 0;
}

int cmd_color(const Options& o) {
	Loaded l = load(o);
	auto p = network_of(l);
	const auto col = greedy_color(l.graph, perfect_order(p, load_overrides(o)));
	if (o.oracle_check) {
		require_gate(l.graph, testkit::kChromaticGate, "chromatic");
		if (col.num_colors != testkit::brute_chromatic(l.graph)) oracle_failure("color count differs from the chromatic number");
	}
	if (o.json) {
		json colors = json::object();
		for (int v = 0; v < l.graph.size(); ++v) colors[l.graph.name(v)] = col.color[static_cast<std::size_t>(v)];
		emit(o, json{{"colors", col.num_colors}, {"coloring", colors}}.dump() + "\n");
		return 0;
	}
	std::string text = "colors: " + std::to_string(col.num_colors) + "\n";
	for (int v = 0; v < l.graph.size(); ++v) text += l.graph.name(v) + " " + std::to_string(col.color[static_cast<std::size_t>(v)]) + "\n";
	emit(o, text);
	return 0;
}

void check_set(const Graph& g, const CliqueResult& r, bool independent) {
	for (std::size_t i = 0; i < r.vertices.size(); ++i)
		for (std::size_t j = i + 1; j < r.vertices.size(); ++j)
			if (g.adjacent(r.vertices[i], r.vertices[j]) == independent)
				throw std::logic_error(independent ? "result is not independent" : "result is not a clique");
	if (static_cast<int>(r.vertices.size()) != r.size) throw std::logic_error("result size differs from the table value");
}

int cmd_clique_or_mis(const Options& o, bool independent) {
	Loaded l = load(o);
	CliqueResult r;
	if (!l.graph.empty()) {
		auto p = network_of(l);
		const auto ties = load_overrides(o);
		r = independent ? max_independent_set(p, ties) : max_clique(p, ties);
		check_set(l.graph, r, independent);
	}
	if (o.oracle_check) {
		require_gate(l.graph, testkit::kCliqueGate, independent ? "independent set" : "clique");
		const int want = independent ? testkit::brute_max_independent(l.graph).second : testkit::brute_max_clique(l.graph).second;
		if (want != r.size) oracle_failure("size differs from the exhaustive optimum " + std::to_string(want));
	}
	const auto names = names_of(l.graph, r.vertices);
	if (o.json) emit(o, json{{"size", r.size}, {"vertices", names}}.dump() + "\n");
	else emit(o, "size: " + std::to_string(r.size) + "\nvertices: " + joined(names) + "\n");
	return 0;
}

int cmd_gen(const Options& o) {
	if (o.leaves < 1) throw std::invalid_argument("gen: --leaves must be at least 1");
	const auto net = testkit::random_pvr_network(o.leaves, o.density, o.seed);
	if (o.format == "network") emit(o, io::network_to_json(net) + "\n");
	else if (o.format == "network-dot") {
		std::ostringstream s;
		io::write_dot(s, net);
		emit(o, s.str());
	} else emit(o, graph_text(explain(net), o.format));
	return 0;
}

int cmd_check(const Options& o) {
	Loaded l = load(o);
	const Graph& g = l.graph;
	int failures = 0;
	std::string text;
	auto report = [&](const std::string& name, bool ok, const std::string& detail = {}) {
		text += std::string(ok ? "PASS " : "FAIL ") + name + (detail.empty() ? "" : " (" + detail + ")") + "\n";
		failures += !ok;
	};
	auto p = network_of(l);
	report("explain(network) = input", explain(p.network) == g);
	report("explain routes agree", explain_generic(p.network) == explain(p.network));
	const auto ties = load_overrides(o);
	const auto order = perfect_order(p, ties);
	const auto col = greedy_color(g, order);
	const auto cl = max_clique(p, ties);
	const auto is = max_independent_set(p, ties);
	auto is_clique = [&](const CliqueResult& r, bool independent) {
		try {
			check_set(g, r, independent);
			return true;
		} catch (const std::logic_error&) {
			return false;
		}
	};
	report("clique is complete", is_clique(cl, false));
	report("independent set is independent", is_clique(is, true));
	report("colors = clique size", col.num_colors == cl.size,
	       std::to_string(col.num_colors) + " vs " + std::to_string(cl.size));
	if (g.size() <= kObstructionGate) report("order is obstruction-free", is_perfect_order(g, order));
	else text += "SKIP order is obstruction-free (above gate)\n";
	if (g.size() <= testkit::kCliqueGate) {
		const int w = testkit::brute_max_clique(g).second;
		report("clique size = exhaustive optimum", w == cl.size, std::to_string(cl.size) + " vs " + std::to_string(w));
		const int a = testkit::brute_max_independent(g).second;
		report("independent set size = exhaustive optimum", a == is.size, std::to_string(is.size) + " vs " + std::to_string(a));
	} else {
		text += "SKIP exhaustive clique / independent set (above gate)\n";
	}
	if (g.size() <= testkit::kChromaticGate) {
		const int chi = testkit::brute_chromatic(g);
		report("colors = chromatic number", chi == col.num_colors, std::to_string(col.num_colors) + " vs " + std::to_string(chi));
	} else {
		text += "SKIP exhaustive chromatic number (above gate)\n";
	}
	if (g.size() <= 200) report("P4 placement conditions", testkit::p4_conditions_check(g, p));
	if (o.json) {
		emit(o, json{{"failures", failures}, {"report", text}}.dump(2) + "\n");
	} else {
		emit(o, text);
	}
	return failures == 0 ? 0 : 1;
}

int cmd_bench(const Options& o) {
	bench::Config cfg;
	cfg.min_exp = o.min_exp;
	cfg.max_exp = o.max_exp;
	cfg.decomposition_max_exp = o.decomposition_max_exp;
	cfg.seed = o.seed;
	if (cfg.min_exp < 1 || cfg.max_exp < cfg.min_exp || cfg.max_exp > 20) throw std::invalid_argument("bench: bad size range");
	const auto reports = bench::run(cfg);
	bool ok = true;
	json doc = json::array();
	std::ostringstream s;
	for (const auto& r : reports) {
		ok = ok && bench::within_limit(r);
		json rows = json::array();
		s << "family " << r.family.name << "\n";
		s << "n\tnetwork\t|V|+|E|\torder_ms\tcolor_ms\tclique_ms\tmis_ms\tdecomp_ms\n";
		for (const auto& row : r.rows) {
			char line[256];
			std::snprintf(line, sizeof line, "%d\t%zu\t%zu\t%.4f\t%.4f\t%.4f\t%.4f\t", row.n, row.network_size, row.graph_size,
			              row.order_ms, row.color_ms, row.clique_ms, row.mis_ms);
			s << line;
			if (row.decomposition_ms >= 0) s << row.decomposition_ms;
			else s << "-";
			s << "\n";
			rows.push_back({{"n", row.n}, {"network_size", row.network_size}, {"graph_size", row.graph_size}, {"order_ms", row.order_ms},
			                {"color_ms", row.color_ms}, {"clique_ms", row.clique_ms}, {"mis_ms", row.mis_ms},
			                {"warm_order_ms", row.warm_order_ms}, {"warm_color_ms", row.warm_color_ms},
			                {"warm_clique_ms", row.warm_clique_ms}, {"warm_mis_ms", row.warm_mis_ms},
			                {"decomposition_ms", row.decomposition_ms}});
		}
		s << "slope order " << r.slope_order << "\nslope color " << r.slope_color << "\nslope clique " << r.slope_clique
		  << "\nslope mis " << r.slope_mis << "\n";
		s << "warm-cache slopes (reported, not bounded): order " << r.warm_slope_order << " color " << r.warm_slope_color
		  << " clique " << r.warm_slope_clique << " mis " << r.warm_slope_mis << "\n";
		if (std::isnan(r.slope_decomposition)) s << "slope decomposition n/a (fewer than two sizes timed)\n";
		else s << "slope decomposition " << r.slope_decomposition << " (reported, not bounded)\n";
		s << (bench::within_limit(r) ? "within" : "exceeds") << " slope limit " << bench::kSlopeLimit << "\n";
		doc.push_back({{"family", r.family.name}, {"rows", rows}, {"slope_order", r.slope_order}, {"slope_color", r.slope_color},
		               {"slope_clique", r.slope_clique}, {"slope_mis", r.slope_mis}, {"warm_slope_order", r.warm_slope_order},
		               {"warm_slope_color", r.warm_slope_color}, {"warm_slope_clique", r.warm_slope_clique},
		               {"warm_slope_mis", r.warm_slope_mis}, {"slope_decomposition", r.slope_decomposition},
		               {"within_limit", bench::within_limit(r)}});
	}
	emit(o, o.json ? doc.dump(2) + "\n" : s.str());
	return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
	CLI::App app{"GaTEx graph recognition, perfect ordering, coloring, clique and independent set"};
	app.require_subcommand(1);
	Options o;

	auto add_io = [&](CLI::App* sub, bool graph_input) {
		if (graph_input) {
			sub->add_option("input", o.input, "Input file, '-' for stdin")->capture_default_str();
			sub->add_option("--input-format", o.input_format, "auto, edgelist, dimacs or network")
				->check(CLI::IsMember({"auto", "edgelist", "dimacs", "network"}))
				->capture_default_str();
			sub->add_option("--overrides", o.overrides, "Tie-break overrides (JSON sidecar)");
			sub->add_flag("--oracle-check", o.oracle_check, "Cross-check the answer against exhaustive oracles");
		}
		sub->add_option("--out", o.out, "Output file (default stdout)");
		sub->add_flag("--json", o.json, "Machine-readable output");
	};

	auto* recognize = app.add_subcommand("recognize", "Recognize a GaTEx graph and print its network");
	add_io(recognize, true);
	recognize->add_option("--format", o.format, "Network output: json or dot")->capture_default_str();
	auto* explain_cmd = app.add_subcommand("explain", "Graph explained by a network");
	add_io(explain_cmd, true);
	explain_cmd->add_option("--format", o.format, "edgelist, dimacs or dot")->capture_default_str();
	auto* mdt = app.add_subcommand("mdt", "Modular decomposition tree");
	add_io(mdt, true);
	auto* order = app.add_subcommand("order", "Perfect order");
	add_io(order, true);
	auto* color = app.add_subcommand("color", "Optimal coloring");
	add_io(color, true);
	auto* clique = app.add_subcommand("clique", "Maximum clique");
	add_io(clique, true);
	auto* mis = app.add_subcommand("mis", "Maximum independent set");
	add_io(mis, true);
	auto* gen = app.add_subcommand("gen", "Random pvr network or its graph");
	add_io(gen, false);
	gen->add_option("--leaves", o.leaves, "Number of leaves")->capture_default_str();
	gen->add_option("--density", o.density, "Cycle probability per eligible node")->capture_default_str();
	gen->add_option("--seed", o.seed, "Random seed")->capture_default_str();
	gen->add_option("--format", o.format, "network, network-dot, edgelist, dimacs or dot")->capture_default_str();
	auto* check = app.add_subcommand("check", "Full oracle agreement on one input");
	add_io(check, true);
	auto* bench_cmd = app.add_subcommand("bench", "Scaling benchmark on generated families");
	add_io(bench_cmd, false);
	bench_cmd->add_option("--seed", o.seed, "Random seed")->capture_default_str();
	bench_cmd->add_option("--min-exp", o.min_exp, "Smallest size 2^k")->capture_default_str();
	bench_cmd->add_option("--max-exp", o.max_exp, "Largest size 2^k")->capture_default_str();
	bench_cmd->add_option("--decomposition-max-exp", o.decomposition_max_exp, "Largest size timed for decomposition")
		->capture_default_str();

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		const int code = app.exit(e);
		return code == 0 ? 0 : 1;
	}

	try {
		if (*recognize) return cmd_recognize(o);
		if (*explain_cmd) return cmd_explain(o);
		if (*mdt) return cmd_mdt(o);
		if (*order) return cmd_order(o);
		if (*color) return cmd_color(o);
		if (*clique) return cmd_clique_or_mis(o, false);
		if (*mis) return cmd_clique_or_mis(o, true);
		if (*gen) return cmd_gen(o);
		if (*check) return cmd_check(o);
		if (*bench_cmd) return cmd_bench(o);
	} catch (const NotGatexError& e) {
		std::cerr << "not GaTEx: " << e.what() << "\n";
		std::cerr << "witness:";
		for (Vertex v : e.witness()) std::cerr << ' ' << (last_graph ? last_graph->name(v) : std::to_string(v));
		std::cerr << "\n";
		return 2;
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 1;
	}
	return 1;
}
