#include "gatex/io.hpp"

#include <json.hpp>

#include <charconv>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace gatex::io {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& what, int line) {
	throw std::invalid_argument(what + (line > 0 ? " (line " + std::to_string(line) + ")" : ""));
}

bool parse_int(const std::string& s, long long& v) {
	if (s.empty()) return false;
	auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
	return ec == std::errc{} && ptr == s.data() + s.size();
}

// Non-empty, non-comment lines split into whitespace tokens.
std::vector<std::pair<int, std::vector<std::string>>> token_lines(std::istream& in, char comment) {
	std::vector<std::pair<int, std::vector<std::string>>> out;
	std::string line;
	int no = 0;
	while (std::getline(in, line)) {
		++no;
		std::istringstream ss(line);
		std::vector<std::string> tok;
		for (std::string t; ss >> t;) tok.push_back(t);
		if (tok.empty() || tok.front()[0] == comment || (comment == 'c' && tok.front() == "c")) continue;
		out.emplace_back(no, std::move(tok));
	}
	return out;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
	auto lines = token_lines(in, '#');
	if (lines.empty()) fail("edge list: missing header", 0);
	auto& [hline, header] = lines.front();
	long long n = 0, m = 0;
	if (header.size() != 2 || !parse_int(header[0], n) || !parse_int(header[1], m) || n < 0 || m < 0)
		fail("edge list: header must be \"n m\"", hline);
	if (static_cast<long long>(lines.size()) - 1 != m)
		fail("edge list: header announces " + std::to_string(m) + " edges, found " + std::to_string(lines.size() - 1), hline);
	bool id_mode = true;
	for (std::size_t i = 1; i < lines.size(); ++i) {
		if (lines[i].second.size() != 2) fail("edge list: expected \"u v\"", lines[i].first);
		for (const auto& t : lines[i].second) {
			long long v = 0;
			if (!parse_int(t, v) || v < 0 || v >= n) id_mode = false;
		}
	}
	std::vector<Edge> edges;
	if (id_mode) {
		for (std::size_t i = 1; i < lines.size(); ++i) {
			long long u = 0, v = 0;
			parse_int(lines[i].second[0], u);
			parse_int(lines[i].second[1], v);
			edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
		}
		try {
			return Graph(static_cast<int>(n), edges);
		} catch (const std::invalid_argument& e) {
			fail(std::string("edge list: ") + e.what(), 0);
		}
	}
	std::map<std::string, int> id;
	std::vector<std::string> names;
	auto lookup = [&](const std::string& s, int line) {
		auto [it, fresh] = id.emplace(s, static_cast<int>(names.size()));
		if (fresh) {
			if (static_cast<long long>(names.size()) >= n) fail("edge list: more distinct vertex names than n", line);
			names.push_back(s);
		}
		return it->second;
	};
	for (std::size_t i = 1; i < lines.size(); ++i) {
		const int u = lookup(lines[i].second[0], lines[i].first);
		const int v = lookup(lines[i].second[1], lines[i].first);
		edges.emplace_back(u, v);
	}
	for (auto k = static_cast<long long>(names.size()); k < n; ++k) names.push_back(std::to_string(k));
	try {
		return Graph(static_cast<int>(n), edges, names);
	} catch (const std::invalid_argument& e) {
		fail(std::string("edge list: ") + e.what(), 0);
	}
}

void write_edge_list(std::ostream& out, const Graph& g) {
	const auto edges = g.edges();
	out << g.size() << ' ' << edges.size() << '\n';
	for (auto [u, v] : edges) {
		if (g.has_names()) out << g.name(u) << ' ' << g.name(v) << '\n';
		else out << u << ' ' << v << '\n';
	}
}

Graph read_dimacs(std::istream& in) {
	auto lines = token_lines(in, 'c');
	long long n = -1, m = -1;
	std::vector<Edge> edges;
	for (auto& [no, tok] : lines) {
		if (tok[0] == "p") {
			if (n != -1) fail("dimacs: second problem line", no);
			if (tok.size() != 4 || (tok[1] != "edge" && tok[1] != "col") || !parse_int(tok[2], n) || !parse_int(tok[3], m) || n < 0 ||
			    m < 0)
				fail("dimacs: problem line must be \"p edge n m\"", no);
		} else if (tok[0] == "e") {
			if (n == -1) fail("dimacs: edge before problem line", no);
			long long u = 0, v = 0;
			if (tok.size() != 3 || !parse_int(tok[1], u) || !parse_int(tok[2], v) || u < 1 || v < 1 || u > n || v > n)
				fail("dimacs: edge line must be \"e u v\" with 1-based ids", no);
			edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
		} else {
			fail("dimacs: unknown line type \"" + tok[0] + "\"", no);
		}
	}
	if (n == -1) fail("dimacs: missing problem line", 0);
	if (static_cast<long long>(edges.size()) != m)
		fail("dimacs: problem line announces " + std::to_string(m) + " edges, found " + std::to_string(edges.size()), 0);
	try {
		return Graph(static_cast<int>(n), edges);
	} catch (const std::invalid_argument& e) {
		fail(std::string("dimacs: ") + e.what(), 0);
	}
}

void write_dimacs(std::ostream& out, const Graph& g) {
	const auto edges = g.edges();
	out << "p edge " << g.size() << ' ' << edges.size() << '\n';
	for (auto [u, v] : edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

Graph read_graph(std::istream& in, const std::string& format) {
	if (format == "edgelist") return read_edge_list(in);
	if (format == "dimacs") return read_dimacs(in);
	if (format != "auto") throw std::invalid_argument("unknown graph format: " + format);
	std::stringstream buf;
	buf << in.rdbuf();
	const std::string text = buf.str();
	std::istringstream probe(text);
	bool dimacs = false;
	for (std::string line; std::getline(probe, line);) {
		std::istringstream ss(line);
		std::string first;
		if (!(ss >> first)) continue;
		if (first == "p") dimacs = true;
		if (first != "c") break;
	}
	std::istringstream again(text);
	return dimacs ? read_dimacs(again) : read_edge_list(again);
}

namespace {

int as_id(const json& v, std::size_t count, const char* what) {
	if (!v.is_number_integer()) throw std::invalid_argument(std::string("network json: ") + what + " must be an integer");
	const auto x = v.get<long long>();
	if (x < 0 || x >= static_cast<long long>(count))
		throw std::invalid_argument(std::string("network json: ") + what + " " + std::to_string(x) + " is not a node id");
	return static_cast<int>(x);
}

GalledTree from_json(const json& doc) {
	if (!doc.is_object()) throw std::invalid_argument("network json: top level must be an object");
	for (auto& [key, _] : doc.items())
		if (key != "nodes" && key != "edges") throw std::invalid_argument("network json: unknown field \"" + key + "\"");
	if (!doc.contains("nodes") || !doc["nodes"].is_array()) throw std::invalid_argument("network json: \"nodes\" array required");
	if (!doc.contains("edges") || !doc["edges"].is_array()) throw std::invalid_argument("network json: \"edges\" array required");
	const auto& nodes = doc["nodes"];
	std::vector<const json*> by_id(nodes.size(), nullptr);
	for (const auto& nd : nodes) {
		if (!nd.is_object()) throw std::invalid_argument("network json: node entries must be objects");
		for (auto& [key, _] : nd.items())
			if (key != "id" && key != "kind" && key != "label" && key != "name")
				throw std::invalid_argument("network json: unknown node field \"" + key + "\"");
		if (!nd.contains("id") || !nd.contains("kind") || !nd.contains("label"))
			throw std::invalid_argument("network json: node needs id, kind and label");
		const int id = as_id(nd["id"], nodes.size(), "node id");
		if (by_id[static_cast<std::size_t>(id)]) throw std::invalid_argument("network json: duplicate node id " + std::to_string(id));
		by_id[static_cast<std::size_t>(id)] = &nd;
	}
	GalledTree net;
	for (const json* nd : by_id) {
		if (!(*nd)["kind"].is_string() || !(*nd)["label"].is_string())
			throw std::invalid_argument("network json: kind and label must be strings");
		std::string name;
		if (nd->contains("name")) {
			if (!(*nd)["name"].is_string()) throw std::invalid_argument("network json: name must be a string");
			name = (*nd)["name"].get<std::string>();
		}
		net.add_node(parse_kind((*nd)["kind"].get<std::string>()), parse_label((*nd)["label"].get<std::string>()), name);
	}
	for (const auto& e : doc["edges"]) {
		if (!e.is_array() || e.size() != 2) throw std::invalid_argument("network json: edges must be [parent, child] pairs");
		net.add_edge(as_id(e[0], nodes.size(), "edge endpoint"), as_id(e[1], nodes.size(), "edge endpoint"));
	}
	return net;
}

}  // namespace

GalledTree parse_network_json(const std::string& text) {
	json doc;
	try {
		doc = json::parse(text);
	} catch (const json::parse_error& e) {
		throw std::invalid_argument(std::string("network json: ") + e.what());
	}
	return from_json(doc);
}

GalledTree read_network_json(std::istream& in) {
	std::stringstream buf;
	buf << in.rdbuf();
	return parse_network_json(buf.str());
}

std::string network_to_json(const GalledTree& n, int indent) {
	json nodes = json::array();
	json edges = json::array();
	for (std::size_t x = 0; x < n.size(); ++x) {
		const auto id = static_cast<NodeId>(x);
		json nd = {{"id", id}, {"kind", to_string(n.kind(id))}, {"label", to_string(n.label(id))}};
		if (!n.node(id).name.empty()) nd["name"] = n.node(id).name;
		nodes.push_back(std::move(nd));
	}
	for (std::size_t x = 0; x < n.size(); ++x)
		for (NodeId c : n.children(static_cast<NodeId>(x))) edges.push_back({static_cast<int>(x), c});
	json doc = {{"nodes", nodes}, {"edges", edges}};
	return doc.dump(indent);
}

TieBreaks read_overrides(std::istream& in) {
	json doc;
	try {
		doc = json::parse(in);
	} catch (const json::parse_error& e) {
		throw std::invalid_argument(std::string("overrides: ") + e.what());
	}
	auto id_of = [](const std::string& key) {
		long long v = 0;
		if (!parse_int(key, v) || v < 0) throw std::invalid_argument("overrides: key \"" + key + "\" is not a node id");
		return static_cast<NodeId>(v);
	};
	TieBreaks out;
	if (!doc.is_object() || !doc.contains("tie_breaks")) return out;
	const auto& tb = doc["tie_breaks"];
	if (!tb.is_object()) throw std::invalid_argument("overrides: tie_breaks must be an object");
	for (auto& [key, val] : tb.items()) {
		if (key == "concat_order") {
			for (auto& [node, list] : val.items()) {
				if (!list.is_array()) throw std::invalid_argument("overrides: concat_order entries must be arrays");
				auto& dst = out.concat_order[id_of(node)];
				for (const auto& x : list) {
					if (!x.is_number_integer()) throw std::invalid_argument("overrides: concat_order entries must be node ids");
					dst.push_back(x.get<NodeId>());
				}
			}
		} else if (key == "argmax_pick") {
			for (auto& [node, pick] : val.items()) {
				if (!pick.is_number_integer()) throw std::invalid_argument("overrides: argmax_pick values must be node ids");
				out.argmax_pick[id_of(node)] = pick.get<NodeId>();
			}
		} else {
			throw std::invalid_argument("overrides: unknown tie_breaks field \"" + key + "\"");
		}
	}
	return out;
}

namespace {

std::string quoted(const std::string& s) {
	std::string out = "\"";
	for (char c : s) {
		if (c == '"' || c == '\\') out += '\\';
		out += c;
	}
	return out + '"';
}

}  // namespace

void write_dot(std::ostream& out, const Graph& g) {
	out << "graph G {\n";
	for (int v = 0; v < g.size(); ++v) out << "  " << v << " [label=" << quoted(g.name(v)) << "];\n";
	for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
	out << "}\n";
}

void write_dot(std::ostream& out, const GalledTree& n) {
	out << "digraph N {\n";
	for (std::size_t x = 0; x < n.size(); ++x) {
		const auto id = static_cast<NodeId>(x);
		const auto& nd = n.node(id);
		std::string text = nd.kind == NodeKind::Leaf ? n.leaf_name(id) : to_string(nd.label);
		if (nd.kind != NodeKind::Leaf && !nd.name.empty()) text = nd.name + ":" + text;
		out << "  " << x << " [label=" << quoted(text);
		if (nd.kind == NodeKind::Hybrid) out << ", shape=doublecircle";
		else if (nd.kind == NodeKind::Leaf) out << ", shape=box";
		else out << ", shape=circle";
		out << "];\n";
	}
	for (std::size_t x = 0; x < n.size(); ++x)
		for (NodeId c : n.children(static_cast<NodeId>(x))) out << "  " << x << " -> " << c << ";\n";
	out << "}\n";
}

}  // namespace gatex::io
