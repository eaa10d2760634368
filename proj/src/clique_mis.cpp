#include "gatex/clique_mis.hpp"

#include <algorithm>
#include <array>
#include <span>
#include <stdexcept>

namespace gatex {

namespace {

std::size_t at(NodeId x) { return static_cast<std::size_t>(x); }

// The override for `decider` if present (it must be a maximizer), else the
// maximizer with the smallest node id.
NodeId pick_argmax(NodeId decider, std::span<const NodeId> cand, std::span<const int> value, const TieBreaks& ties) {
	const int best = *std::max_element(value.begin(), value.end());
	if (!ties.argmax_pick.empty()) {
		const auto it = ties.argmax_pick.find(decider);
		if (it != ties.argmax_pick.end()) {
			for (std::size_t i = 0; i < cand.size(); ++i)
				if (cand[i] == it->second && value[i] == best) return cand[i];
			throw std::invalid_argument("argmax_pick for node " + std::to_string(decider) + " names node " +
			                            std::to_string(it->second) + ", which is not a maximizer");
		}
	}
	NodeId chosen = -1;
	for (std::size_t i = 0; i < cand.size(); ++i)
		if (value[i] == best && (chosen == -1 || cand[i] < chosen)) chosen = cand[i];
	return chosen;
}

void mark(OmegaTables& t, NodeId x) { t.active[at(x)] = 1; }

// Calls f on the side vertices strictly between rho and eta, bottom-up.
template <class F>
void each_inner_bottom_up(const std::vector<NodeId>& side, F&& f) {
	for (std::size_t i = side.size() - 1; i-- > 1;) f(side[i]);
}

// Network accessors used by the passes below: label(x), children(x), and the
// on-/off-cycle children of a cycle vertex.
struct TreeAccess {
	const GalledTree& net;
	const CycleDescriptor* cycle;
	Label label(NodeId x) const { return net.label(x); }
	const std::vector<NodeId>& children(NodeId x) const { return net.children(x); }
	NodeId on(NodeId x) const { return on_cycle_child(net, *cycle, x); }
	NodeId off(NodeId x) const { return off_cycle_child(net, *cycle, x); }
};

struct ViewAccess {
	const NetworkView& view;
	bool flipped;  // read labels of the complement labeling
	Label label(NodeId x) const { return flipped ? flip(view.label(x)) : view.label(x); }
	std::span<const NodeId> children(NodeId x) const { return view.children(x); }
	NodeId on(NodeId x) const { return view.on(x); }
	NodeId off(NodeId x) const { return view.off(x); }
};

template <class Net>
void activate_impl(const Net& net, const CycleDescriptor& c, OmegaTables& t, int alpha, int beta, Label root_label, int side,
                   const TieBreaks& ties) {
	if (root_label == Label::Zero) {
		if (side != 1 && side != 2) throw std::invalid_argument("activate: side must be 1 or 2");
		const auto& path = side == 1 ? c.side1 : c.side2;
		// Postorder along the side: eta first, then upwards.
		for (auto it = path.rbegin(); it != path.rend() - 1; ++it) {
			const NodeId w = *it;
			if (net.label(w) == Label::One || w == c.eta) {
				// eta has a single child, so either label marks it.
				for (NodeId k : net.children(w)) mark(t, k);
				continue;
			}
			const std::array<NodeId, 2> cand{net.on(w), net.off(w)};
			const std::array<int, 2> value{t.omega[at(cand[0])], t.omega[at(cand[1])]};
			mark(t, pick_argmax(w, cand, value, ties));
		}
		return;
	}

	for (NodeId k : net.children(c.rho)) mark(t, k);
	if (alpha <= beta) {
		const NodeId w1 = c.side1[c.side1.size() - 2];
		const NodeId w2 = c.side2[c.side2.size() - 2];
		for (NodeId wi : {w1, w2})
			if (wi != c.rho) mark(t, net.off(wi));
		for (const auto* path : {&c.side1, &c.side2}) {
			each_inner_bottom_up(*path, [&](NodeId w) {
				if (w == w1 || w == w2) return;
				const NodeId u1 = net.on(w);
				const NodeId u2 = net.off(w);
				if (net.label(w) == Label::One) {
					mark(t, u1);
					mark(t, u2);
					return;
				}
				const std::array<NodeId, 2> cand{u1, u2};
				const std::array<int, 2> value{t.omega_not_eta[at(u1)], t.omega[at(u2)]};
				mark(t, pick_argmax(w, cand, value, ties));
			});
		}
		return;
	}
	mark(t, c.eta);
	mark(t, net.off(c.eta));
	for (const auto* path : {&c.side1, &c.side2}) {
		each_inner_bottom_up(*path, [&](NodeId w) {
			mark(t, w);
			if (net.label(w) == Label::One) mark(t, net.off(w));
		});
	}
}

OmegaTables run_tables(const ViewAccess& net, const std::vector<CycleDescriptor>& cyc, const TieBreaks& ties) {
	const NetworkView& view = net.view;
	OmegaTables t;
	t.omega.assign(view.size(), 0);
	t.omega_not_eta.assign(view.size(), -1);
	t.active.assign(view.size(), 0);
	t.alpha.assign(cyc.size(), -1);
	t.beta.assign(cyc.size(), -1);
	if (view.size() == 0) return t;

	std::vector<int> value;
	for (NodeId v : view.postorder()) {
		if (view.is_leaf(v)) {
			t.omega[at(v)] = 1;
			continue;
		}
		const int ci = view.root_cycle(v);
		if (ci == -1) {
			const auto kids = view.children(v);
			if (net.label(v) == Label::One) {
				int sum = 0;
				for (NodeId k : kids) {
					sum += t.omega[at(k)];
					mark(t, k);
				}
				t.omega[at(v)] = sum;
			} else {
				value.clear();
				for (NodeId k : kids) value.push_back(t.omega[at(k)]);
				t.omega[at(v)] = *std::max_element(value.begin(), value.end());
				mark(t, pick_argmax(v, kids, value, ties));
			}
			continue;
		}

		const auto& c = cyc[static_cast<std::size_t>(ci)];
		t.omega[at(c.eta)] = t.omega[at(view.off(c.eta))];
		t.omega_not_eta[at(c.eta)] = 0;
		for (const auto* path : {&c.side1, &c.side2}) {
			each_inner_bottom_up(*path, [&](NodeId w) {
				const NodeId u1 = view.on(w);
				const NodeId u2 = view.off(w);
				if (net.label(w) == Label::Zero) {
					t.omega[at(w)] = std::max(t.omega[at(u1)], t.omega[at(u2)]);
					t.omega_not_eta[at(w)] = std::max(t.omega_not_eta[at(u1)], t.omega[at(u2)]);
				} else {
					t.omega[at(w)] = t.omega[at(u1)] + t.omega[at(u2)];
					t.omega_not_eta[at(w)] = t.omega_not_eta[at(u1)] + t.omega[at(u2)];
				}
			});
		}
		const NodeId a = c.side1[1];
		const NodeId b = c.side2[1];
		if (net.label(v) == Label::Zero) {
			t.omega[at(v)] = std::max(t.omega[at(a)], t.omega[at(b)]);
			const std::array<NodeId, 2> cand{a, b};
			const std::array<int, 2> val{t.omega[at(a)], t.omega[at(b)]};
			const NodeId w = pick_argmax(v, cand, val, ties);
			mark(t, w);
			activate_impl(net, c, t, 0, 0, Label::Zero, w == a ? 1 : 2, ties);
		} else {
			const int alpha = t.omega[at(a)] + t.omega[at(b)] - t.omega[at(c.eta)];
			const int beta = t.omega_not_eta[at(a)] + t.omega_not_eta[at(b)];
			t.alpha[static_cast<std::size_t>(ci)] = alpha;
			t.beta[static_cast<std::size_t>(ci)] = beta;
			t.omega[at(v)] = std::max(alpha, beta);
			activate_impl(net, c, t, alpha, beta, Label::One, 0, ties);
		}
	}
	return t;
}

CliqueResult run_clique(const ViewAccess& net, const std::vector<CycleDescriptor>& cyc, const TieBreaks& ties) {
	const auto tables = run_tables(net, cyc, ties);
	CliqueResult r;
	if (net.view.size() == 0) return r;
	r.vertices = extract_clique(net.view, tables);
	r.size = tables.omega[at(net.view.root())];
	return r;
}

}  // namespace

void activate(const GalledTree& net, const CycleDescriptor& c, OmegaTables& tables, int alpha, int beta, Label root_label,
              int side, const TieBreaks& ties) {
	activate_impl(TreeAccess{net, &c}, c, tables, alpha, beta, root_label, side, ties);
}

OmegaTables omega_tables(const NetworkView& view, const std::vector<CycleDescriptor>& cyc, const TieBreaks& ties) {
	return run_tables(ViewAccess{view, false}, cyc, ties);
}

OmegaTables omega_tables(const GalledTree& net, const std::vector<CycleDescriptor>& cyc, const TieBreaks& ties) {
	if (net.size() == 0) return run_tables(ViewAccess{NetworkView{}, false}, cyc, ties);
	return omega_tables(NetworkView(net, cyc), cyc, ties);
}

OmegaTables omega_tables(const PvrNetwork& p, const TieBreaks& ties) { return omega_tables(p.view, p.cycles, ties); }

VertexSet extract_clique(const NetworkView& view, const OmegaTables& tables) {
	VertexSet out;
	if (view.size() == 0) return out;
	const NodeId root = view.root();
	std::vector<char> seen(view.size(), 0);
	std::vector<NodeId> stack{root};
	seen[at(root)] = 1;
	while (!stack.empty()) {
		const NodeId x = stack.back();
		stack.pop_back();
		if (view.is_leaf(x)) {
			out.push_back(view.vertex(x));
			continue;
		}
		for (NodeId k : view.children(x))
			if (tables.active[at(k)] && !seen[at(k)]) {
				seen[at(k)] = 1;
				stack.push_back(k);
			}
	}
	std::sort(out.begin(), out.end());
	return out;
}

VertexSet extract_clique(const GalledTree& net, const OmegaTables& tables) {
	if (net.size() == 0) return {};
	return extract_clique(NetworkView(net, cycles(net)), tables);
}

CliqueResult max_clique(const PvrNetwork& p, const TieBreaks& ties) { return run_clique(ViewAccess{p.view, false}, p.cycles, ties); }

CliqueResult max_independent_set(const PvrNetwork& p, const TieBreaks& ties) {
	return run_clique(ViewAccess{p.view, true}, p.cycles, ties);
}

namespace {

void check_result(const Graph& g, const CliqueResult& r, bool independent, const char* what) {
	if (static_cast<int>(r.vertices.size()) != r.size)
		throw std::logic_error(std::string(what) + ": extracted set has size " + std::to_string(r.vertices.size()) +
		                       ", table value is " + std::to_string(r.size));
	for (std::size_t i = 0; i < r.vertices.size(); ++i)
		for (std::size_t j = i + 1; j < r.vertices.size(); ++j)
			if (g.adjacent(r.vertices[i], r.vertices[j]) == independent)
				throw std::logic_error(std::string(what) + ": extracted set is not " + (independent ? "independent" : "a clique"));
}

}  // namespace

CliqueResult max_clique(const Graph& g) {
	if (g.empty()) return {};
	auto r = max_clique(build_pvr(g));
	check_result(g, r, false, "max_clique");
	return r;
}

CliqueResult max_independent_set(const Graph& g) {
	if (g.empty()) return {};
	auto r = max_independent_set(build_pvr(g));
	check_result(g, r, true, "max_independent_set");
	return r;
}

}  // namespace gatex
