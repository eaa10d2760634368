#pragma once

#include "gatex/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gatex {

using NodeId = int;

enum class NodeKind { Root, Tree, Hybrid, Leaf };
// Zero/One for inner vertices; Odot marks leaves.
enum class Label { Zero, One, Odot };

std::string to_string(NodeKind kind);
std::string to_string(Label label);
NodeKind parse_kind(const std::string& s);
Label parse_label(const std::string& s);
inline Label flip(Label l) { return l == Label::Zero ? Label::One : l == Label::One ? Label::Zero : l; }

// Rooted DAG with vertex labels. Children are kept in insertion order, which
// is the default concatenation order of the ordering algorithm.
class GalledTree {
public:
	struct Node {
		NodeKind kind = NodeKind::Tree;
		Label label = Label::Zero;
		std::string name;  // vertex name for leaves, display name otherwise; may be empty
		std::vector<NodeId> children;
		std::vector<NodeId> parents;
	};

	NodeId add_node(NodeKind kind, Label label, std::string name = {});
	void add_edge(NodeId parent, NodeId child);

	std::size_t size() const { return nodes_.size(); }
	std::size_t edge_count() const;
	const Node& node(NodeId id) const { return nodes_[static_cast<std::size_t>(id)]; }
	NodeKind kind(NodeId id) const { return node(id).kind; }
	Label label(NodeId id) const { return node(id).label; }
	void set_label(NodeId id, Label l) { nodes_[static_cast<std::size_t>(id)].label = l; }
	void set_kind(NodeId id, NodeKind k) { nodes_[static_cast<std::size_t>(id)].kind = k; }
	void set_name(NodeId id, std::string name) { nodes_[static_cast<std::size_t>(id)].name = std::move(name); }
	const std::vector<NodeId>& children(NodeId id) const { return node(id).children; }
	const std::vector<NodeId>& parents(NodeId id) const { return node(id).parents; }
	bool is_leaf(NodeId id) const { return kind(id) == NodeKind::Leaf; }

	// Unique node without parents; -1 if there is none or more than one.
	NodeId root() const;
	// Leaves by ascending node id; graph vertex i of explain() is leaves()[i].
	std::vector<NodeId> leaves() const;
	// Leaf name, or the decimal vertex index when unnamed.
	std::string leaf_name(NodeId leaf) const;

	friend bool operator==(const GalledTree& a, const GalledTree& b);

private:
	std::vector<Node> nodes_;
};

struct Violation {
	std::string axiom;  // "N0".."N4", "DAG", "label", "pvr", "cycle"
	NodeId node = -1;
	std::string detail;
};

std::string to_string(const Violation& v);

// Empty result means valid. The pvr-shaped checks run only when requested.
std::vector<Violation> validate(const GalledTree& n, bool pvr_shaped = false);

struct CycleDescriptor {
	NodeId rho = -1;
	NodeId eta = -1;
	std::vector<NodeId> side1;  // rho ... eta inclusive
	std::vector<NodeId> side2;

	// Cycle vertices other than rho and eta, side1 top-down then side2.
	std::vector<NodeId> internal() const;
	bool contains(NodeId x) const;
	// 1 or 2 for internal vertices, 0 for rho/eta and non-members.
	int side_of(NodeId x) const;
};

// One descriptor per non-trivial biconnected component, ordered by rho id.
// Throws std::invalid_argument if the network does not validate.
std::vector<CycleDescriptor> cycles(const GalledTree& n);

// Index into cycles(n) for each node that lies on a cycle other than as its
// root; -1 otherwise.
std::vector<int> cycle_membership(const GalledTree& n, const std::vector<CycleDescriptor>& cyc);

// Child of a cycle vertex w != rho that is not on the cycle (for eta: its only child).
NodeId off_cycle_child(const GalledTree& n, const CycleDescriptor& c, NodeId w);
// Child of w on the cycle; -1 for eta.
NodeId on_cycle_child(const GalledTree& n, const CycleDescriptor& c, NodeId w);

// Unique lowest common ancestor of a nonempty set of leaves.
NodeId lca(const GalledTree& n, const std::vector<NodeId>& leaves);

// Graph on the leaves: {x,y} is an edge iff t(lca(x,y)) = 1.
Graph explain(const GalledTree& n);
// Same contract as explain(), always through per-node leaf bitsets.
Graph explain_generic(const GalledTree& n);

struct Classification {
	bool elementary = false;
	bool strong = false;
	bool quasi_discriminating = false;
};

Classification classify(const GalledTree& n);

// Leaf sets L(N(v)) as sorted vertex indices, for every node.
std::vector<VertexSet> leaf_sets(const GalledTree& n);

}  // namespace gatex
