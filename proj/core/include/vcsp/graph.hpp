#ifndef VCSP_GRAPH_HPP
#define VCSP_GRAPH_HPP

#include "vcsp/closure.hpp"
#include "vcsp/ops.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace vcsp {

/// Node of the pair graph: an ordered pair of distinct labels.
using Node = std::pair<Label, Label>;

enum class EdgeKind { Hard, Soft };
std::string_view to_string(EdgeKind k);

/// f(a, a') + f(b, b') > f(a, b') + f(b, a') with (a, b') and (b, a') in dom f, for
/// p = (a, b) and q = (a', b'). Soft when (a, a') or (b, b') is also in dom f.
std::optional<EdgeKind> edge_witness(const CostFunction& f, Node p, Node q);

struct EdgeInfo {
    EdgeKind kind = EdgeKind::Hard;
    /// Closure member witnessing the edge.
    std::size_t member = 0;
    /// False: edge_witness(member, p, q) with p <= q. True: edge_witness(member, q, p).
    bool swapped = false;
};

struct PairGraph {
    int domain_size = 2;
    std::vector<Node> nodes;
    /// Keyed by (p, q) with p <= q; p == q is a self-loop.
    std::map<std::pair<Node, Node>, EdgeInfo> edges;
    /// Unordered pairs whose nodes have no self-loop.
    PairSet m_set;
    /// The closure was not saturated, so edges may be missing and m_set may be too large.
    bool truncated = false;

    const EdgeInfo* edge(Node p, Node q) const;
    bool has_self_loop(Node p) const { return edge(p, p) != nullptr; }
    /// Whether {a, b} has self-loops (lies outside m_set).
    bool in_mbar(Label a, Label b) const { return !contains_pair(m_set, a, b); }
};

/// Tests every member against every unordered node pair in both orientations. The
/// lowest-index witness is kept, with soft witnesses taking priority over hard ones.
PairGraph build_pair_graph(const BinaryClosure& closure);

struct SoftSelfLoop {
    Node node;
    EdgeInfo witness;
};

/// The lexicographically least node with a soft self-loop.
std::optional<SoftSelfLoop> find_soft_self_loop(const PairGraph& g);

/// Structural diagnostics of the pair graph:
///  (a) (a, b) and (b, a) share self-loop status;
///  (b) no edge joins a node with a self-loop to a node without one;
///  (c) no node with a self-loop has an incident soft edge.
/// (b) and (c) are only guaranteed when there is no soft self-loop; otherwise they are
/// reported as not applicable.
struct GraphCheck {
    bool symmetric = true;
    bool no_cross_edges = true;
    bool no_soft_on_loops = true;
    bool applicable = true;
    bool truncated = false;
    std::vector<std::string> violations;

    bool passed() const { return violations.empty(); }
    /// How to read a violation: an under-approximated closure, or an engine bug.
    std::string interpretation() const;
};

GraphCheck check_pair_graph(const PairGraph& g);

/// JSON with nodes, edges (kind, member, swapped) and m_set.
std::string graph_to_json(const PairGraph& g);
/// Graphviz rendering; soft edges are drawn solid, hard edges dashed.
std::string graph_to_dot(const PairGraph& g);

} // namespace vcsp

#endif // VCSP_GRAPH_HPP
