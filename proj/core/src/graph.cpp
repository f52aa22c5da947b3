#include "vcsp/graph.hpp"

#include "json_util.hpp"

#include "vcsp/error.hpp"

#include <sstream>

namespace vcsp {

std::string_view to_string(EdgeKind k) { return k == EdgeKind::Soft ? "soft" : "hard"; }

std::optional<EdgeKind> edge_witness(const CostFunction& f, Node p, Node q) {
    if (f.arity() != 2) throw StructuralError("edge_witness needs a binary function");
    const auto [a, b] = p;
    const auto [a2, b2] = q;
    const Cost& cross1 = f.at(a, b2);
    const Cost& cross2 = f.at(b, a2);
    if (cross1.is_infinite() || cross2.is_infinite()) return std::nullopt;
    const Cost& diag1 = f.at(a, a2);
    const Cost& diag2 = f.at(b, b2);
    if (!(diag1 + diag2 > cross1 + cross2)) return std::nullopt;
    return (diag1.is_finite() || diag2.is_finite()) ? EdgeKind::Soft : EdgeKind::Hard;
}

const EdgeInfo* PairGraph::edge(Node p, Node q) const {
    if (q < p) std::swap(p, q);
    auto it = edges.find({p, q});
    return it == edges.end() ? nullptr : &it->second;
}

PairGraph build_pair_graph(const BinaryClosure& closure) {
    const int d = closure.domain_size;
    if (d < 2) throw StructuralError("pair graph needs |D| >= 2");
    PairGraph g;
    g.domain_size = d;
    g.truncated = !closure.saturated;
    for (Label a = 0; a < d; ++a)
        for (Label b = 0; b < d; ++b)
            if (a != b) g.nodes.emplace_back(a, b);

    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        for (std::size_t j = i; j < g.nodes.size(); ++j) {
            const Node p = g.nodes[i], q = g.nodes[j];
            std::optional<EdgeInfo> best;
            for (std::size_t m = 0; m < closure.members.size() && !(best && best->kind == EdgeKind::Soft); ++m) {
                const CostFunction& f = closure.members[m].table;
                for (bool swapped : {false, true}) {
                    auto k = swapped ? edge_witness(f, q, p) : edge_witness(f, p, q);
                    if (!k) continue;
                    if (!best || (*k == EdgeKind::Soft && best->kind == EdgeKind::Hard)) best = EdgeInfo{*k, m, swapped};
                    if (best->kind == EdgeKind::Soft) break;
                }
            }
            if (best) g.edges.emplace(std::make_pair(p, q), *best);
        }

    for (Label a = 0; a < d; ++a)
        for (Label b = a + 1; b < d; ++b)
            if (!g.has_self_loop({a, b}) && !g.has_self_loop({b, a})) g.m_set.insert({a, b});
    return g;
}

std::optional<SoftSelfLoop> find_soft_self_loop(const PairGraph& g) {
    for (const Node& p : g.nodes)
        if (const EdgeInfo* e = g.edge(p, p); e && e->kind == EdgeKind::Soft) return SoftSelfLoop{p, *e};
    return std::nullopt;
}

namespace {
std::string node_str(Node p) { return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")"; }
} // namespace

std::string GraphCheck::interpretation() const {
    if (passed()) return "ok";
    return truncated ? "the closure is truncated: the graph may be missing self-loops"
                     : "the closure is saturated: a violation indicates an engine defect";
}

GraphCheck check_pair_graph(const PairGraph& g) {
    GraphCheck r;
    r.truncated = g.truncated;
    for (const Node& p : g.nodes)
        if (g.has_self_loop(p) != g.has_self_loop({p.second, p.first})) {
            r.symmetric = false;
            r.violations.push_back("self-loop status differs between " + node_str(p) + " and " +
                                   node_str({p.second, p.first}));
        }
    if (find_soft_self_loop(g)) {
        r.applicable = false;
        return r;
    }
    for (const auto& [key, e] : g.edges) {
        const auto& [p, q] = key;
        const bool lp = g.has_self_loop(p), lq = g.has_self_loop(q);
        const std::string witness = " (member " + std::to_string(e.member) + ")";
        if (lp != lq) {
            r.no_cross_edges = false;
            r.violations.push_back("edge " + node_str(p) + "-" + node_str(q) + " joins a looped and a loop-free node" +
                                   witness);
        }
        if (e.kind == EdgeKind::Soft && (lp || lq)) {
            r.no_soft_on_loops = false;
            r.violations.push_back("soft edge " + node_str(p) + "-" + node_str(q) + " touches a looped node" + witness);
        }
    }
    return r;
}

std::string graph_to_json(const PairGraph& g) {
    using detail::json;
    json nodes = json::array();
    for (const Node& p : g.nodes) nodes.push_back(json::array({p.first, p.second}));
    json edges = json::array();
    for (const auto& [key, e] : g.edges)
        edges.push_back(json{{"from", json::array({key.first.first, key.first.second})},
                             {"to", json::array({key.second.first, key.second.second})},
                             {"kind", std::string(to_string(e.kind))},
                             {"member", e.member},
                             {"swapped", e.swapped}});
    json m = json::array();
    for (const auto& [a, b] : g.m_set) m.push_back(json::array({a, b}));
    json out{{"domain_size", g.domain_size}, {"nodes", std::move(nodes)}, {"edges", std::move(edges)},
             {"m_set", std::move(m)}, {"truncated", g.truncated}};
    return out.dump(2) + "\n";
}

std::string graph_to_dot(const PairGraph& g) {
    std::ostringstream os;
    os << "graph pairs {\n";
    for (const Node& p : g.nodes)
        os << "  \"" << p.first << "," << p.second << "\"" << (g.has_self_loop(p) ? " [shape=doublecircle]" : "")
           << ";\n";
    for (const auto& [key, e] : g.edges)
        os << "  \"" << key.first.first << "," << key.first.second << "\" -- \"" << key.second.first << ","
           << key.second.second << "\"" << (e.kind == EdgeKind::Soft ? "" : " [style=dashed]") << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace vcsp
