#include "fixtures.hpp"

#include "vcsp/graph.hpp"

#include <gtest/gtest.h>

using namespace vcsp;
using namespace vcsp::testing;

namespace {

// Edge condition written out from the definition.
std::optional<EdgeKind> edge_oracle(const CostFunction& f, Node p, Node q) {
    const auto [a, b] = p;
    const auto [a2, b2] = q;
    const Cost cross = f.at(a, b2) + f.at(b, a2);
    if (cross.is_infinite()) return std::nullopt;
    if (!(f.at(a, a2) + f.at(b, b2) > cross)) return std::nullopt;
    return (f.at(a, a2).is_finite() || f.at(b, b2).is_finite()) ? EdgeKind::Soft : EdgeKind::Hard;
}

BinaryClosure single_member(const CostFunction& f) {
    BinaryClosure c;
    c.domain_size = f.domain_size();
    c.members.push_back(ClosureMember{f, {}, {}, {}, false, false, 0, 2});
    c.saturated = true;
    return c;
}

} // namespace

TEST(EdgeWitness, Examples) {
    EXPECT_EQ(edge_witness(cut_fn(), {0, 1}, {0, 1}), EdgeKind::Soft);
    EXPECT_EQ(edge_witness(submodular_fn(), {0, 1}, {0, 1}), std::nullopt);
    EXPECT_EQ(edge_witness(submodular_fn(), {0, 1}, {1, 0}), EdgeKind::Soft);
    EXPECT_EQ(edge_witness(disequality_fn(), {0, 1}, {0, 1}), EdgeKind::Hard);
    // Equality has no finite cross entries on (0,1), (0,1).
    EXPECT_EQ(edge_witness(equality_fn(), {0, 1}, {0, 1}), std::nullopt);
    EXPECT_EQ(edge_witness(equality_fn(), {0, 1}, {1, 0}), EdgeKind::Hard);
}

TEST(EdgeWitness, MatchesDefinition) {
    Gen g(41);
    for (int i = 0; i < 300; ++i) {
        const int d = g.range(2, 4);
        CostFunction f = g.function(d, 2, 35, 4);
        for (Label a = 0; a < d; ++a)
            for (Label b = 0; b < d; ++b)
                for (Label c = 0; c < d; ++c)
                    for (Label e = 0; e < d; ++e) {
                        if (a == b || c == e) continue;
                        EXPECT_EQ(edge_witness(f, {a, b}, {c, e}), edge_oracle(f, {a, b}, {c, e}));
                    }
    }
}

TEST(PairGraph, SubmodularHasNoLoops) {
    PairGraph g = build_pair_graph(binary_closure(submodular_lang()));
    EXPECT_EQ(g.m_set, all_pairs(2));
    EXPECT_FALSE(find_soft_self_loop(g));
    EXPECT_FALSE(g.has_self_loop({0, 1}));
    EXPECT_TRUE(check_pair_graph(g).passed());
}

TEST(PairGraph, CutHasASoftSelfLoop) {
    BinaryClosure c = binary_closure(cut_lang(), ClosureBudget{1, 512, 32});
    PairGraph g = build_pair_graph(c);
    auto loop = find_soft_self_loop(g);
    ASSERT_TRUE(loop);
    EXPECT_EQ(loop->node, (Node{0, 1}));
    EXPECT_EQ(edge_witness(c.members[loop->witness.member].table, loop->node, loop->node), EdgeKind::Soft);
    GraphCheck chk = check_pair_graph(g);
    EXPECT_FALSE(chk.applicable);
}

TEST(PairGraph, DisequalityHasHardLoops) {
    PairGraph g = build_pair_graph(binary_closure(disequality_lang()));
    EXPECT_TRUE(g.m_set.empty());
    EXPECT_TRUE(g.has_self_loop({0, 1}));
    EXPECT_TRUE(g.has_self_loop({1, 0}));
    EXPECT_EQ(g.edge({0, 1}, {0, 1})->kind, EdgeKind::Hard);
    EXPECT_FALSE(find_soft_self_loop(g));
    EXPECT_TRUE(check_pair_graph(g).passed());
    EXPECT_FALSE(g.truncated);
}

TEST(PairGraph, SoftWitnessWinsOverHard) {
    // Member 0 gives a hard loop at (0,1); member 1 a soft one. The soft witness is kept.
    BinaryClosure c = single_member(disequality_fn());
    c.members.push_back(ClosureMember{cut_fn(), {}, {}, {}, false, false, 0, 2});
    PairGraph g = build_pair_graph(c);
    const EdgeInfo* e = g.edge({0, 1}, {0, 1});
    ASSERT_TRUE(e);
    EXPECT_EQ(e->kind, EdgeKind::Soft);
    EXPECT_EQ(e->member, 1u);
}

TEST(PairGraph, EdgesAgreeWithMembers) {
    Gen gen(42);
    for (int i = 0; i < 20; ++i) {
        Language l(3, {gen.function(3, 2, 30, 3)}, UnaryClosure::Finite);
        BinaryClosure c = binary_closure(l, ClosureBudget{1, 200, 32});
        PairGraph g = build_pair_graph(c);
        for (const auto& [key, info] : g.edges) {
            const auto [p, q] = key;
            EXPECT_LE(p, q);
            auto kind = info.swapped ? edge_witness(c.members[info.member].table, q, p)
                                     : edge_witness(c.members[info.member].table, p, q);
            EXPECT_EQ(kind, info.kind);
        }
        // Loop-free pairs are exactly those with no loop on either orientation.
        for (Label a = 0; a < 3; ++a)
            for (Label b = a + 1; b < 3; ++b)
                EXPECT_EQ(contains_pair(g.m_set, a, b), !g.has_self_loop({a, b}) && !g.has_self_loop({b, a}));
    }
}

TEST(GraphCheck, DetectsInjectedFaults) {
    PairGraph g;
    g.domain_size = 3;
    for (Label a = 0; a < 3; ++a)
        for (Label b = 0; b < 3; ++b)
            if (a != b) g.nodes.push_back({a, b});
    g.edges[{{0, 1}, {0, 1}}] = EdgeInfo{EdgeKind::Hard, 0, false};
    g.m_set = {{0, 2}, {1, 2}};
    // (1,0) lacks the loop that (0,1) has.
    GraphCheck asym = check_pair_graph(g);
    EXPECT_FALSE(asym.symmetric);
    EXPECT_FALSE(asym.passed());

    g.edges[{{1, 0}, {1, 0}}] = EdgeInfo{EdgeKind::Hard, 0, false};
    EXPECT_TRUE(check_pair_graph(g).passed());

    PairGraph cross = g;
    cross.edges[{{0, 1}, {0, 2}}] = EdgeInfo{EdgeKind::Hard, 0, false};
    GraphCheck c = check_pair_graph(cross);
    EXPECT_FALSE(c.no_cross_edges);
    EXPECT_FALSE(c.interpretation().empty());

    PairGraph soft = g;
    soft.edges[{{0, 1}, {1, 0}}] = EdgeInfo{EdgeKind::Soft, 0, false};
    EXPECT_FALSE(check_pair_graph(soft).no_soft_on_loops);
}

TEST(GraphOutput, JsonAndDot) {
    PairGraph g = build_pair_graph(binary_closure(disequality_lang()));
    const std::string json = graph_to_json(g);
    EXPECT_NE(json.find("\"m_set\""), std::string::npos);
    EXPECT_NE(json.find("\"hard\""), std::string::npos);
    const std::string dot = graph_to_dot(g);
    EXPECT_EQ(dot.rfind("graph", 0), 0u);
    EXPECT_NE(dot.find("dashed"), std::string::npos);
}
