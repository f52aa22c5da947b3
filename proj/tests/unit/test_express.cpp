#include "fixtures.hpp"

#include "vcsp/closure.hpp"
#include "vcsp/error.hpp"
#include "vcsp/express.hpp"

#include <gtest/gtest.h>

using namespace vcsp;
using namespace vcsp::testing;

namespace {

// Direct min over the middle label.
CostFunction compose_oracle(const CostFunction& f, const CostFunction& g) {
    const int d = f.domain_size();
    return CostFunction::tabulate(d, 2, [&](const Tuple& t) {
        Cost best = Cost::infinity();
        for (int z = 0; z < d; ++z) best = std::min(best, f.at(t[0], z) + g.at(z, t[1]));
        return best;
    });
}

CostFunction from_domain(int d, const std::vector<Tuple>& dom) {
    return CostFunction::tabulate(d, 2, [&](const Tuple& t) {
        for (const Tuple& s : dom)
            if (s == t) return Cost(0);
        return Cost::infinity();
    });
}

} // namespace

TEST(ExpressGadget, ChainOfDisequalitiesIsEquality) {
    Language l(2, {disequality_fn()});
    Instance chain{3, {{0, {0, 1}}, {0, {1, 2}}}};
    EXPECT_EQ(express_gadget(chain, l, {0, 2}), equality_fn());
    // Three disequalities in a row give disequality again.
    Instance longer{4, {{0, {0, 1}}, {0, {1, 2}}, {0, {2, 3}}}};
    EXPECT_EQ(express_gadget(longer, l, {0, 3}), disequality_fn());
}

TEST(ExpressGadget, MinimizesOutAuxiliaryVariables) {
    Language l(2, {unary(2, {3, 1}), submodular_fn()});
    Instance inst{2, {{0, {1}}, {1, {0, 1}}}};
    // f(x0) = min_x1 u(x1) + s(x0, x1): x0 = 0 -> min(3+0, 1+2) = 3; x0 = 1 -> min(3+2, 1+2) = 3.
    EXPECT_EQ(express_gadget(inst, l, {0}), unary(2, {3, 3}));
    Gadget g{l, inst, {1, 0}};
    EXPECT_EQ(g.auxiliary(), std::vector<int>{});
    EXPECT_EQ(express_gadget(g), CostFunction(2, 2, {3, 5, 3, 3}));
}

TEST(ExpressGadget, RejectsBadExposure) {
    Language l(2, {disequality_fn()});
    Instance chain{2, {{0, {0, 1}}}};
    EXPECT_THROW(express_gadget(chain, l, {}), StructuralError);
    EXPECT_THROW(express_gadget(chain, l, {0, 0}), StructuralError);
    EXPECT_THROW(express_gadget(chain, l, {2}), StructuralError);
}

TEST(ExpressGadget, AgreesWithEnumeration) {
    Gen g(31);
    for (int i = 0; i < 60; ++i) {
        const int d = g.range(2, 3);
        Language l(d, {g.function(d, 2, 25, 5), g.function(d, 1, 10, 5), g.function(d, 3, 30, 3)});
        Instance inst = g.instance(l, 4, 4);
        std::vector<int> exposed{0, 2};
        CostFunction f = express_gadget(inst, l, exposed);
        for (const auto& x : all_assignments(4, d)) {
            // Every full assignment bounds the expressed value from above.
            EXPECT_LE(f.at(x[0], x[2]), evaluate(inst, l, x));
        }
        for (std::size_t k = 0; k < f.size(); ++k) {
            Tuple e = f.tuple_at(k);
            Cost best = Cost::infinity();
            for (const auto& x : all_assignments(4, d))
                if (x[0] == e[0] && x[2] == e[1]) best = std::min(best, evaluate(inst, l, x));
            EXPECT_EQ(f[k], best);
        }
    }
}

TEST(MinCompose, Examples) {
    // Disequality composed with itself is equality.
    EXPECT_EQ(min_compose(disequality_fn(), disequality_fn()), equality_fn());
    // Three-point composition: {(a',a), (b',b), (b',c)} then {(a,a''), (b,a''), (c,b'')}.
    CostFunction f = from_domain(3, {{0, 0}, {1, 1}, {1, 2}});
    CostFunction g = from_domain(3, {{0, 0}, {1, 0}, {2, 1}});
    EXPECT_EQ(min_compose(f, g), from_domain(3, {{0, 0}, {1, 0}, {1, 1}}));
    EXPECT_THROW(min_compose(f, parity_fn()), StructuralError);
}

TEST(MinCompose, MatchesOracleAndIsAssociative) {
    Gen g(32);
    for (int i = 0; i < 300; ++i) {
        const int d = g.range(2, 4);
        CostFunction a = g.function(d, 2, 30, 6), b = g.function(d, 2, 30, 6), c = g.function(d, 2, 30, 6);
        EXPECT_EQ(min_compose(a, b), compose_oracle(a, b));
        EXPECT_EQ(min_compose(min_compose(a, b), c), min_compose(a, min_compose(b, c)));
        EXPECT_EQ(min_compose(a, b).transposed(), min_compose(b.transposed(), a.transposed()));
    }
}

TEST(PinProject, Examples) {
    // Parity with the middle coordinate fixed to 1 is disequality; minimized out it is all-zero.
    EXPECT_EQ(pin_project(parity_fn(), 0, 2, {pin::Fixed{1}}), disequality_fn());
    EXPECT_EQ(pin_project(parity_fn(), 0, 2, {pin::Minimize{}}), CostFunction::zero(2, 2));
    EXPECT_EQ(pin_project(parity_fn(), 0, 2, {pin::Subset{0b01}}), equality_fn());
    // A penalty on label 1 makes the disequality branch cost 5.
    EXPECT_EQ(pin_project(parity_fn(), 0, 2, {pin::Penalty{1, Rational(5)}}), CostFunction(2, 2, {0, 5, 5, 0}));
    // Coordinates can be swapped.
    CostFunction f = CostFunction(2, 2, {0, 1, 2, 3});
    EXPECT_EQ(pin_project(f, 1, 0, {}), f.transposed());
}

TEST(PinProject, RejectsBadArguments) {
    EXPECT_THROW(pin_project(parity_fn(), 0, 0, {pin::Minimize{}}), StructuralError);
    EXPECT_THROW(pin_project(parity_fn(), 0, 2, {}), StructuralError);
    EXPECT_THROW(pin_project(parity_fn(), 0, 2, {pin::Fixed{2}}), StructuralError);
    EXPECT_THROW(pin_project(parity_fn(), 0, 2, {pin::Penalty{0, Rational(-1)}}), StructuralError);
}

TEST(PinProject, MatchesGadgetWithUnary) {
    // A subset pin is the same as a crisp unary on the pinned coordinate.
    Gen g(33);
    for (int i = 0; i < 100; ++i) {
        const int d = 3;
        CostFunction f = g.function(d, 3, 25, 4);
        std::uint32_t mask = 1 + static_cast<std::uint32_t>(g.below(7));
        Language l(d, {f, crisp_unary(d, mask)});
        Instance inst{3, {{0, {0, 1, 2}}, {1, {1}}}};
        EXPECT_EQ(pin_project(f, 0, 2, {pin::Subset{mask}}), express_gadget(inst, l, {0, 2}));
    }
}

TEST(Normalize, RowsThenColumnsHaveZeroMinimum) {
    std::vector<Rational> row, col;
    CostFunction f(2, 2, {3, 5, 2, inf()});
    CostFunction n = normalize(f, &row, &col);
    EXPECT_EQ(n, CostFunction(2, 2, {0, 0, 0, inf()}));
    EXPECT_EQ(row, (std::vector<Rational>{Rational(3), Rational(2)}));
    EXPECT_EQ(col, (std::vector<Rational>{Rational(0), Rational(2)}));
    Gen g(34);
    for (int i = 0; i < 200; ++i) {
        CostFunction h = g.function(3, 2, 35, 9);
        CostFunction m = normalize(h, &row, &col);
        for (int x = 0; x < 3; ++x)
            for (int y = 0; y < 3; ++y) {
                if (h.at(x, y).is_infinite()) {
                    EXPECT_TRUE(m.at(x, y).is_infinite());
                    continue;
                }
                EXPECT_EQ(m.at(x, y) + Cost(row[x]) + Cost(col[y]), h.at(x, y));
            }
    }
}

TEST(Closure, DisequalitySaturatesWithEquality) {
    BinaryClosure c = binary_closure(disequality_lang());
    EXPECT_TRUE(c.saturated);
    EXPECT_FALSE(c.budget_exhausted);
    EXPECT_TRUE(c.find(disequality_fn()));
    EXPECT_TRUE(c.find(equality_fn()));
    EXPECT_TRUE(c.find(CostFunction::zero(2, 2)));
}

TEST(Closure, CutContainsItsNormalForm) {
    BinaryClosure c = binary_closure(cut_lang(), ClosureBudget{1, 512, 32});
    EXPECT_TRUE(c.find(normalize(cut_fn())));
    for (const auto& m : c.members) {
        EXPECT_TRUE(c.find(m.table.transposed()));
        EXPECT_EQ(normalize(m.table), m.table);
    }
}

TEST(Closure, SizeBudgetIsReported) {
    BinaryClosure c = binary_closure(submodular_lang(), ClosureBudget{5, 10, 32});
    EXPECT_TRUE(c.budget_exhausted);
    EXPECT_FALSE(c.saturated);
    EXPECT_LE(c.members.size(), 10u);
    EXPECT_THROW(binary_closure(Language(5, {}, UnaryClosure::Finite)), CapabilityError);
}

TEST(Closure, EveryMemberPassesItsAudit) {
    Gen g(35);
    for (int i = 0; i < 12; ++i) {
        const int d = g.range(2, 3);
        Language l(d, {g.function(d, 2, 30, 3), g.function(d, 3, 40, 2)}, UnaryClosure::Finite);
        BinaryClosure c = binary_closure(l, ClosureBudget{2, 150, 32});
        for (std::size_t k = 0; k < c.members.size(); ++k) {
            std::string why;
            EXPECT_TRUE(audit_member(c, k, l, &why)) << "member " << k << ": " << why;
        }
    }
}

TEST(Closure, MonotoneInRounds) {
    Gen g(36);
    for (int i = 0; i < 10; ++i) {
        Language l(2, {g.function(2, 2, 30, 3), g.function(2, 3, 30, 2)}, UnaryClosure::Finite);
        BinaryClosure small = binary_closure(l, ClosureBudget{1, 4096, 32});
        BinaryClosure big = binary_closure(l, ClosureBudget{2, 4096, 32});
        ASSERT_FALSE(big.budget_exhausted);
        for (const auto& m : small.members) EXPECT_TRUE(big.find(m.table));
        EXPECT_GE(big.members.size(), small.members.size());
    }
}

TEST(Closure, MultimorphismsCarryOverToMembers) {
    // Submodular languages stay submodular under everything the closure does.
    Gen g(37);
    const OpPair mm{ops::min(3), ops::max(3)};
    int checked = 0;
    auto draw = [&] {
        // a|x - y| + u(x) + v(y), optionally restricted to x <= y + 1: both are submodular.
        const int a = g.range(0, 3);
        const bool cut = g.chance(50);
        std::vector<int> u{g.range(0, 3), g.range(0, 3), g.range(0, 3)}, v{g.range(0, 3), g.range(0, 3), g.range(0, 3)};
        return CostFunction::tabulate(3, 2, [&](const Tuple& t) {
            if (cut && t[0] > t[1] + 1) return Cost::infinity();
            return Cost(a * std::abs(t[0] - t[1]) + u[t[0]] + v[t[1]]);
        });
    };
    for (int i = 0; i < 8; ++i) {
        Language l(3, {draw(), draw()}, UnaryClosure::Finite);
        ASSERT_TRUE(check_multimorphism(mm, l).holds);
        ++checked;
        BinaryClosure c = binary_closure(l, ClosureBudget{2, 300, 32});
        for (const auto& m : c.members) EXPECT_TRUE(check_multimorphism(mm, m.table).holds);
    }
    EXPECT_GT(checked, 0);
}

TEST(Closure, Deterministic) {
    BinaryClosure a = binary_closure(submodular_lang());
    BinaryClosure b = binary_closure(submodular_lang());
    ASSERT_EQ(a.members.size(), b.members.size());
    for (std::size_t k = 0; k < a.members.size(); ++k) EXPECT_EQ(a.members[k].table, b.members[k].table);
}
