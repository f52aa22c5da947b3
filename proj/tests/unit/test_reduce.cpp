#include "fixtures.hpp"

#include "vcsp/error.hpp"
#include "vcsp/majority.hpp"
#include "vcsp/reduce.hpp"
#include "vcsp/solver.hpp"

#include <gtest/gtest.h>

using namespace vcsp;
using namespace vcsp::testing;

namespace {

// Whether some term other than an infinite-containing unary is infinite at x.
bool hard_elsewhere(const Instance& inst, const Language& lang, const Assignment& x) {
    for (const Term& t : inst.terms) {
        const CostFunction& f = lang.function(t.fn);
        if (f.arity() == 1 && !f.is_finite_valued()) continue;
        Tuple args;
        for (int v : t.scope) args.push_back(x[static_cast<std::size_t>(v)]);
        if (!f.in_domain(args)) return true;
    }
    return false;
}

} // namespace

TEST(Derive, Examples) {
    Language feas = derive_language(submodular_lang(), DeriveMode::Feas);
    EXPECT_EQ(feas.function(0), CostFunction::zero(2, 2));
    EXPECT_EQ(feas.unary_closure(), UnaryClosure::None);
    Language crisp(2, {disequality_fn()});
    EXPECT_EQ(derive_language(crisp, DeriveMode::Feas), crisp);
    Language mh = derive_language(crisp, DeriveMode::MinHom);
    EXPECT_EQ(mh.function(0), disequality_fn());
    EXPECT_EQ(mh.unary_closure(), UnaryClosure::Finite);
    EXPECT_EQ(derive_language(crisp, DeriveMode::Bar).unary_closure(), UnaryClosure::General);
    EXPECT_EQ(derive_mode_from_string("minhom"), DeriveMode::MinHom);
    EXPECT_THROW(derive_mode_from_string("other"), ParseError);
}

TEST(Derive, FeasIsIdempotent) {
    Gen g(61);
    for (int i = 0; i < 100; ++i) {
        Language l(3, {g.function(3, 2, 30, 5), g.function(3, 1, 30, 5)}, static_cast<UnaryClosure>(g.below(3)));
        Language once = derive_language(l, DeriveMode::Feas);
        EXPECT_EQ(derive_language(once, DeriveMode::Feas), once);
        for (const auto& f : once.functions()) EXPECT_TRUE(f.is_crisp());
    }
}

TEST(CapReduce, Example) {
    Language l(2, {unary(2, {0, inf()}), CostFunction::zero(2, 2)}, UnaryClosure::General);
    Instance inst{2, {{0, {0}}, {1, {0, 1}}}};
    CapReduction r = cap_reduce(inst, l);
    EXPECT_EQ(r.n, 2);
    EXPECT_EQ(r.c, Rational(1));
    EXPECT_EQ(r.threshold(), Rational(2));
    EXPECT_EQ(evaluate(r.instance, r.language, Assignment{1, 0}), Cost(2));
    EXPECT_EQ(evaluate(r.instance, r.language, Assignment{0, 1}), Cost(0));
    EXPECT_TRUE(r.language.function(r.instance.terms[0].fn).is_finite_valued());
}

TEST(CapReduce, FiniteInstancesAreUnchanged) {
    Instance inst{2, {{0, {0, 1}}}};
    CapReduction r = cap_reduce(inst, submodular_lang());
    EXPECT_EQ(r.instance, inst);
    EXPECT_EQ(r.language, submodular_lang());
}

TEST(CapReduce, PreservesAnswers) {
    Gen g(62);
    for (int i = 0; i < 150; ++i) {
        const int d = g.range(2, 3);
        Language l(d, {g.function(d, 1, 40, 6), g.function(d, 2, 15, 6), g.function(d, 1, 0, 4)}, UnaryClosure::General);
        Instance inst = g.instance(l, g.range(1, 4), g.range(1, 6));
        CapReduction r = cap_reduce(inst, l);
        for (const auto& x : all_assignments(inst.num_vars, d)) {
            const Cost before = evaluate(inst, l, x);
            const Cost after = evaluate(r.instance, r.language, x);
            if (before.is_finite()) {
                EXPECT_EQ(after, before);
                EXPECT_LT(after, Cost(r.threshold()));
            } else if (!hard_elsewhere(inst, l, x)) {
                EXPECT_GE(after, Cost(r.threshold()));
                EXPECT_TRUE(after.is_finite());
            } else {
                EXPECT_TRUE(after.is_infinite());
            }
        }
    }
}

TEST(MinHomReduce, Example) {
    // Crisp binary original with max finite 0, one unary (0, 1).
    Language mh(2, {unary(2, {0, 1}), disequality_fn()}, UnaryClosure::Finite);
    Instance inst{2, {{0, {0}}, {1, {0, 1}}}};
    MinHomReduction r = minhom_reduce(inst, mh, {{1, disequality_fn()}});
    EXPECT_EQ(r.c, Rational(1));
    EXPECT_EQ(r.n, 1);
    const Cost reduced = evaluate(r.instance, r.language, Assignment{1, 0});
    EXPECT_EQ(reduced, Cost(1));
    EXPECT_EQ(r.recover(reduced), Cost(1));
}

TEST(MinHomReduce, NoUnaries) {
    Language l(2, {CostFunction(2, 2, {0, 3, 1, inf()})});
    Instance inst{3, {{0, {0, 1}}, {0, {1, 2}}}};
    MinHomReduction r = minhom_reduce(inst, l);
    for (const auto& x : all_assignments(3, 2)) {
        const Cost c = evaluate(r.instance, r.language, x);
        if (c.is_finite()) {
            EXPECT_LT(c, Cost(r.scale()));
        }
    }
}

TEST(MinHomReduce, Rejections) {
    Language frac(2, {unary(2, {Cost(Rational(1, 2)), 0}), disequality_fn()}, UnaryClosure::Finite);
    Instance inst{2, {{0, {0}}, {1, {0, 1}}}};
    EXPECT_THROW(minhom_reduce(inst, frac, {{1, disequality_fn()}}), CapabilityError);
    Language mh(2, {unary(2, {0, 1}), disequality_fn()}, UnaryClosure::Finite);
    EXPECT_THROW(minhom_reduce(inst, mh, {}), StructuralError);
    EXPECT_THROW(minhom_reduce(inst, mh, {{1, equality_fn()}}), StructuralError);
}

TEST(MinHomReduce, SandwichAndRecovery) {
    Gen g(63);
    for (int i = 0; i < 150; ++i) {
        const int d = g.range(2, 3);
        CostFunction orig = g.function(d, 2, 30, 5);
        CostFunction orig3 = g.function(d, 3, 40, 3);
        Language mh(d, {g.function(d, 1, 0, 4), orig.crispified(), orig3.crispified()}, UnaryClosure::Finite);
        Instance inst = g.instance(mh, g.range(1, 4), g.range(1, 5));
        MinHomReduction r = minhom_reduce(inst, mh, {{1, orig}, {2, orig3}});
        for (const auto& x : all_assignments(inst.num_vars, d)) {
            const Cost f = evaluate(inst, mh, x);
            const Cost fc = evaluate(r.instance, r.language, x);
            if (f.is_infinite()) {
                EXPECT_TRUE(fc.is_infinite());
                continue;
            }
            EXPECT_LE(Cost(r.scale() * f.value()), fc);
            EXPECT_LT(fc, Cost(r.scale() * (f.value() + Rational(1))));
            EXPECT_EQ(r.recover(fc), f);
        }
        const Solution a = brute_force_solve(inst, mh);
        const Solution b = brute_force_solve(r.instance, r.language);
        EXPECT_EQ(r.recover(b.cost), a.cost);
    }
}

TEST(BinaryDecompose, Examples) {
    EXPECT_TRUE(binary_decompose(cut_fn()).exact);
    BinaryDecomposition p = binary_decompose(parity_fn());
    EXPECT_FALSE(p.exact);
    for (const auto& [ij, rho] : p.binary) EXPECT_EQ(rho, CostFunction::zero(2, 2));
    CostFunction atmost1 = CostFunction::tabulate(2, 3, [](const Tuple& t) {
        return t[0] + t[1] + t[2] <= 1 ? Cost(0) : inf();
    });
    EXPECT_TRUE(binary_decompose(atmost1).exact);
    EXPECT_THROW(binary_decompose(unary(2, {0, 1})), StructuralError);
}

TEST(BinaryDecompose, MajorityImpliesExact) {
    Gen g(64);
    int with_majority = 0;
    for (int i = 0; i < 300; ++i) {
        const int d = g.range(2, 3);
        CostFunction f = g.crisp(d, 3, g.range(20, 80));
        auto r = search_majority(Language(d, {f}), MajorityStrategy::Exhaustive);
        ASSERT_TRUE(r.complete);
        if (r.majority) {
            ++with_majority;
            EXPECT_TRUE(binary_decompose(f).exact);
        }
    }
    EXPECT_GT(with_majority, 0);
}
