#ifndef VCSP_TESTS_FIXTURES_HPP
#define VCSP_TESTS_FIXTURES_HPP

// Small languages and random generators shared by the unit and acceptance tests.

#include "vcsp/language.hpp"
#include "vcsp/ops.hpp"

#include <ostream>
#include <random>
#include <vector>

namespace vcsp {

// Readable gtest output for tables.
inline void PrintTo(const CostFunction& f, std::ostream* os) {
    *os << "[";
    for (std::size_t i = 0; i < f.size(); ++i) *os << (i ? " " : "") << f[i].to_string();
    *os << "]";
}

} // namespace vcsp

namespace vcsp::testing {

inline Cost inf() { return Cost::infinity(); }

inline CostFunction binary(int d, std::vector<Cost> t) { return CostFunction(d, 2, std::move(t)); }

/// f(0,0)=0, f(0,1)=f(1,0)=f(1,1)=2.
inline CostFunction submodular_fn() { return binary(2, {0, 2, 2, 2}); }
/// f(0,0)=f(1,1)=1, f(0,1)=f(1,0)=0.
inline CostFunction cut_fn() { return binary(2, {1, 0, 0, 1}); }
/// 0 iff x != y.
inline CostFunction disequality_fn(int d = 2) {
    return CostFunction::tabulate(d, 2, [](const Tuple& t) { return t[0] != t[1] ? Cost(0) : inf(); });
}
/// 0 iff x = y.
inline CostFunction equality_fn(int d = 2) {
    return CostFunction::tabulate(d, 2, [](const Tuple& t) { return t[0] == t[1] ? Cost(0) : inf(); });
}
/// Crisp {(a,b,c) : a xor b xor c = 0} on {0,1}.
inline CostFunction parity_fn() {
    return CostFunction::tabulate(2, 3, [](const Tuple& t) { return (t[0] ^ t[1] ^ t[2]) == 0 ? Cost(0) : inf(); });
}

inline Language conservative(std::vector<CostFunction> fns, int d = 2) {
    return Language(d, std::move(fns), UnaryClosure::Finite);
}

inline Language submodular_lang() { return conservative({submodular_fn()}); }
inline Language cut_lang() { return conservative({cut_fn()}); }
inline Language disequality_lang() { return conservative({disequality_fn()}); }
inline Language parity_lang() { return conservative({parity_fn()}); }

/// Deterministic generator; draws use modulo so results do not depend on the standard
/// library's distribution implementations.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t below(std::uint64_t n) { return rng_() % n; }
    int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
    bool chance(int percent) { return static_cast<int>(below(100)) < percent; }

    Cost cost(int inf_percent, int max_value) {
        if (chance(inf_percent)) return Cost::infinity();
        return Cost(static_cast<std::int64_t>(below(static_cast<std::uint64_t>(max_value) + 1)));
    }

    CostFunction function(int d, int arity, int inf_percent, int max_value) {
        return CostFunction::tabulate(d, arity, [&](const Tuple&) { return cost(inf_percent, max_value); });
    }

    CostFunction crisp(int d, int arity, int inf_percent) { return function(d, arity, inf_percent, 0); }

    Assignment assignment(int n, int d) {
        Assignment x(static_cast<std::size_t>(n));
        for (auto& l : x) l = range(0, d - 1);
        return x;
    }

    Instance instance(const Language& lang, int num_vars, int num_terms) {
        Instance inst;
        inst.num_vars = num_vars;
        for (int t = 0; t < num_terms; ++t) {
            std::size_t fn = below(lang.size());
            std::vector<int> scope;
            for (int k = 0; k < lang.function(fn).arity(); ++k) scope.push_back(range(0, num_vars - 1));
            inst.terms.push_back({fn, std::move(scope)});
        }
        return inst;
    }

private:
    std::mt19937_64 rng_;
};

/// Every assignment of n variables over d labels, lexicographic.
inline std::vector<Assignment> all_assignments(int n, int d) {
    std::vector<Assignment> out;
    Assignment x(static_cast<std::size_t>(n), 0);
    while (true) {
        out.push_back(x);
        int k = n - 1;
        for (; k >= 0; --k) {
            if (++x[static_cast<std::size_t>(k)] < d) break;
            x[static_cast<std::size_t>(k)] = 0;
        }
        if (k < 0) break;
    }
    return out;
}

} // namespace vcsp::testing

#endif // VCSP_TESTS_FIXTURES_HPP
