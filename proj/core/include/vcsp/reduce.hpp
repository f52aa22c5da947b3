#ifndef VCSP_REDUCE_HPP
#define VCSP_REDUCE_HPP

#include "vcsp/language.hpp"

#include <map>
#include <string_view>
#include <vector>

namespace vcsp {

enum class DeriveMode {
    /// Every finite entry replaced by 0.
    Feas,
    /// Feas plus every finite-valued unary.
    MinHom,
    /// The language plus every unary, infinities allowed.
    Bar,
};

std::string_view to_string(DeriveMode m);
DeriveMode derive_mode_from_string(std::string_view s);

Language derive_language(const Language& lang, DeriveMode mode);

/// Instance with infinite unaries replaced by finite ones. For every assignment:
/// finite original cost -> the same cost, below `threshold`; infinite original cost from
/// a capped unary -> at least `threshold`. Other infinite terms stay infinite.
struct CapReduction {
    Instance instance;
    Language language;
    /// Repetition count: the number of terms of the original instance (at least 1).
    std::int64_t n = 1;
    /// Largest finite entry over the tables the instance uses, plus one.
    Rational c;
    Rational threshold() const { return c * Rational(n); }
};

/// Every unary term u with an infinite entry becomes N copies of u'(z) = u(z) / N where u
/// is finite and C where it is not. Other terms are kept.
CapReduction cap_reduce(const Instance& instance, const Language& lang);

/// From an instance over Feas(G) plus integer unaries to an instance over G:
/// non-unary terms use their original function, every unary u becomes N copies of C * u,
/// with N the number of non-unary terms (at least 1) and C one more than the largest
/// finite entry of the originals used. With f the MinHom cost,
///   N*C*f(x) <= f'(x) < N*C*(f(x) + 1) on dom f, and f'(x) infinite off it.
struct MinHomReduction {
    Instance instance;
    Language language;
    std::int64_t n = 1;
    Rational c;
    Rational scale() const { return c * Rational(n); }
    /// floor(value / (N*C)).
    Cost recover(const Cost& reduced) const;
};

/// `originals[i]` is the function of the target language whose Feas is non-unary function i
/// of `minhom`. Unary costs must be integers (CapabilityError otherwise); a non-unary function
/// whose Feas differs from its original's is a StructuralError.
MinHomReduction minhom_reduce(const Instance& instance, const Language& minhom,
                              const std::map<std::size_t, CostFunction>& originals);

/// Reads one language as both sides of the reduction: its unary functions as the MinHom
/// unaries, every other function as its own original.
MinHomReduction minhom_reduce(const Instance& instance, const Language& lang);

/// rho_i and rho_ij: exact minimizations of f onto single coordinates and ordered pairs.
struct BinaryDecomposition {
    int arity = 0;
    std::vector<CostFunction> unary;
    /// Keyed by (i, j), i != j.
    std::map<std::pair<int, int>, CostFunction> binary;
    /// dom f equals the set of tuples whose projections all lie in the parts' domains.
    bool exact = false;
};

BinaryDecomposition binary_decompose(const CostFunction& f);

} // namespace vcsp

#endif // VCSP_REDUCE_HPP
