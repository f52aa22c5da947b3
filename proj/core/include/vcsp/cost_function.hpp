#ifndef VCSP_COST_FUNCTION_HPP
#define VCSP_COST_FUNCTION_HPP

#include "vcsp/cost.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace vcsp {

using Label = int;
using Tuple = std::vector<Label>;

/// Largest table a CostFunction may hold (|D|^m).
inline constexpr std::size_t kMaxTableSize = 1'000'000;

/// |D|^m, or throws CapabilityError when it exceeds `cap`.
std::size_t checked_power(int domain_size, int exponent, std::size_t cap);

/// Dense table D^m -> Cost in row-major label order (first coordinate most significant).
class CostFunction {
public:
    CostFunction() = default;
    CostFunction(int domain_size, int arity, std::vector<Cost> table);

    /// All-zero table.
    static CostFunction zero(int domain_size, int arity);
    /// Table built from a callback over tuples.
    template <class Fn>
    static CostFunction tabulate(int domain_size, int arity, Fn&& fn) {
        CostFunction f = zero(domain_size, arity);
        Tuple t(static_cast<std::size_t>(arity), 0);
        for (std::size_t i = 0; i < f.table_.size(); ++i) {
            f.table_[i] = fn(static_cast<const Tuple&>(t));
            f.advance(t);
        }
        return f;
    }

    int domain_size() const noexcept { return domain_size_; }
    int arity() const noexcept { return arity_; }
    std::size_t size() const noexcept { return table_.size(); }
    std::span<const Cost> table() const noexcept { return table_; }

    const Cost& operator[](std::size_t index) const { return table_[index]; }
    const Cost& at(std::span<const Label> tuple) const { return table_[index_of(tuple)]; }
    const Cost& at(Label a, Label b) const { return table_[static_cast<std::size_t>(a) * domain_size_ + b]; }

    std::size_t index_of(std::span<const Label> tuple) const;
    Tuple tuple_at(std::size_t index) const;
    /// Odometer increment in lexicographic order; returns false after the last tuple.
    bool advance(Tuple& t) const;

    bool in_domain(std::span<const Label> tuple) const { return at(tuple).is_finite(); }
    bool is_crisp() const;
    bool is_finite_valued() const;
    /// Largest finite entry, or zero when every entry is infinite.
    Rational max_finite() const;

    /// Tuples with finite cost, lexicographic order.
    std::vector<Tuple> effective_domain() const;
    /// Table indices with finite cost, ascending.
    std::vector<std::size_t> effective_domain_indices() const;

    /// Finite entries replaced by zero.
    CostFunction crispified() const;
    /// Binary only: g(x, y) = f(y, x).
    CostFunction transposed() const;

    friend bool operator==(const CostFunction&, const CostFunction&) = default;

private:
    int domain_size_ = 2;
    int arity_ = 1;
    std::vector<Cost> table_;
};

/// Unary table from explicit costs.
CostFunction unary(int domain_size, std::vector<Cost> costs);
/// Crisp unary whose effective domain is the label set `mask` (bit a = label a).
CostFunction crisp_unary(int domain_size, std::uint32_t mask);

} // namespace vcsp

#endif // VCSP_COST_FUNCTION_HPP
