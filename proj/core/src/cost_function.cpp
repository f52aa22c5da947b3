#include "vcsp/cost_function.hpp"

#include "vcsp/error.hpp"

#include <string>

namespace vcsp {

std::size_t checked_power(int domain_size, int exponent, std::size_t cap) {
    std::size_t n = 1;
    for (int i = 0; i < exponent; ++i) {
        n *= static_cast<std::size_t>(domain_size);
        if (n > cap)
            throw CapabilityError(std::to_string(domain_size) + "^" + std::to_string(exponent) +
                                  " exceeds the cap of " + std::to_string(cap));
    }
    return n;
}

CostFunction::CostFunction(int domain_size, int arity, std::vector<Cost> table)
    : domain_size_(domain_size), arity_(arity), table_(std::move(table)) {
    if (domain_size < 2) throw StructuralError("domain size must be at least 2");
    if (arity < 1) throw StructuralError("arity must be positive");
    std::size_t expected = checked_power(domain_size, arity, kMaxTableSize);
    if (table_.size() != expected)
        throw StructuralError("table has " + std::to_string(table_.size()) + " entries, expected " +
                              std::to_string(expected));
}

CostFunction CostFunction::zero(int domain_size, int arity) {
    if (domain_size < 2) throw StructuralError("domain size must be at least 2");
    if (arity < 1) throw StructuralError("arity must be positive");
    return CostFunction(domain_size, arity, std::vector<Cost>(checked_power(domain_size, arity, kMaxTableSize)));
}

std::size_t CostFunction::index_of(std::span<const Label> tuple) const {
    if (tuple.size() != static_cast<std::size_t>(arity_))
        throw StructuralError("tuple of length " + std::to_string(tuple.size()) + " for arity " +
                              std::to_string(arity_));
    std::size_t idx = 0;
    for (Label l : tuple) {
        if (l < 0 || l >= domain_size_) throw StructuralError("label " + std::to_string(l) + " out of range");
        idx = idx * static_cast<std::size_t>(domain_size_) + static_cast<std::size_t>(l);
    }
    return idx;
}

Tuple CostFunction::tuple_at(std::size_t index) const {
    Tuple t(static_cast<std::size_t>(arity_));
    for (int i = arity_ - 1; i >= 0; --i) {
        t[static_cast<std::size_t>(i)] = static_cast<Label>(index % static_cast<std::size_t>(domain_size_));
        index /= static_cast<std::size_t>(domain_size_);
    }
    return t;
}

bool CostFunction::advance(Tuple& t) const {
    for (int i = arity_ - 1; i >= 0; --i) {
        auto& x = t[static_cast<std::size_t>(i)];
        if (++x < domain_size_) return true;
        x = 0;
    }
    return false;
}

bool CostFunction::is_crisp() const {
    for (const Cost& c : table_)
        if (c.is_finite() && !c.is_zero()) return false;
    return true;
}

bool CostFunction::is_finite_valued() const {
    for (const Cost& c : table_)
        if (c.is_infinite()) return false;
    return true;
}

Rational CostFunction::max_finite() const {
    Rational best;
    for (const Cost& c : table_)
        if (c.is_finite() && c.value() > best) best = c.value();
    return best;
}

std::vector<Tuple> CostFunction::effective_domain() const {
    std::vector<Tuple> out;
    for (std::size_t i = 0; i < table_.size(); ++i)
        if (table_[i].is_finite()) out.push_back(tuple_at(i));
    return out;
}

std::vector<std::size_t> CostFunction::effective_domain_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < table_.size(); ++i)
        if (table_[i].is_finite()) out.push_back(i);
    return out;
}

CostFunction CostFunction::crispified() const {
    CostFunction f = *this;
    for (Cost& c : f.table_)
        if (c.is_finite()) c = Cost(0);
    return f;
}

CostFunction CostFunction::transposed() const {
    if (arity_ != 2) throw StructuralError("transpose needs a binary cost function");
    CostFunction g = *this;
    for (int a = 0; a < domain_size_; ++a)
        for (int b = 0; b < domain_size_; ++b)
            g.table_[static_cast<std::size_t>(a * domain_size_ + b)] = at(b, a);
    return g;
}

CostFunction unary(int domain_size, std::vector<Cost> costs) {
    return CostFunction(domain_size, 1, std::move(costs));
}

CostFunction crisp_unary(int domain_size, std::uint32_t mask) {
    std::vector<Cost> costs(static_cast<std::size_t>(domain_size));
    for (int a = 0; a < domain_size; ++a) costs[static_cast<std::size_t>(a)] = (mask >> a) & 1U ? Cost(0) : Cost::infinity();
    return unary(domain_size, std::move(costs));
}

} // namespace vcsp
