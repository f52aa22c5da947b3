#include "vcsp/language.hpp"

#include "vcsp/error.hpp"

#include <string>

namespace vcsp {

std::string_view to_string(UnaryClosure c) {
    switch (c) {
    case UnaryClosure::None: return "none";
    case UnaryClosure::Finite: return "finite";
    case UnaryClosure::General: return "general";
    }
    return "none";
}

UnaryClosure unary_closure_from_string(std::string_view s) {
    if (s == "none") return UnaryClosure::None;
    if (s == "finite") return UnaryClosure::Finite;
    if (s == "general") return UnaryClosure::General;
    throw ParseError("", "unknown unary_closure '" + std::string(s) + "'");
}

Language::Language(int domain_size, std::vector<CostFunction> functions, UnaryClosure closure)
    : domain_size_(domain_size), functions_(std::move(functions)), closure_(closure) {
    if (domain_size_ < 2) throw StructuralError("domain size must be at least 2");
    for (std::size_t i = 0; i < functions_.size(); ++i)
        if (functions_[i].domain_size() != domain_size_)
            throw StructuralError("function " + std::to_string(i) + " has domain size " +
                                  std::to_string(functions_[i].domain_size()) + ", language has " +
                                  std::to_string(domain_size_));
}

const CostFunction& Language::function(std::size_t i) const {
    if (i >= functions_.size()) throw StructuralError("function index " + std::to_string(i) + " out of range");
    return functions_[i];
}

Language Language::with_function(CostFunction f, std::size_t* index) const {
    auto fns = functions_;
    fns.push_back(std::move(f));
    if (index) *index = fns.size() - 1;
    return Language(domain_size_, std::move(fns), closure_);
}

Language Language::with_closure(UnaryClosure c) const { return Language(domain_size_, functions_, c); }

bool Language::closure_contains(const CostFunction& u) const {
    if (u.arity() != 1 || u.domain_size() != domain_size_) return false;
    switch (closure_) {
    case UnaryClosure::None: return false;
    case UnaryClosure::Finite: return u.is_finite_valued();
    case UnaryClosure::General: return true;
    }
    return false;
}

void Instance::validate(const Language& lang) const {
    if (num_vars < 0) throw StructuralError("negative variable count");
    for (std::size_t t = 0; t < terms.size(); ++t) {
        const Term& term = terms[t];
        const CostFunction& f = lang.function(term.fn);
        if (term.scope.size() != static_cast<std::size_t>(f.arity()))
            throw StructuralError("term " + std::to_string(t) + " has scope length " +
                                  std::to_string(term.scope.size()) + " but function arity " +
                                  std::to_string(f.arity()));
        for (int v : term.scope)
            if (v < 0 || v >= num_vars)
                throw StructuralError("term " + std::to_string(t) + " references variable " + std::to_string(v));
    }
}

Cost evaluate(const Instance& instance, const Language& lang, std::span<const Label> x) {
    if (x.size() != static_cast<std::size_t>(instance.num_vars))
        throw StructuralError("assignment length " + std::to_string(x.size()) + " for " +
                              std::to_string(instance.num_vars) + " variables");
    Cost total;
    Tuple args;
    for (const Term& term : instance.terms) {
        const CostFunction& f = lang.function(term.fn);
        args.clear();
        for (int v : term.scope) {
            if (v < 0 || v >= instance.num_vars)
                throw StructuralError("scope references variable " + std::to_string(v));
            args.push_back(x[static_cast<std::size_t>(v)]);
        }
        total += f.at(args);
        if (total.is_infinite()) return total;
    }
    return total;
}

} // namespace vcsp
