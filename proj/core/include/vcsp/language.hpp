#ifndef VCSP_LANGUAGE_HPP
#define VCSP_LANGUAGE_HPP

#include "vcsp/cost_function.hpp"

#include <string_view>
#include <vector>

namespace vcsp {

/// Which unary cost functions the language implicitly contains.
///  - None: only the listed functions.
///  - Finite: every finite-valued unary (a conservative language).
///  - General: every unary, infinities allowed.
enum class UnaryClosure { None, Finite, General };

std::string_view to_string(UnaryClosure c);
UnaryClosure unary_closure_from_string(std::string_view s);

class Language {
public:
    Language() = default;
    Language(int domain_size, std::vector<CostFunction> functions, UnaryClosure closure = UnaryClosure::None);

    int domain_size() const noexcept { return domain_size_; }
    UnaryClosure unary_closure() const noexcept { return closure_; }
    bool is_conservative() const noexcept { return closure_ != UnaryClosure::None; }
    const std::vector<CostFunction>& functions() const noexcept { return functions_; }
    const CostFunction& function(std::size_t i) const;
    std::size_t size() const noexcept { return functions_.size(); }

    /// Copy with `f` appended; returns the new language and f's index via `index`.
    Language with_function(CostFunction f, std::size_t* index = nullptr) const;
    Language with_closure(UnaryClosure c) const;

    /// Whether the implicit unary closure contains `u` (a listed function is not consulted).
    bool closure_contains(const CostFunction& u) const;

    friend bool operator==(const Language&, const Language&) = default;

private:
    int domain_size_ = 2;
    std::vector<CostFunction> functions_;
    UnaryClosure closure_ = UnaryClosure::None;
};

struct Term {
    std::size_t fn = 0;
    std::vector<int> scope;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Sum-of-terms VCSP instance over variables 0..num_vars-1.
struct Instance {
    int num_vars = 0;
    std::vector<Term> terms;

    /// Throws StructuralError when an index or scope length is inconsistent with `lang`.
    void validate(const Language& lang) const;

    friend bool operator==(const Instance&, const Instance&) = default;
};

using Assignment = std::vector<Label>;

/// Exact objective value; Infinite iff some term's restriction leaves its effective domain.
Cost evaluate(const Instance& instance, const Language& lang, std::span<const Label> x);

} // namespace vcsp

#endif // VCSP_LANGUAGE_HPP
