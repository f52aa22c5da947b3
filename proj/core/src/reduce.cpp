#include "vcsp/reduce.hpp"

#include "vcsp/error.hpp"
#include "vcsp/express.hpp"

#include <algorithm>

namespace vcsp {

std::string_view to_string(DeriveMode m) {
    switch (m) {
    case DeriveMode::Feas: return "feas";
    case DeriveMode::MinHom: return "minhom";
    case DeriveMode::Bar: return "bar";
    }
    return "?";
}

DeriveMode derive_mode_from_string(std::string_view s) {
    if (s == "feas") return DeriveMode::Feas;
    if (s == "minhom") return DeriveMode::MinHom;
    if (s == "bar") return DeriveMode::Bar;
    throw ParseError("", "unknown mode '" + std::string(s) + "'");
}

Language derive_language(const Language& lang, DeriveMode mode) {
    if (mode == DeriveMode::Bar) return lang.with_closure(UnaryClosure::General);
    std::vector<CostFunction> fns;
    for (const auto& f : lang.functions()) fns.push_back(f.crispified());
    if (mode == DeriveMode::MinHom) return Language(lang.domain_size(), std::move(fns), UnaryClosure::Finite);
    // Feas of a finite unary is the zero unary, so only the general closure leaves a trace.
    const UnaryClosure closure = lang.unary_closure() == UnaryClosure::General ? UnaryClosure::General : UnaryClosure::None;
    return Language(lang.domain_size(), std::move(fns), closure);
}

namespace {

Rational max_finite_used(const Instance& instance, const Language& lang, bool unaries) {
    Rational m;
    std::vector<bool> seen(lang.size(), false);
    for (const Term& t : instance.terms) {
        if (seen[t.fn]) continue;
        const CostFunction& f = lang.function(t.fn);
        if (!unaries && f.arity() == 1) continue;
        seen[t.fn] = true;
        m = std::max(m, f.max_finite());
    }
    return m;
}

std::size_t intern(Language& lang, CostFunction f) {
    const auto& fns = lang.functions();
    auto it = std::find(fns.begin(), fns.end(), f);
    if (it != fns.end()) return static_cast<std::size_t>(it - fns.begin());
    std::size_t idx = 0;
    lang = lang.with_function(std::move(f), &idx);
    return idx;
}

} // namespace

CapReduction cap_reduce(const Instance& instance, const Language& lang) {
    instance.validate(lang);
    CapReduction r;
    r.language = lang;
    r.n = std::max<std::int64_t>(1, static_cast<std::int64_t>(instance.terms.size()));
    r.c = max_finite_used(instance, lang, true) + Rational(1);
    r.instance.num_vars = instance.num_vars;
    const Rational n(r.n);
    std::map<std::size_t, std::size_t> capped;
    for (const Term& t : instance.terms) {
        const CostFunction& f = lang.function(t.fn);
        if (f.arity() != 1 || f.is_finite_valued()) {
            r.instance.terms.push_back(t);
            continue;
        }
        auto it = capped.find(t.fn);
        if (it == capped.end()) {
            std::vector<Cost> costs;
            for (const Cost& c : f.table()) costs.emplace_back(c.is_finite() ? c.value() / n : r.c);
            it = capped.emplace(t.fn, intern(r.language, unary(lang.domain_size(), std::move(costs)))).first;
        }
        for (std::int64_t k = 0; k < r.n; ++k) r.instance.terms.push_back({it->second, t.scope});
    }
    return r;
}

Cost MinHomReduction::recover(const Cost& reduced) const {
    if (reduced.is_infinite()) return reduced;
    return Cost(Rational((reduced.value() / scale()).floor()));
}

MinHomReduction minhom_reduce(const Instance& instance, const Language& minhom,
                              const std::map<std::size_t, CostFunction>& originals) {
    instance.validate(minhom);
    const int d = minhom.domain_size();
    MinHomReduction r;
    r.language = Language(d, {}, minhom.unary_closure() == UnaryClosure::None ? UnaryClosure::None : UnaryClosure::Finite);
    r.instance.num_vars = instance.num_vars;

    std::int64_t non_unary = 0;
    Rational top;
    for (const Term& t : instance.terms) {
        const CostFunction& f = minhom.function(t.fn);
        if (f.arity() == 1) {
            for (const Cost& c : f.table())
                if (c.is_finite() && !c.value().is_integer())
                    throw CapabilityError("unary function " + std::to_string(t.fn) + " has non-integer cost " +
                                          c.to_string());
            continue;
        }
        ++non_unary;
        auto it = originals.find(t.fn);
        if (it == originals.end())
            throw StructuralError("no original function for non-unary function " + std::to_string(t.fn));
        if (it->second.domain_size() != d || it->second.arity() != f.arity() ||
            it->second.crispified() != f.crispified())
            throw StructuralError("original of function " + std::to_string(t.fn) + " has a different effective domain");
        top = std::max(top, it->second.max_finite());
    }
    r.n = std::max<std::int64_t>(1, non_unary);
    r.c = top + Rational(1);

    std::map<std::size_t, std::size_t> mapped;
    for (const Term& t : instance.terms) {
        const CostFunction& f = minhom.function(t.fn);
        auto it = mapped.find(t.fn);
        if (it == mapped.end()) {
            CostFunction g;
            if (f.arity() == 1) {
                std::vector<Cost> costs;
                for (const Cost& c : f.table()) costs.push_back(c.is_finite() ? Cost(c.value() * r.c) : c);
                g = unary(d, std::move(costs));
            } else {
                g = originals.at(t.fn);
            }
            it = mapped.emplace(t.fn, intern(r.language, std::move(g))).first;
        }
        const std::int64_t copies = f.arity() == 1 ? r.n : 1;
        for (std::int64_t k = 0; k < copies; ++k) r.instance.terms.push_back({it->second, t.scope});
    }
    return r;
}

MinHomReduction minhom_reduce(const Instance& instance, const Language& lang) {
    std::vector<CostFunction> fns;
    std::map<std::size_t, CostFunction> originals;
    for (std::size_t i = 0; i < lang.size(); ++i) {
        const CostFunction& f = lang.function(i);
        if (f.arity() == 1) {
            fns.push_back(f);
        } else {
            fns.push_back(f.crispified());
            originals.emplace(i, f);
        }
    }
    return minhom_reduce(instance, Language(lang.domain_size(), std::move(fns), UnaryClosure::Finite), originals);
}

BinaryDecomposition binary_decompose(const CostFunction& f) {
    const int m = f.arity();
    const int d = f.domain_size();
    if (m < 2) throw StructuralError("binary_decompose needs arity >= 2");
    BinaryDecomposition out;
    out.arity = m;
    for (int i = 0; i < m; ++i) {
        std::vector<Cost> rho(static_cast<std::size_t>(d), Cost::infinity());
        Tuple t(static_cast<std::size_t>(m), 0);
        for (std::size_t k = 0; k < f.size(); ++k, f.advance(t)) {
            Cost& slot = rho[static_cast<std::size_t>(t[static_cast<std::size_t>(i)])];
            if (f[k] < slot) slot = f[k];
        }
        out.unary.push_back(unary(d, std::move(rho)));
    }
    const std::vector<Pin> minimize(static_cast<std::size_t>(m - 2), pin::Minimize{});
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i != j) out.binary.emplace(std::make_pair(i, j), pin_project(f, i, j, minimize));

    out.exact = true;
    Tuple t(static_cast<std::size_t>(m), 0);
    for (std::size_t k = 0; k < f.size() && out.exact; ++k, f.advance(t)) {
        bool conj = true;
        for (int i = 0; i < m && conj; ++i)
            conj = out.unary[static_cast<std::size_t>(i)][static_cast<std::size_t>(t[static_cast<std::size_t>(i)])].is_finite();
        for (const auto& [ij, rho] : out.binary) {
            if (!conj) break;
            conj = rho.at(t[static_cast<std::size_t>(ij.first)], t[static_cast<std::size_t>(ij.second)]).is_finite();
        }
        out.exact = conj == f[k].is_finite();
    }
    return out;
}

} // namespace vcsp
