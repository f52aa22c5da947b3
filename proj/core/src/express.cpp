#include "vcsp/express.hpp"

#include "vcsp/error.hpp"

#include <algorithm>
#include <string>

namespace vcsp {

std::vector<int> Gadget::auxiliary() const {
    std::vector<int> aux;
    for (int v = 0; v < instance.num_vars; ++v)
        if (std::find(exposed.begin(), exposed.end(), v) == exposed.end()) aux.push_back(v);
    return aux;
}

void Gadget::validate() const {
    instance.validate(language);
    for (std::size_t i = 0; i < exposed.size(); ++i) {
        if (exposed[i] < 0 || exposed[i] >= instance.num_vars)
            throw StructuralError("exposed variable " + std::to_string(exposed[i]) + " out of range");
        for (std::size_t j = 0; j < i; ++j)
            if (exposed[i] == exposed[j]) throw StructuralError("exposed variables must be distinct");
    }
    if (exposed.empty()) throw StructuralError("a gadget needs at least one exposed variable");
}

CostFunction express_gadget(const Gadget& g) {
    g.validate();
    const int d = g.language.domain_size();
    const int n = g.instance.num_vars;
    const std::size_t total = checked_power(d, n, kMaxGadgetEvaluations);
    CostFunction out = CostFunction::tabulate(d, static_cast<int>(g.exposed.size()),
                                              [](const Tuple&) { return Cost::infinity(); });
    std::vector<Cost> best(out.table().begin(), out.table().end());

    struct Bound {
        const CostFunction* f;
        const std::vector<int>* scope;
    };
    std::vector<Bound> terms;
    for (const Term& t : g.instance.terms) terms.push_back({&g.language.function(t.fn), &t.scope});

    Assignment x(static_cast<std::size_t>(n), 0);
    for (std::size_t it = 0; it < total; ++it) {
        Cost c;
        for (const Bound& b : terms) {
            std::size_t idx = 0;
            for (int v : *b.scope) idx = idx * static_cast<std::size_t>(d) + static_cast<std::size_t>(x[static_cast<std::size_t>(v)]);
            c += (*b.f)[idx];
            if (c.is_infinite()) break;
        }
        std::size_t oi = 0;
        for (int v : g.exposed) oi = oi * static_cast<std::size_t>(d) + static_cast<std::size_t>(x[static_cast<std::size_t>(v)]);
        if (c < best[oi]) best[oi] = c;
        for (int k = n - 1; k >= 0; --k) {
            if (++x[static_cast<std::size_t>(k)] < d) break;
            x[static_cast<std::size_t>(k)] = 0;
        }
    }
    return CostFunction(d, static_cast<int>(g.exposed.size()), std::move(best));
}

CostFunction express_gadget(const Instance& instance, const Language& lang, const std::vector<int>& exposed) {
    return express_gadget(Gadget{lang, instance, exposed});
}

CostFunction min_compose(const CostFunction& f, const CostFunction& g) {
    if (f.arity() != 2 || g.arity() != 2) throw StructuralError("min_compose needs binary functions");
    if (f.domain_size() != g.domain_size()) throw StructuralError("min_compose domain size mismatch");
    const int d = f.domain_size();
    std::vector<Cost> h(static_cast<std::size_t>(d * d), Cost::infinity());
    for (Label a = 0; a < d; ++a)
        for (Label mid = 0; mid < d; ++mid) {
            const Cost& left = f.at(a, mid);
            if (left.is_infinite()) continue;
            for (Label b = 0; b < d; ++b) {
                Cost c = left + g.at(mid, b);
                Cost& slot = h[static_cast<std::size_t>(a * d + b)];
                if (c < slot) slot = c;
            }
        }
    return CostFunction(d, 2, std::move(h));
}

CostFunction pointwise_sum(const CostFunction& f, const CostFunction& g) {
    if (f.arity() != g.arity() || f.domain_size() != g.domain_size())
        throw StructuralError("pointwise_sum needs functions of equal shape");
    std::vector<Cost> t(f.size());
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = f[i] + g[i];
    return CostFunction(f.domain_size(), f.arity(), std::move(t));
}

CostFunction pin_project(const CostFunction& f, int keep_first, int keep_second, const std::vector<Pin>& pins) {
    const int m = f.arity();
    const int d = f.domain_size();
    if (keep_first < 0 || keep_first >= m || keep_second < 0 || keep_second >= m || keep_first == keep_second)
        throw StructuralError("pin_project needs two distinct coordinates");
    if (pins.size() != static_cast<std::size_t>(m - 2))
        throw StructuralError("pin_project needs one pin per remaining coordinate");
    std::vector<const Pin*> pin_of(static_cast<std::size_t>(m), nullptr);
    {
        std::size_t k = 0;
        for (int c = 0; c < m; ++c)
            if (c != keep_first && c != keep_second) pin_of[static_cast<std::size_t>(c)] = &pins[k++];
    }
    for (const Pin& p : pins) {
        if (auto* fx = std::get_if<pin::Fixed>(&p); fx && (fx->label < 0 || fx->label >= d))
            throw StructuralError("pinned label out of range");
        if (auto* pe = std::get_if<pin::Penalty>(&p)) {
            if (pe->label < 0 || pe->label >= d) throw StructuralError("pinned label out of range");
            if (pe->penalty.is_negative()) throw StructuralError("penalty must be non-negative");
        }
    }

    std::vector<Cost> h(static_cast<std::size_t>(d * d), Cost::infinity());
    Tuple t(static_cast<std::size_t>(m), 0);
    for (std::size_t i = 0; i < f.size(); ++i, f.advance(t)) {
        Cost c = f[i];
        if (c.is_infinite()) continue;
        bool allowed = true;
        for (int k = 0; k < m && allowed; ++k) {
            const Pin* p = pin_of[static_cast<std::size_t>(k)];
            if (!p) continue;
            Label l = t[static_cast<std::size_t>(k)];
            if (auto* fx = std::get_if<pin::Fixed>(p))
                allowed = l == fx->label;
            else if (auto* s = std::get_if<pin::Subset>(p))
                allowed = (s->mask >> l) & 1U;
            else if (auto* pe = std::get_if<pin::Penalty>(p); pe && l == pe->label)
                c += Cost(pe->penalty);
        }
        if (!allowed) continue;
        Cost& slot = h[static_cast<std::size_t>(t[static_cast<std::size_t>(keep_first)] * d + t[static_cast<std::size_t>(keep_second)])];
        if (c < slot) slot = c;
    }
    return CostFunction(d, 2, std::move(h));
}

} // namespace vcsp
