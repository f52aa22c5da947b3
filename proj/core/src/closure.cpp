#include "vcsp/closure.hpp"

#include "vcsp/error.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace vcsp {

std::string_view to_string(Provenance::Kind k) {
    switch (k) {
    case Provenance::Kind::Seed: return "seed";
    case Provenance::Kind::Zero: return "zero";
    case Provenance::Kind::Sum: return "sum";
    case Provenance::Kind::Compose: return "compose";
    case Provenance::Kind::Transpose: return "transpose";
    case Provenance::Kind::Restrict: return "restrict";
    }
    return "?";
}

std::optional<std::size_t> BinaryClosure::find(const CostFunction& table) const {
    for (std::size_t i = 0; i < members.size(); ++i)
        if (members[i].table == table) return i;
    return std::nullopt;
}

CostFunction normalize(const CostFunction& f, std::vector<Rational>* row, std::vector<Rational>* col) {
    if (f.arity() != 2) throw StructuralError("normalize needs a binary function");
    const int d = f.domain_size();
    std::vector<Cost> t(f.table().begin(), f.table().end());
    std::vector<Rational> r(static_cast<std::size_t>(d)), c(static_cast<std::size_t>(d));
    auto cell = [&](int x, int y) -> Cost& { return t[static_cast<std::size_t>(x * d + y)]; };
    for (int x = 0; x < d; ++x) {
        std::optional<Rational> lo;
        for (int y = 0; y < d; ++y)
            if (cell(x, y).is_finite() && (!lo || cell(x, y).value() < *lo)) lo = cell(x, y).value();
        if (!lo || lo->is_zero()) continue;
        r[static_cast<std::size_t>(x)] = *lo;
        for (int y = 0; y < d; ++y)
            if (cell(x, y).is_finite()) cell(x, y) = Cost(cell(x, y).value() - *lo);
    }
    for (int y = 0; y < d; ++y) {
        std::optional<Rational> lo;
        for (int x = 0; x < d; ++x)
            if (cell(x, y).is_finite() && (!lo || cell(x, y).value() < *lo)) lo = cell(x, y).value();
        if (!lo || lo->is_zero()) continue;
        c[static_cast<std::size_t>(y)] = *lo;
        for (int x = 0; x < d; ++x)
            if (cell(x, y).is_finite()) cell(x, y) = Cost(cell(x, y).value() - *lo);
    }
    if (row) *row = std::move(r);
    if (col) *col = std::move(c);
    return CostFunction(d, 2, std::move(t));
}

namespace {

std::vector<Rational> add(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

CostFunction restrict_side(const CostFunction& f, int side, std::uint32_t mask) {
    const int d = f.domain_size();
    std::vector<Cost> t(f.table().begin(), f.table().end());
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y) {
            int l = side == 0 ? x : y;
            if (!((mask >> l) & 1U)) t[static_cast<std::size_t>(x * d + y)] = Cost::infinity();
        }
    return CostFunction(d, 2, std::move(t));
}

class Builder {
public:
    Builder(const Language& lang, const ClosureBudget& budget) : lang_(lang) {
        out_.domain_size = lang.domain_size();
        out_.budget = budget;
        limit_ = std::uint64_t{1} << std::clamp(budget.magnitude_bits, 1, 62);
    }

    BinaryClosure run() {
        const int d = lang_.domain_size();
        if (d < 2) throw StructuralError("closure needs |D| >= 2");
        if (d > 4) throw CapabilityError("binary closure supports |D| <= 4");
        seed();
        std::size_t frontier = 0;
        for (int round = 1; round <= out_.budget.rounds && !out_.budget_exhausted; ++round) {
            const std::size_t end = out_.members.size();
            if (frontier == end) break;
            round_ = round;
            combine(frontier, end);
            if (out_.budget_exhausted) break;
            out_.rounds_completed = round;
            if (out_.members.size() == end) {
                out_.saturated = !out_.dropped_oversized;
                break;
            }
            frontier = end;
        }
        return std::move(out_);
    }

private:
    struct Candidate {
        CostFunction raw;
        Provenance provenance;
        std::vector<Rational> row, col; // offsets of raw
        bool crisp = false, finite_unary = false;
        std::size_t vars = 2;
    };

    std::vector<Rational> zeros() const { return std::vector<Rational>(static_cast<std::size_t>(lang_.domain_size())); }

    bool oversized(const CostFunction& t) const {
        for (const Cost& c : t.table())
            if (c.is_finite() && c.value().magnitude() > limit_)
                return true;
        return false;
    }

    // Returns false once the size budget is hit.
    bool offer(Candidate cand) {
        if (out_.budget_exhausted) return false;
        if (cand.raw.effective_domain_indices().empty()) return true;
        ClosureMember m;
        try {
            std::vector<Rational> r, c;
            m.table = normalize(cand.raw, &r, &c);
            if (oversized(m.table)) {
                out_.dropped_oversized = true;
                return true;
            }
            if (index_.count(key(m.table))) return true;
            m.row_offset = add(cand.row, r);
            m.col_offset = add(cand.col, c);
        } catch (const OverflowError&) {
            out_.dropped_oversized = true;
            return true;
        }
        CostFunction tt = m.table.transposed();
        const bool symmetric = tt == m.table;
        const std::size_t need = (symmetric || index_.count(key(tt))) ? 1 : 2;
        if (out_.members.size() + need > out_.budget.size) {
            out_.budget_exhausted = true;
            return false;
        }
        m.provenance = std::move(cand.provenance);
        m.uses_crisp = cand.crisp;
        m.uses_finite_unary = cand.finite_unary;
        m.round = round_;
        m.gadget_vars = cand.vars;
        const std::size_t idx = push(std::move(m));
        if (need == 2) {
            const ClosureMember& src = out_.members[idx];
            ClosureMember t;
            t.table = std::move(tt);
            t.provenance.kind = Provenance::Kind::Transpose;
            t.provenance.left = idx;
            t.row_offset = src.col_offset;
            t.col_offset = src.row_offset;
            t.uses_crisp = src.uses_crisp;
            t.uses_finite_unary = src.uses_finite_unary;
            t.round = round_;
            t.gadget_vars = src.gadget_vars;
            push(std::move(t));
        }
        return true;
    }

    static std::vector<Cost> key(const CostFunction& f) { return {f.table().begin(), f.table().end()}; }

    std::size_t push(ClosureMember m) {
        const std::size_t idx = out_.members.size();
        index_.emplace(key(m.table), idx);
        out_.members.push_back(std::move(m));
        return idx;
    }

    void seed() {
        const int d = lang_.domain_size();
        const std::uint32_t full = (1U << d) - 1;
        {
            Candidate z{CostFunction::zero(d, 2), {}, zeros(), zeros()};
            z.provenance.kind = Provenance::Kind::Zero;
            if (!offer(std::move(z))) return;
        }
        for (std::size_t fi = 0; fi < lang_.size(); ++fi) {
            const CostFunction& f = lang_.function(fi);
            const int m = f.arity();
            if (m == 1) {
                Candidate c{CostFunction::tabulate(d, 2, [&](const Tuple& t) { return f.at(std::span<const Label>(&t[0], 1)); }),
                            {}, zeros(), zeros()};
                c.provenance.kind = Provenance::Kind::Seed;
                c.provenance.function = fi;
                c.provenance.x_coordinate = 0;
                if (!offer(std::move(c))) return;
                continue;
            }
            // Masks per pinned coordinate: full first, then the proper subsets in increasing order.
            std::vector<std::uint32_t> order{full};
            for (std::uint32_t s = 1; s < full; ++s) order.push_back(s);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) {
                    if (i == j) continue;
                    std::vector<std::size_t> pick(static_cast<std::size_t>(m - 2), 0);
                    while (true) {
                        std::vector<Pin> pins;
                        std::vector<std::uint32_t> masks;
                        bool crisp = false;
                        for (std::size_t k : pick) {
                            std::uint32_t s = order[k];
                            masks.push_back(s);
                            if (s == full)
                                pins.emplace_back(pin::Minimize{});
                            else {
                                pins.emplace_back(pin::Subset{s});
                                crisp = true;
                            }
                        }
                        Candidate c{pin_project(f, i, j, pins), {}, zeros(), zeros()};
                        c.provenance.kind = Provenance::Kind::Seed;
                        c.provenance.function = fi;
                        c.provenance.x_coordinate = i;
                        c.provenance.y_coordinate = j;
                        c.provenance.pin_masks = std::move(masks);
                        c.crisp = crisp;
                        c.vars = static_cast<std::size_t>(m);
                        if (!offer(std::move(c))) return;
                        std::size_t k = pick.size();
                        while (k > 0 && ++pick[k - 1] == order.size()) pick[--k] = 0;
                        if (k == 0) break;
                    }
                }
        }
    }

    void combine(std::size_t frontier, std::size_t end) {
        const int d = lang_.domain_size();
        const std::uint32_t full = (1U << d) - 1;
        for (std::size_t i = frontier; i < end; ++i)
            for (int side = 0; side < 2; ++side)
                for (std::uint32_t mask = 1; mask < full; ++mask) {
                    const ClosureMember& a = out_.members[i];
                    Candidate c{restrict_side(a.table, side, mask), {}, a.row_offset, a.col_offset, true,
                                a.uses_finite_unary, a.gadget_vars};
                    c.provenance.kind = Provenance::Kind::Restrict;
                    c.provenance.left = i;
                    c.provenance.side = side;
                    c.provenance.mask = mask;
                    if (!offer(std::move(c))) return;
                }
        for (std::size_t j = frontier; j < end; ++j)
            for (std::size_t i = 0; i <= j; ++i) {
                const ClosureMember& a = out_.members[i];
                const ClosureMember& b = out_.members[j];
                Candidate c;
                try {
                    c = Candidate{pointwise_sum(a.table, b.table), {}, add(a.row_offset, b.row_offset),
                                  add(a.col_offset, b.col_offset), a.uses_crisp || b.uses_crisp,
                                  a.uses_finite_unary || b.uses_finite_unary, a.gadget_vars + b.gadget_vars - 2};
                } catch (const OverflowError&) {
                    out_.dropped_oversized = true;
                    continue;
                }
                c.provenance.kind = Provenance::Kind::Sum;
                c.provenance.left = i;
                c.provenance.right = j;
                if (!offer(std::move(c))) return;
            }
        for (std::size_t j = frontier; j < end; ++j)
            for (std::size_t i = 0; i < end; ++i) {
                if (!compose(i, j)) return;
                if (i < frontier && !compose(j, i)) return;
            }
    }

    bool compose(std::size_t i, std::size_t j) {
        const ClosureMember& a = out_.members[i];
        const ClosureMember& b = out_.members[j];
        Candidate c;
        try {
            // The gadget adds w(z) = K - Ca(z) - Rb(z) >= 0 on the middle variable so that
            // the inner offsets cancel; K then shifts every entry.
            Rational k;
            bool nonconstant = false;
            for (std::size_t z = 0; z < a.col_offset.size(); ++z) {
                Rational s = a.col_offset[z] + b.row_offset[z];
                if (z > 0 && s != a.col_offset[0] + b.row_offset[0]) nonconstant = true;
                if (s > k) k = s;
            }
            std::vector<Rational> row = a.row_offset;
            for (Rational& r : row) r += k;
            c = Candidate{min_compose(a.table, b.table), {}, std::move(row), b.col_offset,
                          a.uses_crisp || b.uses_crisp, a.uses_finite_unary || b.uses_finite_unary || nonconstant,
                          a.gadget_vars + b.gadget_vars - 1};
        } catch (const OverflowError&) {
            out_.dropped_oversized = true;
            return true;
        }
        c.provenance.kind = Provenance::Kind::Compose;
        c.provenance.left = i;
        c.provenance.right = j;
        return offer(std::move(c));
    }

    const Language& lang_;
    BinaryClosure out_;
    std::map<std::vector<Cost>, std::size_t> index_;
    std::uint64_t limit_ = 0;
    int round_ = 0;
};

// Appends gadget terms for a member between variables x and y.
class GadgetWriter {
public:
    GadgetWriter(const BinaryClosure& closure, const Language& lang, std::size_t max_vars)
        : closure_(closure), max_vars_(max_vars) {
        g_.language = Language(lang.domain_size(), lang.functions(), lang.unary_closure());
        g_.instance.num_vars = 2;
        g_.exposed = {0, 1};
    }

    Gadget finish() { return std::move(g_); }

    void emit(std::size_t idx, int x, int y) {
        const ClosureMember& m = closure_.members.at(idx);
        const Provenance& p = m.provenance;
        const int d = g_.language.domain_size();
        const std::uint32_t full = (1U << d) - 1;
        switch (p.kind) {
        case Provenance::Kind::Zero: return;
        case Provenance::Kind::Seed: {
            const int arity = g_.language.function(p.function).arity();
            std::vector<int> scope(static_cast<std::size_t>(arity));
            std::size_t k = 0;
            for (int c = 0; c < arity; ++c) {
                if (c == p.x_coordinate)
                    scope[static_cast<std::size_t>(c)] = x;
                else if (c == p.y_coordinate)
                    scope[static_cast<std::size_t>(c)] = y;
                else {
                    int v = fresh();
                    scope[static_cast<std::size_t>(c)] = v;
                    std::uint32_t mask = p.pin_masks.at(k++);
                    if (mask != full) add_unary(crisp_unary(d, mask), v);
                }
            }
            g_.instance.terms.push_back({p.function, std::move(scope)});
            return;
        }
        case Provenance::Kind::Sum:
            emit(p.left, x, y);
            emit(p.right, x, y);
            return;
        case Provenance::Kind::Transpose: emit(p.left, y, x); return;
        case Provenance::Kind::Restrict:
            emit(p.left, x, y);
            add_unary(crisp_unary(d, p.mask), p.side == 0 ? x : y);
            return;
        case Provenance::Kind::Compose: {
            const ClosureMember& a = closure_.members.at(p.left);
            const ClosureMember& b = closure_.members.at(p.right);
            int z = fresh();
            emit(p.left, x, z);
            emit(p.right, z, y);
            Rational k;
            for (std::size_t i = 0; i < a.col_offset.size(); ++i) k = std::max(k, a.col_offset[i] + b.row_offset[i]);
            std::vector<Cost> w;
            bool nonzero = false;
            for (std::size_t i = 0; i < a.col_offset.size(); ++i) {
                Rational v = k - a.col_offset[i] - b.row_offset[i];
                nonzero = nonzero || !v.is_zero();
                w.emplace_back(v);
            }
            if (nonzero) add_unary(unary(d, std::move(w)), z);
            return;
        }
        }
    }

private:
    int fresh() {
        if (static_cast<std::size_t>(g_.instance.num_vars) >= max_vars_)
            throw CapabilityError("audit gadget exceeds " + std::to_string(max_vars_) + " variables");
        return g_.instance.num_vars++;
    }

    void add_unary(CostFunction u, int v) {
        std::size_t fn;
        auto it = std::find(g_.language.functions().begin(), g_.language.functions().end(), u);
        if (it != g_.language.functions().end())
            fn = static_cast<std::size_t>(it - g_.language.functions().begin());
        else
            g_.language = g_.language.with_function(std::move(u), &fn);
        g_.instance.terms.push_back({fn, {v}});
    }

    const BinaryClosure& closure_;
    std::size_t max_vars_;
    Gadget g_;
};

} // namespace

BinaryClosure binary_closure(const Language& lang, const ClosureBudget& budget) {
    if (budget.rounds < 0) throw StructuralError("budget rounds must be non-negative");
    if (budget.size == 0) throw StructuralError("budget size must be positive");
    return Builder(lang, budget).run();
}

Gadget audit_gadget(const BinaryClosure& closure, std::size_t member, const Language& lang, std::size_t max_vars) {
    if (member >= closure.members.size()) throw StructuralError("closure member index out of range");
    if (closure.members[member].gadget_vars > max_vars)
        throw CapabilityError("audit gadget exceeds " + std::to_string(max_vars) + " variables");
    GadgetWriter w(closure, lang, max_vars);
    w.emit(member, 0, 1);
    return w.finish();
}

bool audit_member(const BinaryClosure& closure, std::size_t member, const Language& lang, std::string* why) {
    const ClosureMember& m = closure.members.at(member);
    CostFunction got = express_gadget(audit_gadget(closure, member, lang));
    const int d = closure.domain_size;
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y) {
            const Cost& t = m.table.at(x, y);
            const Cost& g = got.at(x, y);
            bool ok = t.is_infinite()
                          ? g.is_infinite()
                          : g.is_finite() && g.value() == t.value() + m.row_offset[static_cast<std::size_t>(x)] +
                                                              m.col_offset[static_cast<std::size_t>(y)];
            if (!ok) {
                if (why)
                    *why = "entry (" + std::to_string(x) + "," + std::to_string(y) + "): gadget gives " + g.to_string() +
                           ", member " + t.to_string();
                return false;
            }
        }
    return true;
}

} // namespace vcsp
