#include "vcsp/ops.hpp"

#include "vcsp/error.hpp"

#include <algorithm>
#include <sstream>

namespace vcsp {

Operation::Operation(int domain_size, int arity, std::vector<Label> table)
    : domain_size_(domain_size), arity_(arity), table_(std::move(table)) {
    if (domain_size_ < 2) throw StructuralError("domain size must be at least 2");
    if (arity_ < 1 || arity_ > 3) throw StructuralError("operations of arity 1..3 only");
    std::size_t n = 1;
    for (int i = 0; i < arity_; ++i) n *= static_cast<std::size_t>(domain_size_);
    if (table_.size() != n)
        throw StructuralError("operation table has " + std::to_string(table_.size()) + " entries, expected " +
                              std::to_string(n));
    for (Label l : table_)
        if (l < 0 || l >= domain_size_) throw StructuralError("operation value " + std::to_string(l) + " out of range");
}

Label Operation::apply(std::span<const Label> args) const {
    if (args.size() != static_cast<std::size_t>(arity_)) throw StructuralError("operation arity mismatch");
    std::size_t idx = 0;
    for (Label a : args) idx = idx * static_cast<std::size_t>(domain_size_) + static_cast<std::size_t>(a);
    return table_[idx];
}

namespace ops {

BinaryOp min(int d) {
    return Operation::tabulate(d, 2, [](const Tuple& t) { return std::min(t[0], t[1]); });
}
BinaryOp max(int d) {
    return Operation::tabulate(d, 2, [](const Tuple& t) { return std::max(t[0], t[1]); });
}
BinaryOp first(int d) { return projection(d, 2, 0); }
BinaryOp second(int d) { return projection(d, 2, 1); }
TernaryOp majority(int d) {
    return Operation::tabulate(d, 3, [](const Tuple& t) {
        if (t[1] == t[2]) return t[1];
        return t[0];
    });
}
TernaryOp parity(int d) {
    return Operation::tabulate(d, 3, [d](const Tuple& t) { return (t[0] + t[1] + t[2]) % d; });
}
Operation projection(int d, int arity, int coordinate) {
    if (coordinate < 0 || coordinate >= arity) throw StructuralError("projection coordinate out of range");
    return Operation::tabulate(d, arity, [coordinate](const Tuple& t) { return t[static_cast<std::size_t>(coordinate)]; });
}

} // namespace ops

OpProperties op_properties(const Operation& op) {
    const int d = op.domain_size();
    OpProperties p;
    p.conservative = true;
    p.idempotent = true;
    if (op.arity() == 2) {
        p.commutative = true;
        for (Label a = 0; a < d; ++a)
            for (Label b = 0; b < d; ++b) {
                Label v = op(a, b);
                if (v != a && v != b) p.conservative = false;
                if (v != op(b, a)) p.commutative = false;
                if (a == b && v != a) p.idempotent = false;
            }
        return p;
    }
    if (op.arity() == 3) {
        p.majority = true;
        p.minority = true;
        for (Label a = 0; a < d; ++a)
            for (Label b = 0; b < d; ++b)
                for (Label c = 0; c < d; ++c) {
                    Label v = op(a, b, c);
                    if (v != a && v != b && v != c) p.conservative = false;
                    if (a == b && b == c) {
                        if (v != a) p.idempotent = false;
                        continue;
                    }
                    if (a != b && b != c && a != c) continue;
                    Label maj = (a == b || a == c) ? a : b;
                    Label mnr = (a == b) ? c : (a == c ? b : a);
                    if (v != maj) p.majority = false;
                    if (v != mnr) p.minority = false;
                }
        return p;
    }
    for (Label a = 0; a < d; ++a)
        if (op.table()[static_cast<std::size_t>(a)] != a) p.idempotent = false;
    return p;
}

LabelPair canonical_pair(Label a, Label b) { return a < b ? LabelPair{a, b} : LabelPair{b, a}; }

bool contains_pair(const PairSet& s, Label a, Label b) { return s.count(canonical_pair(a, b)) != 0; }

PairSet all_pairs(int domain_size) {
    PairSet s;
    for (Label a = 0; a < domain_size; ++a)
        for (Label b = a + 1; b < domain_size; ++b) s.insert({a, b});
    return s;
}

PairSet complement(const PairSet& s, int domain_size) {
    PairSet out;
    for (const auto& p : all_pairs(domain_size))
        if (!s.count(p)) out.insert(p);
    return out;
}

namespace {

std::string tuple_str(const Tuple& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(t[i]);
    }
    return s + ")";
}

void require_domain(const Operation& op, int d) {
    if (op.domain_size() != d)
        throw StructuralError("operation on domain size " + std::to_string(op.domain_size()) +
                              " checked against domain size " + std::to_string(d));
}

// Enumerates all k-tuples of dom-f tuples in lexicographic order and applies `ops`
// component-wise. With `with_costs`, compares summed costs (k outputs vs k inputs);
// otherwise checks that each image stays inside dom f.
MmReport check_family(const std::vector<const Operation*>& ops, int k, const CostFunction& f,
                      std::optional<std::size_t> fi, bool with_costs) {
    const int d = f.domain_size();
    for (const Operation* op : ops) require_domain(*op, d);
    const std::vector<std::size_t> dom = f.effective_domain_indices();
    if (dom.empty()) return {};
    const std::size_t m = static_cast<std::size_t>(f.arity());
    std::vector<Tuple> tuples;
    tuples.reserve(dom.size());
    for (std::size_t idx : dom) tuples.push_back(f.tuple_at(idx));

    std::vector<std::size_t> pick(static_cast<std::size_t>(k), 0);
    std::vector<std::size_t> out_index(ops.size());
    const std::size_t n = dom.size();
    while (true) {
        std::fill(out_index.begin(), out_index.end(), 0);
        for (std::size_t i = 0; i < m; ++i) {
            std::size_t arg = 0;
            for (int j = 0; j < k; ++j)
                arg = arg * static_cast<std::size_t>(d) + static_cast<std::size_t>(tuples[pick[static_cast<std::size_t>(j)]][i]);
            for (std::size_t o = 0; o < ops.size(); ++o)
                out_index[o] = out_index[o] * static_cast<std::size_t>(d) + static_cast<std::size_t>(ops[o]->table()[arg]);
        }
        bool bad = false;
        Cost lhs, rhs;
        if (with_costs) {
            for (std::size_t o = 0; o < ops.size(); ++o) lhs += f[out_index[o]];
            for (int j = 0; j < k; ++j) rhs += f[dom[pick[static_cast<std::size_t>(j)]]];
            bad = lhs > rhs;
        } else {
            bad = f[out_index[0]].is_infinite();
        }
        if (bad) {
            Violation v;
            v.source = Violation::Source::Function;
            v.function = fi;
            for (int j = 0; j < k; ++j) v.inputs.push_back(tuples[pick[static_cast<std::size_t>(j)]]);
            for (std::size_t o = 0; o < ops.size(); ++o) v.outputs.push_back(f.tuple_at(out_index[o]));
            if (with_costs) {
                v.lhs = lhs;
                v.rhs = rhs;
            }
            return MmReport::fail(std::move(v));
        }
        int j = k - 1;
        for (; j >= 0; --j) {
            if (++pick[static_cast<std::size_t>(j)] < n) break;
            pick[static_cast<std::size_t>(j)] = 0;
        }
        if (j < 0) break;
    }
    return {};
}

// Every finite-valued unary passes iff the output multiset equals the input multiset
// on each D^k tuple; a failing tuple yields the indicator unary of an over-produced label.
MmReport check_unary_multisets(const std::vector<const Operation*>& ops, int k, int d) {
    Tuple args(static_cast<std::size_t>(k), 0);
    std::vector<int> count(static_cast<std::size_t>(d));
    while (true) {
        std::fill(count.begin(), count.end(), 0);
        for (Label a : args) --count[static_cast<std::size_t>(a)];
        Tuple outs;
        for (const Operation* op : ops) {
            Label v = op->apply(args);
            outs.push_back(v);
            ++count[static_cast<std::size_t>(v)];
        }
        for (Label l = 0; l < d; ++l) {
            if (count[static_cast<std::size_t>(l)] <= 0) continue;
            Violation v;
            v.source = Violation::Source::UnaryProbe;
            for (Label a : args) v.inputs.push_back({a});
            for (Label o : outs) v.outputs.push_back({o});
            std::int64_t in = 0, out = 0;
            for (Label a : args) in += a == l;
            for (Label o : outs) out += o == l;
            v.lhs = Cost(out);
            v.rhs = Cost(in);
            v.detail = "unary probe u(z) = [z = " + std::to_string(l) + "]";
            return MmReport::fail(std::move(v));
        }
        int j = k - 1;
        for (; j >= 0; --j) {
            if (++args[static_cast<std::size_t>(j)] < d) break;
            args[static_cast<std::size_t>(j)] = 0;
        }
        if (j < 0) break;
    }
    MmReport r;
    r.notes.push_back("implicit unaries: component-wise multisets are preserved on every tuple, so every unary satisfies the inequality");
    return r;
}

MmReport check_language(const std::vector<const Operation*>& ops, int k, const Language& lang, bool with_costs) {
    for (const Operation* op : ops) require_domain(*op, lang.domain_size());
    for (std::size_t i = 0; i < lang.size(); ++i) {
        MmReport r = check_family(ops, k, lang.function(i), i, with_costs);
        if (!r.holds) return r;
    }
    if (lang.unary_closure() == UnaryClosure::None) return {};
    if (with_costs) return check_unary_multisets(ops, k, lang.domain_size());
    if (lang.unary_closure() == UnaryClosure::Finite) {
        MmReport r;
        r.notes.push_back("implicit finite-valued unaries have full effective domain; nothing to check");
        return r;
    }
    // General unaries include every crisp unary, so the operation must be conservative.
    const Operation& op = *ops.front();
    Tuple args(static_cast<std::size_t>(k), 0);
    while (true) {
        Label v = op.apply(args);
        if (std::find(args.begin(), args.end(), v) == args.end()) {
            Violation viol;
            viol.source = Violation::Source::UnaryProbe;
            for (Label a : args) viol.inputs.push_back({a});
            viol.outputs.push_back({v});
            viol.detail = "crisp unary with effective domain {arguments} is not preserved";
            return MmReport::fail(std::move(viol));
        }
        int j = k - 1;
        for (; j >= 0; --j) {
            if (++args[static_cast<std::size_t>(j)] < lang.domain_size()) break;
            args[static_cast<std::size_t>(j)] = 0;
        }
        if (j < 0) break;
    }
    MmReport r;
    r.notes.push_back("implicit general unaries: operation is conservative, so every effective domain is preserved");
    return r;
}

} // namespace

std::string describe(const Violation& v) {
    std::ostringstream os;
    switch (v.source) {
    case Violation::Source::Function: os << "function " << (v.function ? std::to_string(*v.function) : "?"); break;
    case Violation::Source::UnaryProbe: os << "implicit unary"; break;
    case Violation::Source::Structure: os << "operation structure"; break;
    }
    if (!v.inputs.empty()) {
        os << ": inputs";
        for (const auto& t : v.inputs) os << " " << tuple_str(t);
    }
    if (!v.outputs.empty()) {
        os << " -> outputs";
        for (const auto& t : v.outputs) os << " " << tuple_str(t);
    }
    if (v.lhs && v.rhs) os << "; " << v.lhs->to_string() << " > " << v.rhs->to_string();
    if (!v.detail.empty()) os << "; " << v.detail;
    return os.str();
}

MmReport check_multimorphism(const OpPair& pair, const Language& lang) {
    return check_language({&pair.meet, &pair.join}, 2, lang, true);
}

MmReport check_multimorphism(const OpTriple& triple, const Language& lang) {
    return check_language({&triple.mj1, &triple.mj2, &triple.mn3}, 3, lang, true);
}

MmReport check_polymorphism(const Operation& op, const Language& lang) {
    return check_language({&op}, op.arity(), lang, false);
}

MmReport check_multimorphism(const OpPair& pair, const CostFunction& f) {
    return check_family({&pair.meet, &pair.join}, 2, f, std::nullopt, true);
}

MmReport check_multimorphism(const OpTriple& triple, const CostFunction& f) {
    return check_family({&triple.mj1, &triple.mj2, &triple.mn3}, 3, f, std::nullopt, true);
}

MmReport check_structure(const OpPair& pair, const PairSet& m_set) {
    const int d = pair.meet.domain_size();
    require_domain(pair.join, d);
    for (Label a = 0; a < d; ++a)
        for (Label b = 0; b < d; ++b) {
            if (a == b) continue;
            Label lo = pair.meet(a, b), hi = pair.join(a, b);
            auto fail = [&](std::string what) {
                Violation v;
                v.source = Violation::Source::Structure;
                v.inputs = {{a}, {b}};
                v.outputs = {{lo}, {hi}};
                v.detail = std::move(what);
                return MmReport::fail(std::move(v));
            };
            if (!((lo == a && hi == b) || (lo == b && hi == a))) return fail("pair is not conservative");
            if (contains_pair(m_set, a, b) && (lo != pair.meet(b, a) || hi != pair.join(b, a)))
                return fail("pair is not commutative on a pair of M");
        }
    return {};
}

MmReport check_structure(const OpTriple& triple, const PairSet& m_set) {
    const int d = triple.mj1.domain_size();
    require_domain(triple.mj2, d);
    require_domain(triple.mn3, d);
    for (Label a = 0; a < d; ++a)
        for (Label b = 0; b < d; ++b)
            for (Label c = 0; c < d; ++c) {
                Label o1 = triple.mj1(a, b, c), o2 = triple.mj2(a, b, c), o3 = triple.mn3(a, b, c);
                auto fail = [&](std::string what) {
                    Violation v;
                    v.source = Violation::Source::Structure;
                    v.inputs = {{a}, {b}, {c}};
                    v.outputs = {{o1}, {o2}, {o3}};
                    v.detail = std::move(what);
                    return MmReport::fail(std::move(v));
                };
                auto in = [&](Label v) { return v == a || v == b || v == c; };
                if (!in(o1) || !in(o2) || !in(o3)) return fail("triple is not conservative");
                bool two_valued = (a == b || b == c || a == c) && !(a == b && b == c);
                if (!two_valued) continue;
                Label x = (a == b || a == c) ? a : b; // repeated label
                Label y = (a == b) ? c : (a == c ? b : a);
                if (contains_pair(m_set, x, y)) continue;
                if (o1 != x || o2 != x) return fail("majority condition fails on a pair of M-bar");
                if (o3 != y) return fail("minority condition fails on a pair of M-bar");
            }
    return {};
}

OpPair stp_candidate(int d, const PairSet& m_set, std::uint64_t mask) {
    std::vector<Label> meet(static_cast<std::size_t>(d * d)), join(static_cast<std::size_t>(d * d));
    for (Label a = 0; a < d; ++a)
        for (Label b = 0; b < d; ++b) {
            meet[static_cast<std::size_t>(a * d + b)] = a;
            join[static_cast<std::size_t>(a * d + b)] = b;
        }
    std::size_t bit = 0;
    for (const auto& [lo, hi] : m_set) {
        bool flip = (mask >> bit) & 1U;
        Label m = flip ? hi : lo, j = flip ? lo : hi;
        meet[static_cast<std::size_t>(lo * d + hi)] = meet[static_cast<std::size_t>(hi * d + lo)] = m;
        join[static_cast<std::size_t>(lo * d + hi)] = join[static_cast<std::size_t>(hi * d + lo)] = j;
        ++bit;
    }
    return {Operation(d, 2, std::move(meet)), Operation(d, 2, std::move(join))};
}

std::optional<OpPair> search_stp(const Language& lang, const PairSet& m_set) {
    if (m_set.size() > 20)
        throw CapabilityError("STP search over " + std::to_string(m_set.size()) + " pairs exceeds the cap of 20");
    for (const auto& [a, b] : m_set)
        if (a < 0 || b >= lang.domain_size() || a >= b) throw StructuralError("malformed pair in M");
    const std::uint64_t total = std::uint64_t{1} << m_set.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        OpPair cand = stp_candidate(lang.domain_size(), m_set, mask);
        if (check_multimorphism(cand, lang).holds) return cand;
    }
    return std::nullopt;
}

} // namespace vcsp
