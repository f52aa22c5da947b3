#include "vcsp/majority.hpp"

#include "vcsp/error.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace vcsp {

std::string_view to_string(MajorityStrategy s) {
    return s == MajorityStrategy::Exhaustive ? "exhaustive" : "backtracking";
}

MajorityStrategy majority_strategy_from_string(std::string_view s) {
    if (s == "exhaustive") return MajorityStrategy::Exhaustive;
    if (s == "backtracking" || s == "conservative-backtracking") return MajorityStrategy::Backtracking;
    throw ParseError("", "unknown strategy '" + std::string(s) + "'");
}

namespace {

// Value of a majority operation on a tuple with at most two distinct labels.
std::optional<Label> forced_value(Label a, Label b, Label c) {
    if (a == b || a == c) return a;
    if (b == c) return b;
    return std::nullopt;
}

std::vector<std::array<Label, 3>> free_triples(int d) {
    std::vector<std::array<Label, 3>> out;
    for (Label a = 0; a < d; ++a)
        for (Label b = 0; b < d; ++b)
            for (Label c = 0; c < d; ++c)
                if (a != b && b != c && a != c) out.push_back({a, b, c});
    return out;
}

std::vector<Label> candidates(const std::array<Label, 3>& t, int d, bool conservative) {
    if (conservative) {
        std::vector<Label> v(t.begin(), t.end());
        std::sort(v.begin(), v.end());
        return v;
    }
    std::vector<Label> v(static_cast<std::size_t>(d));
    for (Label l = 0; l < d; ++l) v[static_cast<std::size_t>(l)] = l;
    return v;
}

struct Constraint {
    std::size_t function = 0;
    // >= 0: free-triple id; < 0: fixed label -(s + 1).
    std::vector<int> sources;
    Tuple x, y, z;
};

class Searcher {
public:
    Searcher(const Language& lang, MajorityStrategy strategy, std::uint64_t limit)
        : lang_(lang), d_(lang.domain_size()), exhaustive_(strategy == MajorityStrategy::Exhaustive), limit_(limit) {
        triples_ = free_triples(d_);
        id_of_.assign(static_cast<std::size_t>(d_ * d_ * d_), -1);
        for (std::size_t i = 0; i < triples_.size(); ++i) {
            const auto& t = triples_[i];
            id_of_[static_cast<std::size_t>((t[0] * d_ + t[1]) * d_ + t[2])] = static_cast<int>(i);
        }
        build_constraints();
        build_order();
    }

    MajoritySearchResult run() {
        MajoritySearchResult res;
        res.refutation.domain_size = d_;
        res.refutation.conservative = !exhaustive_;
        for (int v : order_) res.refutation.variables.push_back(triples_[static_cast<std::size_t>(v)]);
        values_.assign(triples_.size(), -1);
        refutation_ = &res.refutation;

        if (const Constraint* c = first_violated(root_)) {
            log_step(0, *c);
            res.complete = true;
            res.nodes = nodes_;
            return res;
        }
        bool found = dfs(0);
        res.nodes = nodes_;
        if (aborted_) return res;
        res.complete = true;
        if (found) {
            res.refutation.steps.clear();
            res.majority = build_operation();
        }
        return res;
    }

private:
    void build_constraints() {
        std::set<std::pair<std::size_t, std::vector<int>>> seen;
        for (std::size_t fi = 0; fi < lang_.size(); ++fi) {
            const CostFunction& f = lang_.function(fi);
            std::vector<Tuple> dom = f.effective_domain();
            const std::size_t m = static_cast<std::size_t>(f.arity());
            std::vector<int> src(m);
            for (const Tuple& x : dom)
                for (const Tuple& y : dom)
                    for (const Tuple& z : dom) {
                        for (std::size_t i = 0; i < m; ++i) {
                            if (auto v = forced_value(x[i], y[i], z[i]))
                                src[i] = -(*v + 1);
                            else
                                src[i] = id_of_[static_cast<std::size_t>((x[i] * d_ + y[i]) * d_ + z[i])];
                        }
                        if (!seen.insert({fi, src}).second) continue;
                        constraints_.push_back({fi, src, x, y, z});
                    }
        }
    }

    void build_order() {
        const std::size_t n = triples_.size();
        order_.resize(n);
        for (std::size_t i = 0; i < n; ++i) order_[i] = static_cast<int>(i);
        if (!exhaustive_) {
            std::vector<std::uint64_t> weight(n, 0);
            for (const auto& c : constraints_) {
                std::set<int> vars;
                for (int s : c.sources)
                    if (s >= 0) vars.insert(s);
                for (int v : vars) ++weight[static_cast<std::size_t>(v)];
            }
            std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
                return weight[static_cast<std::size_t>(a)] > weight[static_cast<std::size_t>(b)];
            });
        }
        std::vector<int> pos(n);
        for (std::size_t i = 0; i < n; ++i) pos[static_cast<std::size_t>(order_[i])] = static_cast<int>(i);
        buckets_.assign(n, {});
        for (std::size_t ci = 0; ci < constraints_.size(); ++ci) {
            int depth = -1;
            for (int s : constraints_[ci].sources)
                if (s >= 0) depth = std::max(depth, pos[static_cast<std::size_t>(s)]);
            if (depth < 0)
                root_.push_back(ci);
            else
                buckets_[static_cast<std::size_t>(exhaustive_ ? static_cast<int>(n) - 1 : depth)].push_back(ci);
        }
    }

    bool holds(const Constraint& c) const {
        const CostFunction& f = lang_.function(c.function);
        std::size_t idx = 0;
        for (int s : c.sources) {
            Label v = s < 0 ? -s - 1 : values_[static_cast<std::size_t>(s)];
            idx = idx * static_cast<std::size_t>(d_) + static_cast<std::size_t>(v);
        }
        return f[idx].is_finite();
    }

    const Constraint* first_violated(const std::vector<std::size_t>& bucket) const {
        for (std::size_t ci : bucket)
            if (!holds(constraints_[ci])) return &constraints_[ci];
        return nullptr;
    }

    void log_step(std::size_t depth, const Constraint& c) {
        RefutationStep step;
        for (std::size_t i = 0; i < depth; ++i) step.prefix.push_back(values_[static_cast<std::size_t>(order_[i])]);
        step.function = c.function;
        step.x = c.x;
        step.y = c.y;
        step.z = c.z;
        refutation_->steps.push_back(std::move(step));
    }

    bool dfs(std::size_t depth) {
        if (depth == order_.size()) return true;
        const int var = order_[depth];
        for (Label v : candidates(triples_[static_cast<std::size_t>(var)], d_, !exhaustive_)) {
            if (++nodes_ > limit_) {
                aborted_ = true;
                return false;
            }
            values_[static_cast<std::size_t>(var)] = v;
            if (const Constraint* c = first_violated(buckets_[depth])) {
                log_step(depth + 1, *c);
                continue;
            }
            if (dfs(depth + 1)) return true;
            if (aborted_) return false;
        }
        values_[static_cast<std::size_t>(var)] = -1;
        return false;
    }

    TernaryOp build_operation() const {
        return Operation::tabulate(d_, 3, [&](const Tuple& t) {
            if (auto v = forced_value(t[0], t[1], t[2])) return *v;
            int id = id_of_[static_cast<std::size_t>((t[0] * d_ + t[1]) * d_ + t[2])];
            return values_[static_cast<std::size_t>(id)];
        });
    }

    const Language& lang_;
    int d_;
    bool exhaustive_;
    std::uint64_t limit_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    std::vector<std::array<Label, 3>> triples_;
    std::vector<int> id_of_;
    std::vector<Constraint> constraints_;
    std::vector<int> order_;
    std::vector<std::size_t> root_;
    std::vector<std::vector<std::size_t>> buckets_;
    std::vector<Label> values_;
    MajorityRefutation* refutation_ = nullptr;
};

} // namespace

MajoritySearchResult search_majority(const Language& lang, MajorityStrategy strategy, std::uint64_t node_limit) {
    const int d = lang.domain_size();
    if (strategy == MajorityStrategy::Exhaustive && d > 3)
        throw CapabilityError("exhaustive majority search supports |D| <= 3; use backtracking");
    if (d > 4) throw CapabilityError("majority search supports |D| <= 4");
    return Searcher(lang, strategy, node_limit).run();
}

bool replay_refutation(const Language& lang, const MajorityRefutation& ref, std::string* why) {
    auto fail = [&](std::string msg) {
        if (why) *why = std::move(msg);
        return false;
    };
    const int d = lang.domain_size();
    if (ref.domain_size != d) return fail("domain size mismatch");
    {
        auto expected = free_triples(d);
        auto got = ref.variables;
        std::sort(expected.begin(), expected.end());
        std::sort(got.begin(), got.end());
        if (expected != got) return fail("variables are not exactly the all-distinct triples");
    }
    std::map<std::array<Label, 3>, std::size_t> position;
    for (std::size_t i = 0; i < ref.variables.size(); ++i) position[ref.variables[i]] = i;

    auto step_valid = [&](const RefutationStep& s, std::string& msg) {
        if (s.function >= lang.size()) {
            msg = "function index out of range";
            return false;
        }
        const CostFunction& f = lang.function(s.function);
        const std::size_t m = static_cast<std::size_t>(f.arity());
        if (s.x.size() != m || s.y.size() != m || s.z.size() != m) {
            msg = "tuple length mismatch";
            return false;
        }
        for (const Tuple* t : {&s.x, &s.y, &s.z})
            for (Label l : *t)
                if (l < 0 || l >= d) {
                    msg = "label out of range";
                    return false;
                }
        if (!f.in_domain(s.x) || !f.in_domain(s.y) || !f.in_domain(s.z)) {
            msg = "witness tuple outside dom f";
            return false;
        }
        Tuple out(m);
        for (std::size_t i = 0; i < m; ++i) {
            if (auto v = forced_value(s.x[i], s.y[i], s.z[i])) {
                out[i] = *v;
                continue;
            }
            auto it = position.find({s.x[i], s.y[i], s.z[i]});
            if (it == position.end() || it->second >= s.prefix.size()) {
                msg = "witness depends on an unassigned triple";
                return false;
            }
            out[i] = s.prefix[it->second];
        }
        if (f.in_domain(out)) {
            msg = "majority image stays inside dom f";
            return false;
        }
        return true;
    };

    std::size_t next = 0;
    std::vector<Label> prefix;
    std::string msg;
    std::function<bool()> walk = [&]() -> bool {
        if (next < ref.steps.size() && ref.steps[next].prefix == prefix) {
            if (!step_valid(ref.steps[next], msg)) {
                msg = "step " + std::to_string(next) + ": " + msg;
                return false;
            }
            ++next;
            return true;
        }
        if (prefix.size() == ref.variables.size()) {
            msg = "unrefuted complete assignment: a majority polymorphism exists";
            return false;
        }
        for (Label v : candidates(ref.variables[prefix.size()], d, ref.conservative)) {
            prefix.push_back(v);
            bool ok = walk();
            prefix.pop_back();
            if (!ok) return false;
        }
        return true;
    };
    if (!walk()) return fail(msg);
    if (next != ref.steps.size()) return fail("unused refutation steps");
    return true;
}

} // namespace vcsp
