#include "vcsp/solver.hpp"

#include "vcsp/error.hpp"

#include <algorithm>
#include <thread>

namespace vcsp {

namespace {

struct Best {
    std::size_t index = 0;
    Cost cost = Cost::infinity();
    bool any = false;
};

Assignment decode(std::size_t index, int n, int d) {
    Assignment x(static_cast<std::size_t>(n), 0);
    for (int k = n - 1; k >= 0; --k) {
        x[static_cast<std::size_t>(k)] = static_cast<Label>(index % static_cast<std::size_t>(d));
        index /= static_cast<std::size_t>(d);
    }
    return x;
}

Best scan(const Instance& instance, const Language& lang, std::size_t begin, std::size_t end) {
    const int n = instance.num_vars;
    const int d = lang.domain_size();
    Best best;
    if (begin >= end) return best;
    Assignment x = decode(begin, n, d);
    for (std::size_t i = begin; i < end; ++i) {
        Cost c = evaluate(instance, lang, x);
        if (!best.any || c < best.cost) best = {i, c, true};
        for (int k = n - 1; k >= 0; --k) {
            if (++x[static_cast<std::size_t>(k)] < d) break;
            x[static_cast<std::size_t>(k)] = 0;
        }
    }
    return best;
}

Cost total(const Instance& instance, const Language& lang, const std::vector<Assignment>& xs) {
    Cost t;
    for (const Assignment& x : xs) t += evaluate(instance, lang, x);
    return t;
}

void check_shape(const Instance& instance, const Assignment& x) {
    if (x.size() != static_cast<std::size_t>(instance.num_vars))
        throw StructuralError("assignment length does not match the instance");
}

} // namespace

Solution brute_force_solve(const Instance& instance, const Language& lang, unsigned jobs, std::size_t cap) {
    instance.validate(lang);
    const int d = lang.domain_size();
    const std::size_t total_count = checked_power(d, instance.num_vars, cap);
    jobs = std::clamp<unsigned>(jobs, 1, 64);
    std::vector<Best> parts(jobs);
    const std::size_t block = (total_count + jobs - 1) / jobs;
    if (jobs == 1) {
        parts[0] = scan(instance, lang, 0, total_count);
    } else {
        std::vector<std::thread> workers;
        for (unsigned w = 0; w < jobs; ++w)
            workers.emplace_back([&, w] {
                const std::size_t b = std::min(total_count, w * block);
                parts[w] = scan(instance, lang, b, std::min(total_count, b + block));
            });
        for (auto& t : workers) t.join();
    }
    Best best;
    for (const Best& p : parts) // blocks are in index order, so strict < keeps the least index
        if (p.any && (!best.any || p.cost < best.cost)) best = p;
    Solution s;
    s.assignment = decode(best.index, instance.num_vars, d);
    s.cost = best.cost;
    s.feasible = best.cost.is_finite();
    return s;
}

FuseResult fuse_improve(const Instance& instance, const Language& lang, const OpPair& ops, const Assignment& x,
                        const Assignment& y) {
    instance.validate(lang);
    check_shape(instance, x);
    check_shape(instance, y);
    if (MmReport r = check_multimorphism(ops, lang); !r.holds)
        throw StructuralError("operations are not a multimorphism of the language: " + describe(*r.violation));
    FuseResult out;
    Assignment m(x.size()), j(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        m[i] = ops.meet(x[i], y[i]);
        j[i] = ops.join(x[i], y[i]);
    }
    out.fused = {std::move(m), std::move(j)};
    out.input_total = total(instance, lang, {x, y});
    out.fused_total = total(instance, lang, out.fused);
    out.improved_or_equal = out.input_total.is_infinite() || out.fused_total <= out.input_total;
    return out;
}

FuseResult fuse_improve(const Instance& instance, const Language& lang, const OpTriple& ops, const Assignment& x,
                        const Assignment& y, const Assignment& z) {
    instance.validate(lang);
    check_shape(instance, x);
    check_shape(instance, y);
    check_shape(instance, z);
    if (MmReport r = check_multimorphism(ops, lang); !r.holds)
        throw StructuralError("operations are not a multimorphism of the language: " + describe(*r.violation));
    FuseResult out;
    Assignment a(x.size()), b(x.size()), c(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        a[i] = ops.mj1(x[i], y[i], z[i]);
        b[i] = ops.mj2(x[i], y[i], z[i]);
        c[i] = ops.mn3(x[i], y[i], z[i]);
    }
    out.fused = {std::move(a), std::move(b), std::move(c)};
    out.input_total = total(instance, lang, {x, y, z});
    out.fused_total = total(instance, lang, out.fused);
    out.improved_or_equal = out.input_total.is_infinite() || out.fused_total <= out.input_total;
    return out;
}

} // namespace vcsp
