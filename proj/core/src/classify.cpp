#include "vcsp/classify.hpp"

#include "vcsp/error.hpp"

#include <functional>

namespace vcsp {

std::string_view to_string(VerdictKind k) {
    switch (k) {
    case VerdictKind::Tractable: return "tractable";
    case VerdictKind::NPHard: return "np-hard";
    case VerdictKind::Unknown: return "unknown";
    }
    return "?";
}

std::string_view to_string(HardnessReason r) {
    return r == HardnessReason::SoftSelfLoop ? "soft-self-loop" : "no-majority";
}

namespace {

std::string pairs_str(const PairSet& s) {
    std::string out = "{";
    for (const auto& [a, b] : s) {
        if (out.size() > 1) out += ",";
        out += "{" + std::to_string(a) + "," + std::to_string(b) + "}";
    }
    return out + "}";
}

// The full set first, then proper subsets by decreasing size, lexicographic within a size.
std::vector<PairSet> candidate_sets(const PairSet& m_set, std::size_t limit) {
    std::vector<LabelPair> items(m_set.begin(), m_set.end());
    std::vector<PairSet> out;
    for (std::size_t k = items.size() + 1; k-- > 0 && out.size() < limit;) {
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        while (out.size() < limit) {
            PairSet s;
            for (std::size_t i : idx) s.insert(items[i]);
            out.push_back(std::move(s));
            std::size_t i = k;
            while (i > 0 && idx[i - 1] == items.size() - k + i - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return out;
}

} // namespace

Verdict classify(const Language& lang, const ClassifyBudgets& budgets) {
    const int d = lang.domain_size();
    if (!lang.is_conservative())
        throw CapabilityError("classification needs a conservative language (unary_closure finite or general)");
    if (d > budgets.max_domain || d > 4)
        throw CapabilityError("domain size " + std::to_string(d) + " exceeds the supported maximum " +
                              std::to_string(std::min(budgets.max_domain, 4)));

    Verdict v;
    v.budgets = budgets;
    v.strategy = budgets.strategy.value_or(d <= 3 ? MajorityStrategy::Exhaustive : MajorityStrategy::Backtracking);
    auto log = [&](std::string s) { v.trace.push_back(std::move(s)); };

    BinaryClosure closure = binary_closure(lang, budgets.closure);
    v.closure_members = closure.members.size();
    v.closure_rounds = closure.rounds_completed;
    v.closure_saturated = closure.saturated;
    log("closure: " + std::to_string(closure.members.size()) + " members after " +
        std::to_string(closure.rounds_completed) + " rounds, " + (closure.saturated ? "saturated" : "truncated") +
        (closure.budget_exhausted ? " (size budget reached)" : "") +
        (closure.dropped_oversized ? " (oversized members dropped)" : ""));

    PairGraph g = build_pair_graph(closure);
    log("graph: " + std::to_string(g.edges.size()) + " edges, loop-free pairs " + pairs_str(g.m_set));

    if (auto loop = find_soft_self_loop(g)) {
        v.kind = VerdictKind::NPHard;
        v.reason = HardnessReason::SoftSelfLoop;
        SoftLoopWitness w;
        w.node = loop->node;
        w.member = loop->witness.member;
        w.table = closure.members[w.member].table;
        if (loop->witness.swapped) w.table = w.table.transposed();
        try {
            Gadget gadget = audit_gadget(closure, w.member, lang);
            checked_power(d, gadget.instance.num_vars, kMaxGadgetEvaluations);
            if (loop->witness.swapped) std::swap(gadget.exposed[0], gadget.exposed[1]);
            w.gadget = std::move(gadget);
        } catch (const CapabilityError&) {
            log("soft self-loop gadget exceeds the evaluation cap; certificate keeps the table only");
        }
        log("soft self-loop at (" + std::to_string(w.node.first) + "," + std::to_string(w.node.second) +
            ") witnessed by member " + std::to_string(w.member));
        v.soft_loop = std::move(w);
        return v;
    }
    log("no soft self-loop");

    MajoritySearchResult maj = search_majority(lang, v.strategy, budgets.majority_nodes);
    log("majority search (" + std::string(to_string(v.strategy)) + "): " + std::to_string(maj.nodes) + " nodes, " +
        (maj.majority ? "found" : maj.complete ? "refuted" : "aborted"));
    if (!maj.majority) {
        if (!maj.complete) {
            v.stage = "majority";
            return v;
        }
        v.kind = VerdictKind::NPHard;
        v.reason = HardnessReason::NoMajority;
        v.refutation = std::move(maj.refutation);
        return v;
    }

    const auto candidates = candidate_sets(g.m_set, budgets.max_candidate_sets);
    for (const PairSet& m : candidates) {
        std::optional<OpPair> stp = search_stp(lang, m);
        if (!stp) {
            log("M' = " + pairs_str(m) + ": no STP");
            continue;
        }
        MuMap mu;
        try {
            mu = compute_mu(closure, m);
        } catch (const MuConflict& e) {
            log("M' = " + pairs_str(m) + ": " + e.what());
            continue;
        }
        OpTriple triple = construct_mjn(mu, *stp, m);
        MmReport stp_ok = check_structure(*stp, m);
        MmReport mm = verify_mjn(triple, lang, m);
        if (!stp_ok.holds || !mm.holds) {
            log("M' = " + pairs_str(m) + ": MJN rejected: " +
                describe(!stp_ok.holds ? *stp_ok.violation : *mm.violation));
            continue;
        }
        log("M' = " + pairs_str(m) + ": STP and MJN verified");
        v.kind = VerdictKind::Tractable;
        v.tractable = TractableCertificate{m, *stp, std::move(triple), std::move(mu)};
        return v;
    }
    v.stage = "certificate";
    log(closure.saturated ? "no verified certificate on a saturated closure (engine limitation)"
                          : "no verified certificate; retry with a larger closure budget");
    return v;
}

} // namespace vcsp
