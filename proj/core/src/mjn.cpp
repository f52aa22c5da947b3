#include "vcsp/mjn.hpp"

#include "vcsp/error.hpp"

#include <algorithm>

namespace vcsp {

namespace {

std::array<Label, 3> sorted(Label a, Label b, Label c) {
    std::array<Label, 3> s{a, b, c};
    std::sort(s.begin(), s.end());
    return s;
}

std::string set_str(const std::array<Label, 3>& s) {
    return "{" + std::to_string(s[0]) + "," + std::to_string(s[1]) + "," + std::to_string(s[2]) + "}";
}

// Matches dom f = {(a, a'), (b, a'), (c, b')}: returns c and (a', b').
std::optional<std::pair<Label, Node>> three_point_pattern(const CostFunction& f) {
    auto dom = f.effective_domain();
    if (dom.size() != 3) return std::nullopt;
    const Label x0 = dom[0][0], x1 = dom[1][0], x2 = dom[2][0];
    if (x0 == x1 || x1 == x2 || x0 == x2) return std::nullopt;
    const Label y0 = dom[0][1], y1 = dom[1][1], y2 = dom[2][1];
    if (y0 == y1 && y1 != y2) return std::make_pair(x2, Node{y0, y2});
    if (y0 == y2 && y1 != y2) return std::make_pair(x1, Node{y0, y1});
    if (y1 == y2 && y0 != y1) return std::make_pair(x0, Node{y1, y0});
    return std::nullopt;
}

} // namespace

std::optional<Label> MuMap::at(Label a, Label b, Label c) const {
    if (a == b || b == c || a == c) return std::nullopt;
    auto it = entries.find(sorted(a, b, c));
    if (it == entries.end()) return std::nullopt;
    return it->second.label;
}

MuConflict::MuConflict(std::array<Label, 3> set, MuEntry first, MuEntry second, CostFunction composed)
    : std::runtime_error("mu" + set_str(set) + " contains both " + std::to_string(first.label) + " (member " +
                         std::to_string(first.witness.member) + ") and " + std::to_string(second.label) + " (member " +
                         std::to_string(second.witness.member) + ")"),
      set_(set), first_(first), second_(second), composed_(std::move(composed)) {}

MuMap compute_mu(const BinaryClosure& closure, const PairSet& m_set) {
    MuMap mu;
    mu.domain_size = closure.domain_size;
    if (closure.domain_size < 3) return mu;
    for (std::size_t i = 0; i < closure.members.size(); ++i) {
        const CostFunction& f = closure.members[i].table;
        auto hit = three_point_pattern(f);
        if (!hit) continue;
        const auto& [c, pair] = *hit;
        if (contains_pair(m_set, pair.first, pair.second)) continue;
        auto dom = f.effective_domain();
        auto key = sorted(dom[0][0], dom[1][0], dom[2][0]);
        MuEntry entry{c, {i, pair}};
        auto [it, inserted] = mu.entries.emplace(key, entry);
        if (!inserted && it->second.label != c) {
            const CostFunction& first = closure.members[it->second.witness.member].table;
            throw MuConflict(key, it->second, entry, min_compose(first.transposed(), f));
        }
    }
    return mu;
}

MuMap compute_mu(const BinaryClosure& closure, const PairGraph& g) { return compute_mu(closure, g.m_set); }

std::vector<std::string> check_mu(const MuMap& mu, const PairSet& m_set) {
    std::vector<std::string> out;
    for (const auto& [set, e] : mu.entries)
        for (Label other : set)
            if (other != e.label && contains_pair(m_set, other, e.label))
                out.push_back("mu" + set_str(set) + " = {" + std::to_string(e.label) + "} but {" +
                              std::to_string(std::min(other, e.label)) + "," + std::to_string(std::max(other, e.label)) +
                              "} has no self-loop");
    return out;
}

OpTriple construct_mjn(const MuMap& mu, const OpPair& stp, const PairSet& m_set) {
    const int d = stp.meet.domain_size();
    if (mu.domain_size != d) throw StructuralError("mu and STP domain sizes differ");
    std::vector<Label> t1, t2, t3;
    for (Label a = 0; a < d; ++a)
        for (Label b = 0; b < d; ++b)
            for (Label c = 0; c < d; ++c) {
                std::array<Label, 3> r;
                const bool two_valued = (a == b) + (b == c) + (a == c) == 1;
                if (two_valued) {
                    const Label x = (a == b || a == c) ? a : b;
                    const Label y = a != x ? a : (b != x ? b : c);
                    if (!contains_pair(m_set, x, y)) {
                        t1.push_back(x);
                        t2.push_back(x);
                        t3.push_back(y);
                        continue;
                    }
                }
                auto m = mu.at(a, b, c);
                if (m && *m == a)
                    r = {stp.meet(b, c), stp.join(b, c), a};
                else if (m && *m == b)
                    r = {stp.meet(a, c), stp.join(a, c), b};
                else
                    r = {stp.meet(a, b), stp.join(a, b), c};
                t1.push_back(r[0]);
                t2.push_back(r[1]);
                t3.push_back(r[2]);
            }
    return {Operation(d, 3, std::move(t1)), Operation(d, 3, std::move(t2)), Operation(d, 3, std::move(t3))};
}

OpTriple construct_mjn(const MuMap& mu, const OpPair& stp, const PairGraph& g) { return construct_mjn(mu, stp, g.m_set); }

MmReport verify_mjn(const OpTriple& triple, const Language& lang, const PairSet& m_set) {
    if (triple.mj1.domain_size() != lang.domain_size()) throw StructuralError("triple and language domain sizes differ");
    MmReport r = check_structure(triple, m_set);
    if (!r.holds) return r;
    MmReport mm = check_multimorphism(triple, lang);
    mm.notes.insert(mm.notes.begin(), r.notes.begin(), r.notes.end());
    return mm;
}

MmReport verify_mjn(const OpTriple& triple, const Language& lang, const PairGraph& g) {
    return verify_mjn(triple, lang, g.m_set);
}

} // namespace vcsp
