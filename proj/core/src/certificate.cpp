#include "vcsp/certificate.hpp"

#include "json_util.hpp"

#include "vcsp/io.hpp"

#include <limits>

namespace vcsp {

using detail::json;

namespace {

json op_to_json(const Operation& op) { return json(op.table()); }

json pairs_to_json(const PairSet& s) {
    json out = json::array();
    for (const auto& [a, b] : s) out.push_back(json::array({a, b}));
    return out;
}

json refutation_to_json(const MajorityRefutation& r) {
    json vars = json::array();
    for (const auto& t : r.variables) vars.push_back(json::array({t[0], t[1], t[2]}));
    json steps = json::array();
    for (const auto& s : r.steps)
        steps.push_back(json{{"prefix", s.prefix}, {"function", s.function}, {"x", s.x}, {"y", s.y}, {"z", s.z}});
    return json{{"domain_size", r.domain_size}, {"conservative", r.conservative}, {"variables", std::move(vars)},
                {"steps", std::move(steps)}};
}

// Reading helpers: every failure names the JSON pointer of the offending value.
class Reader {
public:

    const json& at(const json& j, const char* key, const std::string& where) const {
        return detail::require(j, key, where);
    }

    std::int64_t integer(const json& j, const std::string& where) const { return detail::require_int(j, where); }

    std::string string(const json& j, const std::string& where) const {
        if (!j.is_string()) throw ParseError(where, "expected a string");
        return j.get<std::string>();
    }

    bool boolean(const json& j, const std::string& where) const {
        if (!j.is_boolean()) throw ParseError(where, "expected a boolean");
        return j.get<bool>();
    }

    const json& array(const json& j, const std::string& where) const {
        if (!j.is_array()) throw ParseError(where, "expected an array");
        return j;
    }

    std::vector<Label> labels(const json& j, const std::string& where, int d) const {
        std::vector<Label> out;
        const json& a = array(j, where);
        for (std::size_t i = 0; i < a.size(); ++i) {
            auto v = integer(a[i], where + "/" + std::to_string(i));
            if (v < 0 || v >= d) throw ParseError(where + "/" + std::to_string(i), "label out of range");
            out.push_back(static_cast<Label>(v));
        }
        return out;
    }

    Operation op(const json& j, const std::string& where, int d, int arity) const {
        auto t = labels(j, where, d);
        std::size_t n = 1;
        for (int i = 0; i < arity; ++i) n *= static_cast<std::size_t>(d);
        if (t.size() != n) throw ParseError(where, "operation table must have " + std::to_string(n) + " entries");
        return Operation(d, arity, std::move(t));
    }

    PairSet pairs(const json& j, const std::string& where, int d) const {
        PairSet s;
        const json& a = array(j, where);
        for (std::size_t i = 0; i < a.size(); ++i) {
            auto p = labels(a[i], where + "/" + std::to_string(i), d);
            if (p.size() != 2 || p[0] == p[1]) throw ParseError(where + "/" + std::to_string(i), "expected a pair of distinct labels");
            s.insert(canonical_pair(p[0], p[1]));
        }
        return s;
    }

    MajorityRefutation refutation(const json& j, const std::string& where, int d) const {
        MajorityRefutation r;
        r.domain_size = static_cast<int>(integer(at(j, "domain_size", where), where + "/domain_size"));
        r.conservative = boolean(at(j, "conservative", where), where + "/conservative");
        const json& vars = array(at(j, "variables", where), where + "/variables");
        for (std::size_t i = 0; i < vars.size(); ++i) {
            auto t = labels(vars[i], where + "/variables/" + std::to_string(i), d);
            if (t.size() != 3) throw ParseError(where + "/variables/" + std::to_string(i), "expected a label triple");
            r.variables.push_back({t[0], t[1], t[2]});
        }
        const json& steps = array(at(j, "steps", where), where + "/steps");
        for (std::size_t i = 0; i < steps.size(); ++i) {
            const std::string w = where + "/steps/" + std::to_string(i);
            RefutationStep s;
            s.prefix = labels(at(steps[i], "prefix", w), w + "/prefix", d);
            auto f = integer(at(steps[i], "function", w), w + "/function");
            if (f < 0) throw ParseError(w + "/function", "function index must be non-negative");
            s.function = static_cast<std::size_t>(f);
            s.x = labels(at(steps[i], "x", w), w + "/x", d);
            s.y = labels(at(steps[i], "y", w), w + "/y", d);
            s.z = labels(at(steps[i], "z", w), w + "/z", d);
            r.steps.push_back(std::move(s));
        }
        return r;
    }
};

CertificateCheck result(bool ok, VerdictKind k, std::string msg) { return {ok, k, std::move(msg)}; }

} // namespace

std::string certificate_json(const Verdict& v, const Language& lang) {
    json out;
    out["tool"] = "vcsp";
    out["version"] = std::string(kToolVersion);
    out["language_hash"] = language_hash(lang);
    out["verdict"] = std::string(to_string(v.kind));
    if (v.reason) out["reason"] = std::string(to_string(*v.reason));
    out["budgets"] = json{{"rounds", v.budgets.closure.rounds},
                          {"size", v.budgets.closure.size},
                          {"magnitude_bits", v.budgets.closure.magnitude_bits},
                          {"strategy", std::string(to_string(v.strategy))},
                          {"majority_nodes", v.budgets.majority_nodes}};
    out["closure"] = json{{"members", v.closure_members}, {"rounds", v.closure_rounds}, {"saturated", v.closure_saturated}};
    if (v.tractable) {
        const TractableCertificate& t = *v.tractable;
        out["m_set"] = pairs_to_json(t.m_set);
        out["stp"] = json{{"meet", op_to_json(t.stp.meet)}, {"join", op_to_json(t.stp.join)}};
        out["triple"] = json{{"mj1", op_to_json(t.triple.mj1)}, {"mj2", op_to_json(t.triple.mj2)}, {"mn3", op_to_json(t.triple.mn3)}};
        json mu = json::array();
        for (const auto& [set, e] : t.mu.entries)
            mu.push_back(json{{"set", json::array({set[0], set[1], set[2]})},
                              {"label", e.label},
                              {"member", e.witness.member},
                              {"pair", json::array({e.witness.pair.first, e.witness.pair.second})}});
        out["mu"] = std::move(mu);
    }
    if (v.soft_loop) {
        const SoftLoopWitness& w = *v.soft_loop;
        json loop{{"node", json::array({w.node.first, w.node.second})},
                  {"member", w.member},
                  {"table", detail::function_to_json(w.table)}};
        if (w.gadget)
            loop["gadget"] = json{{"language", detail::language_to_json(w.gadget->language)},
                                  {"instance", detail::instance_to_json(w.gadget->instance)},
                                  {"exposed", w.gadget->exposed}};
        out["soft_self_loop"] = std::move(loop);
    }
    if (v.refutation) out["refutation"] = refutation_to_json(*v.refutation);
    if (v.kind == VerdictKind::Unknown) out["stage"] = v.stage;
    out["trace"] = v.trace;
    return out.dump(2) + "\n";
}

CertificateCheck verify_certificate(std::string_view text, const Language& lang) {
    const json root = detail::parse_text(text);
    Reader rd;
    const int d = lang.domain_size();

    const std::string version = rd.string(rd.at(root, "version", ""), "/version");
    const std::string verdict = rd.string(rd.at(root, "verdict", ""), "/verdict");
    VerdictKind kind;
    if (verdict == "tractable")
        kind = VerdictKind::Tractable;
    else if (verdict == "np-hard")
        kind = VerdictKind::NPHard;
    else if (verdict == "unknown")
        kind = VerdictKind::Unknown;
    else
        throw ParseError("/verdict", "unknown verdict '" + verdict + "'");

    if (version != kToolVersion)
        return result(false, kind, "certificate version " + version + " does not match tool version " + std::string(kToolVersion));
    if (rd.string(rd.at(root, "language_hash", ""), "/language_hash") != language_hash(lang))
        return result(false, kind, "language hash mismatch");

    if (kind == VerdictKind::Unknown) return result(true, kind, "unknown verdict: nothing to replay");

    if (kind == VerdictKind::Tractable) {
        PairSet m = rd.pairs(rd.at(root, "m_set", ""), "/m_set", d);
        const json& stp = rd.at(root, "stp", "");
        const json& tri = rd.at(root, "triple", "");
        OpPair pair{rd.op(rd.at(stp, "meet", "/stp"), "/stp/meet", d, 2), rd.op(rd.at(stp, "join", "/stp"), "/stp/join", d, 2)};
        OpTriple triple{rd.op(rd.at(tri, "mj1", "/triple"), "/triple/mj1", d, 3),
                        rd.op(rd.at(tri, "mj2", "/triple"), "/triple/mj2", d, 3),
                        rd.op(rd.at(tri, "mn3", "/triple"), "/triple/mn3", d, 3)};
        if (MmReport r = check_structure(pair, m); !r.holds)
            return result(false, kind, "STP structure: " + describe(*r.violation));
        if (MmReport r = check_multimorphism(pair, lang); !r.holds)
            return result(false, kind, "STP multimorphism: " + describe(*r.violation));
        if (MmReport r = verify_mjn(triple, lang, m); !r.holds)
            return result(false, kind, "MJN: " + describe(*r.violation));
        return result(true, kind, "certificate valid: STP and MJN verified");
    }

    const std::string reason = rd.string(rd.at(root, "reason", ""), "/reason");
    if (reason == "soft-self-loop") {
        const json& loop = rd.at(root, "soft_self_loop", "");
        auto node = rd.labels(rd.at(loop, "node", "/soft_self_loop"), "/soft_self_loop/node", d);
        if (node.size() != 2 || node[0] == node[1]) throw ParseError("/soft_self_loop/node", "expected a pair of distinct labels");
        const Node p{node[0], node[1]};
        if (!lang.is_conservative()) return result(false, kind, "soft self-loop hardness needs a conservative language");
        if (loop.contains("gadget")) {
            const json& gj = loop["gadget"];
            Gadget g;
            g.language = detail::language_from_json(rd.at(gj, "language", "/soft_self_loop/gadget"), "/soft_self_loop/gadget/language");
            g.instance = detail::instance_from_json(rd.at(gj, "instance", "/soft_self_loop/gadget"), "/soft_self_loop/gadget/instance");
            g.exposed = rd.labels(rd.at(gj, "exposed", "/soft_self_loop/gadget"), "/soft_self_loop/gadget/exposed",
                                  std::numeric_limits<int>::max());
            if (g.language.domain_size() != d || g.language.size() < lang.size())
                return result(false, kind, "gadget language does not extend the input language");
            for (std::size_t i = 0; i < g.language.size(); ++i) {
                if (i < lang.size() && g.language.function(i) != lang.function(i))
                    return result(false, kind, "gadget function " + std::to_string(i) + " differs from the language");
                if (i >= lang.size() && g.language.function(i).arity() != 1)
                    return result(false, kind, "gadget adds a non-unary function");
            }
            if (g.exposed.size() != 2) return result(false, kind, "gadget must expose two variables");
            CostFunction f = express_gadget(g);
            auto k = edge_witness(f, p, p);
            if (!k || *k != EdgeKind::Soft) return result(false, kind, "gadget does not produce a soft self-loop");
            return result(true, kind, "certificate valid: gadget expresses a soft self-loop");
        }
        CostFunction table = detail::function_from_json(rd.at(loop, "table", "/soft_self_loop"), d, "/soft_self_loop/table");
        if (table.arity() != 2) throw ParseError("/soft_self_loop/table", "expected a binary table");
        auto k = edge_witness(table, p, p);
        if (!k || *k != EdgeKind::Soft) return result(false, kind, "stored table has no soft self-loop");
        return result(true, kind, "certificate valid: stored table has a soft self-loop (no gadget stored)");
    }
    if (reason == "no-majority") {
        MajorityRefutation r = rd.refutation(rd.at(root, "refutation", ""), "/refutation", d);
        if (r.conservative && !lang.is_conservative())
            return result(false, kind, "a conservative refutation needs a conservative language");
        std::string why;
        if (!replay_refutation(lang, r, &why)) return result(false, kind, "refutation: " + why);
        return result(true, kind, "certificate valid: majority refutation replayed (" + std::to_string(r.steps.size()) + " steps)");
    }
    throw ParseError("/reason", "unknown reason '" + reason + "'");
}

} // namespace vcsp
