#include "cli.hpp"

#include "vcsp/certificate.hpp"
#include "vcsp/classify.hpp"
#include "vcsp/error.hpp"
#include "vcsp/io.hpp"
#include "vcsp/reduce.hpp"
#include "vcsp/solver.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <random>
#include <sstream>

namespace vcsp::cli {

namespace {

using json = nlohmann::ordered_json;

struct BudgetFlags {
    int rounds = ClosureBudget{}.rounds;
    std::size_t size = ClosureBudget{}.size;
    int magnitude_bits = ClosureBudget{}.magnitude_bits;

    void attach(CLI::App* app) {
        app->add_option("--budget-rounds", rounds, "Closure rounds after seeding")->check(CLI::NonNegativeNumber);
        app->add_option("--budget-size", size, "Maximum number of closure members")->check(CLI::PositiveNumber);
        app->add_option("--magnitude-bits", magnitude_bits, "Drop closure members with larger entries")
            ->check(CLI::Range(1, 62));
    }
    ClosureBudget budget() const { return {rounds, size, magnitude_bits}; }
};

std::string assignment_str(const Assignment& x) {
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + std::to_string(x[i]);
    return s + ")";
}

std::string pairs_str(const PairSet& s) {
    std::string out = "{";
    for (const auto& [a, b] : s) out += (out.size() > 1 ? ",{" : "{") + std::to_string(a) + "," + std::to_string(b) + "}";
    return out + "}";
}

json parse_json_file(const std::string& path) {
    std::string text = read_file(path);
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ":byte " + std::to_string(e.byte), e.what());
    }
}

std::vector<Label> read_table(const json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where, "expected an array of labels");
    std::vector<Label> t;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number_integer()) throw ParseError(where + "/" + std::to_string(i), "expected a label");
        t.push_back(j[i].get<Label>());
    }
    return t;
}

Operation read_op(const json& root, const char* key, int d, int arity, const std::string& file) {
    const std::string where = file + ":/" + key;
    if (!root.contains(key)) throw ParseError(file + ":/", std::string("missing key '") + key + "'");
    std::vector<Label> t = read_table(root[key], where);
    std::size_t n = 1;
    for (int i = 0; i < arity; ++i) n *= static_cast<std::size_t>(d);
    if (t.size() != n) throw ParseError(where, "expected " + std::to_string(n) + " entries");
    for (std::size_t i = 0; i < t.size(); ++i)
        if (t[i] < 0 || t[i] >= d) throw ParseError(where + "/" + std::to_string(i), "label out of range");
    return Operation(d, arity, std::move(t));
}

void print_report(std::ostream& out, const MmReport& r) {
    out << (r.holds ? "holds" : "violated") << "\n";
    if (r.violation) out << "violation: " << describe(*r.violation) << "\n";
    for (const auto& n : r.notes) out << "note: " << n << "\n";
}

json provenance_json(const ClosureMember& m) {
    const Provenance& p = m.provenance;
    json j{{"kind", std::string(to_string(p.kind))}};
    switch (p.kind) {
    case Provenance::Kind::Seed:
        j["function"] = p.function;
        j["x_coordinate"] = p.x_coordinate;
        j["y_coordinate"] = p.y_coordinate;
        j["pin_masks"] = p.pin_masks;
        break;
    case Provenance::Kind::Zero: break;
    case Provenance::Kind::Sum:
    case Provenance::Kind::Compose:
        j["left"] = p.left;
        j["right"] = p.right;
        break;
    case Provenance::Kind::Transpose: j["left"] = p.left; break;
    case Provenance::Kind::Restrict:
        j["left"] = p.left;
        j["side"] = p.side == 0 ? "x" : "y";
        j["mask"] = p.mask;
        break;
    }
    json row = json::array(), col = json::array();
    for (const auto& r : m.row_offset) row.push_back(r.to_string());
    for (const auto& c : m.col_offset) col.push_back(c.to_string());
    j["row_offset"] = std::move(row);
    j["col_offset"] = std::move(col);
    j["uses_crisp"] = m.uses_crisp;
    j["uses_finite_unary"] = m.uses_finite_unary;
    j["round"] = m.round;
    return j;
}

// ---- subcommands ----

int cmd_classify(const std::string& lang_path, const BudgetFlags& b, int max_domain, const std::string& cert_path,
                 const std::string& strategy, std::ostream& out) {
    Language lang = load_language(lang_path);
    ClassifyBudgets budgets;
    budgets.closure = b.budget();
    budgets.max_domain = max_domain;
    if (!strategy.empty()) budgets.strategy = majority_strategy_from_string(strategy);
    Verdict v = classify(lang, budgets);
    out << "verdict: " << to_string(v.kind);
    if (v.reason) out << " (" << to_string(*v.reason) << ")";
    out << "\n";
    if (v.tractable) out << "m_set: " << pairs_str(v.tractable->m_set) << "\n";
    if (v.soft_loop) out << "soft self-loop: (" << v.soft_loop->node.first << "," << v.soft_loop->node.second << ")\n";
    if (v.kind == VerdictKind::Unknown) out << "stage: " << v.stage << "\n";
    for (const auto& line : v.trace) out << "  " << line << "\n";
    if (!cert_path.empty()) {
        write_file(cert_path, certificate_json(v, lang));
        out << "certificate: " << cert_path << "\n";
    }
    switch (v.kind) {
    case VerdictKind::Tractable: return kOk;
    case VerdictKind::NPHard: return kNpHard;
    case VerdictKind::Unknown: return kUnknown;
    }
    return kUnknown;
}

int cmd_solve(const std::string& inst_path, const std::string& lang_path, unsigned jobs, std::ostream& out) {
    Language lang = load_language(lang_path);
    Instance inst = load_instance(inst_path);
    Solution s = brute_force_solve(inst, lang, jobs);
    out << "assignment: " << assignment_str(s.assignment) << "\n";
    out << "cost: " << s.cost.to_string() << "\n";
    out << "feasible: " << (s.feasible ? "true" : "false") << "\n";
    return kOk;
}

int cmd_check_mm(const std::string& lang_path, const std::string& ops_path, std::ostream& out) {
    Language lang = load_language(lang_path);
    const int d = lang.domain_size();
    json ops = parse_json_file(ops_path);
    if (!ops.is_object()) throw ParseError(ops_path + ":/", "operations file must be an object");
    std::optional<PairSet> m_set;
    if (ops.contains("m_set")) {
        m_set.emplace();
        const json& m = ops["m_set"];
        if (!m.is_array()) throw ParseError(ops_path + ":/m_set", "expected an array of pairs");
        for (std::size_t i = 0; i < m.size(); ++i) {
            auto p = read_table(m[i], ops_path + ":/m_set/" + std::to_string(i));
            if (p.size() != 2 || p[0] == p[1] || p[0] < 0 || p[1] < 0 || p[0] >= d || p[1] >= d)
                throw ParseError(ops_path + ":/m_set/" + std::to_string(i), "expected a pair of distinct labels");
            m_set->insert(canonical_pair(p[0], p[1]));
        }
    }
    MmReport r;
    if (ops.contains("meet")) {
        OpPair pair{read_op(ops, "meet", d, 2, ops_path), read_op(ops, "join", d, 2, ops_path)};
        r = m_set ? check_structure(pair, *m_set) : MmReport{};
        if (r.holds) r = check_multimorphism(pair, lang);
    } else if (ops.contains("mj1")) {
        OpTriple t{read_op(ops, "mj1", d, 3, ops_path), read_op(ops, "mj2", d, 3, ops_path),
                   read_op(ops, "mn3", d, 3, ops_path)};
        r = m_set ? verify_mjn(t, lang, *m_set) : check_multimorphism(t, lang);
    } else if (ops.contains("op")) {
        const int arity = ops.value("arity", 0);
        if (arity < 1 || arity > 3) throw ParseError(ops_path + ":/arity", "arity must be 1, 2 or 3");
        r = check_polymorphism(read_op(ops, "op", d, arity, ops_path), lang);
    } else {
        throw ParseError(ops_path + ":/", "expected keys meet/join, mj1/mj2/mn3, or op/arity");
    }
    print_report(out, r);
    return r.holds ? kOk : kFailed;
}

int cmd_express(const std::string& lang_path, const BudgetFlags& b, std::optional<std::size_t> gadget, bool audit,
                std::ostream& out) {
    Language lang = load_language(lang_path);
    BinaryClosure c = binary_closure(lang, b.budget());
    if (gadget) {
        if (*gadget >= c.members.size())
            throw CapabilityError("closure has only " + std::to_string(c.members.size()) + " members");
        Gadget g = audit_gadget(c, *gadget, lang);
        json j;
        j["language"] = json::parse(to_json(g.language));
        j["instance"] = json::parse(to_json(g.instance));
        j["exposed"] = g.exposed;
        j["expresses"] = json::parse(to_json(Language(lang.domain_size(), {express_gadget(g)})))["functions"][0];
        out << j.dump(2) << "\n";
        return kOk;
    }
    std::vector<CostFunction> tables;
    for (const auto& m : c.members) tables.push_back(m.table);
    json j = json::parse(to_json(Language(lang.domain_size(), std::move(tables))));
    json prov = json::array();
    for (const auto& m : c.members) prov.push_back(provenance_json(m));
    j["provenance"] = std::move(prov);
    j["rounds_completed"] = c.rounds_completed;
    j["saturated"] = c.saturated;
    j["budget_exhausted"] = c.budget_exhausted;
    j["dropped_oversized"] = c.dropped_oversized;
    int status = kOk;
    if (audit) {
        json results = json::array();
        for (std::size_t i = 0; i < c.members.size(); ++i) {
            std::string why;
            bool ok = false;
            try {
                ok = audit_member(c, i, lang, &why);
            } catch (const CapabilityError& e) {
                why = e.what();
            }
            results.push_back(ok ? json("ok") : json(why));
            if (!ok) status = kFailed;
        }
        j["audit"] = std::move(results);
    }
    out << j.dump(2) << "\n";
    return status;
}

int cmd_graph(const std::string& lang_path, const BudgetFlags& b, const std::string& dot_path, std::ostream& out) {
    Language lang = load_language(lang_path);
    BinaryClosure c = binary_closure(lang, b.budget());
    PairGraph g = build_pair_graph(c);
    GraphCheck check = check_pair_graph(g);
    json j = json::parse(graph_to_json(g));
    json diag{{"symmetric", check.symmetric}, {"applicable", check.applicable},
              {"no_cross_edges", check.no_cross_edges}, {"no_soft_on_loops", check.no_soft_on_loops},
              {"violations", check.violations}, {"interpretation", check.interpretation()}};
    j["checks"] = std::move(diag);
    out << j.dump(2) << "\n";
    if (!dot_path.empty()) write_file(dot_path, graph_to_dot(g));
    return kOk;
}

int cmd_reduce(const std::string& mode, const std::vector<std::string>& files, std::ostream& out) {
    if (mode == "feas" || mode == "minhom" || mode == "bar") {
        if (files.size() != 1) throw ParseError("", "--mode " + mode + " takes one language file");
        out << to_json(derive_language(load_language(files[0]), derive_mode_from_string(mode)));
        return kOk;
    }
    if (mode != "cap" && mode != "minhom-reduce") throw ParseError("", "unknown mode '" + mode + "'");
    if (files.size() != 2) throw ParseError("", "--mode " + mode + " takes an instance file and a language file");
    Instance inst = load_instance(files[0]);
    Language lang = load_language(files[1]);
    json j;
    if (mode == "cap") {
        CapReduction r = cap_reduce(inst, lang);
        j["instance"] = json::parse(to_json(r.instance));
        j["language"] = json::parse(to_json(r.language));
        j["n"] = r.n;
        j["c"] = r.c.to_string();
        j["threshold"] = r.threshold().to_string();
    } else {
        MinHomReduction r = minhom_reduce(inst, lang);
        j["instance"] = json::parse(to_json(r.instance));
        j["language"] = json::parse(to_json(r.language));
        j["n"] = r.n;
        j["c"] = r.c.to_string();
        j["scale"] = r.scale().to_string();
    }
    out << j.dump(2) << "\n";
    return kOk;
}

int cmd_verify(const std::string& cert_path, const std::string& lang_path, std::ostream& out) {
    Language lang = load_language(lang_path);
    std::string text = read_file(cert_path);
    CertificateCheck c;
    try {
        c = verify_certificate(text, lang);
    } catch (const ParseError& e) {
        throw ParseError(cert_path + ":" + e.where(), e.message());
    }
    out << "verdict: " << to_string(c.verdict) << "\n" << c.message << "\n";
    return c.valid ? kOk : kFailed;
}

struct GenFlags {
    std::string what = "language";
    std::uint64_t seed = 0;
    int domain = 2;
    int functions = 2;
    int max_arity = 2;
    bool crisp = false;
    int inf_percent = 30;
    int max_cost = 5;
    std::string closure = "finite";
    std::string language;
    int vars = 4;
    int terms = 4;
};

int cmd_gen(const GenFlags& f, std::ostream& out) {
    std::mt19937_64 rng(f.seed);
    auto draw = [&](std::uint64_t n) { return rng() % n; };
    if (f.what == "language") {
        if (f.domain < 2 || f.domain > 8) throw CapabilityError("--domain must be in [2, 8]");
        if (f.max_arity < 1 || f.max_arity > 4) throw CapabilityError("--max-arity must be in [1, 4]");
        std::vector<CostFunction> fns;
        for (int i = 0; i < f.functions; ++i) {
            const int arity = 1 + static_cast<int>(draw(static_cast<std::uint64_t>(f.max_arity)));
            fns.push_back(CostFunction::tabulate(f.domain, arity, [&](const Tuple&) {
                if (static_cast<int>(draw(100)) < f.inf_percent) return Cost::infinity();
                if (f.crisp) return Cost(0);
                return Cost(static_cast<std::int64_t>(draw(static_cast<std::uint64_t>(f.max_cost) + 1)));
            }));
        }
        out << to_json(Language(f.domain, std::move(fns), unary_closure_from_string(f.closure)));
        return kOk;
    }
    if (f.what == "instance") {
        if (f.language.empty()) throw ParseError("", "gen instance needs --language");
        Language lang = load_language(f.language);
        if (lang.size() == 0) throw CapabilityError("the language has no functions to draw terms from");
        Instance inst;
        inst.num_vars = f.vars;
        for (int t = 0; t < f.terms; ++t) {
            const std::size_t fn = draw(lang.size());
            std::vector<int> scope;
            for (int k = 0; k < lang.function(fn).arity(); ++k)
                scope.push_back(static_cast<int>(draw(static_cast<std::uint64_t>(f.vars))));
            inst.terms.push_back({fn, std::move(scope)});
        }
        out << to_json(inst);
        return kOk;
    }
    throw ParseError("", "gen produces 'language' or 'instance', not '" + f.what + "'");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Conservative valued CSP toolkit: classification, certificates, solving and reductions", "vcsp"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    std::string lang_path, inst_path, cert_path, ops_path, dot_path, strategy, mode;
    std::vector<std::string> files;
    int max_domain = 4;
    unsigned jobs = 1;
    std::uint64_t seed = 0;
    std::optional<std::size_t> gadget;
    bool audit = false;
    BudgetFlags budgets;
    GenFlags gen;

    auto* classify_cmd = app.add_subcommand("classify", "Classify a conservative language as tractable or NP-hard");
    classify_cmd->add_option("language", lang_path, "Language file")->required();
    budgets.attach(classify_cmd);
    classify_cmd->add_option("--max-domain", max_domain, "Reject larger domains")->check(CLI::Range(2, 4));
    classify_cmd->add_option("--emit-certificate", cert_path, "Write the certificate here");
    classify_cmd->add_option("--strategy", strategy, "Majority search strategy")
        ->check(CLI::IsMember({"exhaustive", "backtracking"}));
    classify_cmd->add_option("--seed", seed, "Accepted for uniformity; classification uses no randomness");
    classify_cmd->add_option("--jobs", jobs, "Worker threads (classification runs single-threaded)");

    auto* solve_cmd = app.add_subcommand("solve", "Exact brute-force minimization");
    solve_cmd->add_option("instance", inst_path, "Instance file")->required();
    solve_cmd->add_option("language", lang_path, "Language file")->required();
    solve_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 64));

    auto* mm_cmd = app.add_subcommand("check-mm", "Check operations as a multimorphism or polymorphism");
    mm_cmd->add_option("language", lang_path, "Language file")->required();
    mm_cmd->add_option("--ops", ops_path,
                       "Operations file: {meet, join}, {mj1, mj2, mn3} or {op, arity}; optional m_set")
        ->required();

    auto* express_cmd = app.add_subcommand("express", "Print the budgeted binary closure with provenance");
    express_cmd->add_option("language", lang_path, "Language file")->required();
    budgets.attach(express_cmd);
    express_cmd->add_option("--gadget", gadget, "Print the audit gadget of one member instead");
    express_cmd->add_flag("--audit", audit, "Re-evaluate every member's gadget");

    auto* graph_cmd = app.add_subcommand("graph", "Build the pair graph and run its structural checks");
    graph_cmd->add_option("language", lang_path, "Language file")->required();
    budgets.attach(graph_cmd);
    graph_cmd->add_option("--dot", dot_path, "Also write a Graphviz rendering");

    auto* reduce_cmd = app.add_subcommand("reduce", "Language and instance transformations");
    reduce_cmd->add_option("--mode", mode, "feas | minhom | bar | cap | minhom-reduce")
        ->required()
        ->check(CLI::IsMember({"feas", "minhom", "bar", "cap", "minhom-reduce"}));
    reduce_cmd->add_option("files", files, "Language file, or instance and language files")->required();

    auto* verify_cmd = app.add_subcommand("verify", "Replay a certificate against its language");
    verify_cmd->add_option("certificate", cert_path, "Certificate file")->required();
    verify_cmd->add_option("language", lang_path, "Language file")->required();

    auto* gen_cmd = app.add_subcommand("gen", "Generate a random language or instance");
    gen_cmd->add_option("what", gen.what, "language | instance")->check(CLI::IsMember({"language", "instance"}));
    gen_cmd->add_option("--seed", gen.seed, "Random seed");
    gen_cmd->add_option("--domain", gen.domain, "Domain size");
    gen_cmd->add_option("--functions", gen.functions, "Number of functions")->check(CLI::NonNegativeNumber);
    gen_cmd->add_option("--max-arity", gen.max_arity, "Largest arity");
    gen_cmd->add_flag("--crisp", gen.crisp, "Only 0 and inf entries");
    gen_cmd->add_option("--inf-percent", gen.inf_percent, "Chance of an infinite entry")->check(CLI::Range(0, 100));
    gen_cmd->add_option("--max-cost", gen.max_cost, "Largest finite entry")->check(CLI::NonNegativeNumber);
    gen_cmd->add_option("--closure", gen.closure, "none | finite | general")
        ->check(CLI::IsMember({"none", "finite", "general"}));
    gen_cmd->add_option("--language", gen.language, "Language to draw instance terms from");
    gen_cmd->add_option("--vars", gen.vars, "Instance variables")->check(CLI::PositiveNumber);
    gen_cmd->add_option("--terms", gen.terms, "Instance terms")->check(CLI::NonNegativeNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        const CLI::App* target = &app;
        for (const CLI::App* sc : app.get_subcommands()) target = sc;
        out << target->help();
        return kOk;
    } catch (const CLI::CallForVersion&) {
        out << kToolVersion << "\n";
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    }

    try {
        if (classify_cmd->parsed()) return cmd_classify(lang_path, budgets, max_domain, cert_path, strategy, out);
        if (solve_cmd->parsed()) return cmd_solve(inst_path, lang_path, jobs, out);
        if (mm_cmd->parsed()) return cmd_check_mm(lang_path, ops_path, out);
        if (express_cmd->parsed()) return cmd_express(lang_path, budgets, gadget, audit, out);
        if (graph_cmd->parsed()) return cmd_graph(lang_path, budgets, dot_path, out);
        if (reduce_cmd->parsed()) return cmd_reduce(mode, files, out);
        if (verify_cmd->parsed()) return cmd_verify(cert_path, lang_path, out);
        if (gen_cmd->parsed()) return cmd_gen(gen, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kBadInput;
    } catch (const StructuralError& e) {
        err << "invalid input: " << e.what() << "\n";
        return kBadInput;
    } catch (const CapabilityError& e) {
        err << "capability error: " << e.what() << "\n";
        return kCapability;
    }
    return kBadInput;
}

} // namespace vcsp::cli
