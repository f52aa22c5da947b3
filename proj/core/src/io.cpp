#include "vcsp/io.hpp"

#include "json_util.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace vcsp {

namespace detail {

json cost_to_json(const Cost& c) {
    if (c.is_infinite()) return "inf";
    if (c.value().is_integer()) return c.value().num();
    return c.value().to_string();
}

Cost cost_from_json(const json& j, const std::string& where) {
    try {
        if (j.is_number_integer() || j.is_number_unsigned()) {
            if (j.is_number_integer() && j.get<std::int64_t>() < 0)
                throw ParseError(where, "costs must be non-negative");
            return Cost(Rational(j.get<std::int64_t>()));
        }
        if (j.is_number_float()) throw ParseError(where, "real-valued costs are not accepted; use \"p/q\"");
        if (j.is_string()) return Cost::parse(j.get<std::string>());
    } catch (const ParseError& e) {
        if (!e.where().empty()) throw;
        throw ParseError(where, e.message());
    }
    throw ParseError(where, "cost must be an integer, \"p/q\" or \"inf\"");
}

json function_to_json(const CostFunction& f) {
    json table = json::array();
    for (const Cost& c : f.table()) table.push_back(cost_to_json(c));
    return json{{"arity", f.arity()}, {"table", std::move(table)}};
}

CostFunction function_from_json(const json& j, int domain_size, const std::string& where) {
    if (!j.is_object()) throw ParseError(where, "function must be an object");
    auto arity = require_int(require(j, "arity", where), where + "/arity");
    const json& table = require(j, "table", where);
    if (!table.is_array()) throw ParseError(where + "/table", "table must be an array");
    if (arity < 1 || arity > 20) throw ParseError(where + "/arity", "arity out of range");
    std::vector<Cost> costs;
    costs.reserve(table.size());
    for (std::size_t i = 0; i < table.size(); ++i)
        costs.push_back(cost_from_json(table[i], where + "/table/" + std::to_string(i)));
    try {
        return CostFunction(domain_size, static_cast<int>(arity), std::move(costs));
    } catch (const StructuralError& e) {
        throw ParseError(where, e.what());
    }
}

json language_to_json(const Language& lang) {
    json fns = json::array();
    for (const auto& f : lang.functions()) fns.push_back(function_to_json(f));
    return json{{"domain_size", lang.domain_size()},
                {"unary_closure", std::string(to_string(lang.unary_closure()))},
                {"functions", std::move(fns)}};
}

Language language_from_json(const json& j, const std::string& where) {
    if (!j.is_object()) throw ParseError(where.empty() ? "/" : where, "language must be an object");
    auto d = require_int(require(j, "domain_size", where), where + "/domain_size");
    if (d < 2 || d > 64) throw ParseError(where + "/domain_size", "domain_size must be in [2, 64]");
    UnaryClosure closure = UnaryClosure::None;
    if (j.contains("unary_closure")) {
        const json& c = j["unary_closure"];
        if (!c.is_string()) throw ParseError(where + "/unary_closure", "must be a string");
        try {
            closure = unary_closure_from_string(c.get<std::string>());
        } catch (const ParseError& e) {
            throw ParseError(where + "/unary_closure", e.message());
        }
    }
    std::vector<CostFunction> fns;
    if (j.contains("functions")) {
        const json& arr = j["functions"];
        if (!arr.is_array()) throw ParseError(where + "/functions", "must be an array");
        for (std::size_t i = 0; i < arr.size(); ++i)
            fns.push_back(function_from_json(arr[i], static_cast<int>(d), where + "/functions/" + std::to_string(i)));
    }
    return Language(static_cast<int>(d), std::move(fns), closure);
}

json instance_to_json(const Instance& inst) {
    json terms = json::array();
    for (const auto& t : inst.terms) terms.push_back(json{{"fn", t.fn}, {"scope", t.scope}});
    return json{{"num_vars", inst.num_vars}, {"terms", std::move(terms)}};
}

Instance instance_from_json(const json& j, const std::string& where) {
    if (!j.is_object()) throw ParseError(where.empty() ? "/" : where, "instance must be an object");
    Instance inst;
    auto n = require_int(require(j, "num_vars", where), where + "/num_vars");
    if (n < 0 || n > 1'000'000) throw ParseError(where + "/num_vars", "num_vars out of range");
    inst.num_vars = static_cast<int>(n);
    const json& terms = require(j, "terms", where);
    if (!terms.is_array()) throw ParseError(where + "/terms", "must be an array");
    for (std::size_t t = 0; t < terms.size(); ++t) {
        std::string tw = where + "/terms/" + std::to_string(t);
        Term term;
        auto fn = require_int(require(terms[t], "fn", tw), tw + "/fn");
        if (fn < 0) throw ParseError(tw + "/fn", "negative function index");
        term.fn = static_cast<std::size_t>(fn);
        const json& scope = require(terms[t], "scope", tw);
        if (!scope.is_array()) throw ParseError(tw + "/scope", "must be an array");
        for (std::size_t k = 0; k < scope.size(); ++k) {
            auto v = require_int(scope[k], tw + "/scope/" + std::to_string(k));
            if (v < 0 || v >= n) throw ParseError(tw + "/scope/" + std::to_string(k), "variable out of range");
            term.scope.push_back(static_cast<int>(v));
        }
        inst.terms.push_back(std::move(term));
    }
    return inst;
}

json tuple_to_json(const Tuple& t) { return json(t); }

json parse_text(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("byte " + std::to_string(e.byte), e.what());
    }
}

const json& require(const json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(where.empty() ? "/" : where, std::string("missing key '") + key + "'");
    return j[key];
}

std::int64_t require_int(const json& j, const std::string& where) {
    if (!j.is_number_integer() && !j.is_number_unsigned()) throw ParseError(where, "expected an integer");
    return j.get<std::int64_t>();
}

} // namespace detail

Language parse_language(std::string_view text) { return detail::language_from_json(detail::parse_text(text), ""); }

std::string to_json(const Language& lang) { return detail::language_to_json(lang).dump(2) + "\n"; }

Instance parse_instance(std::string_view text) { return detail::instance_from_json(detail::parse_text(text), ""); }

std::string to_json(const Instance& instance) { return detail::instance_to_json(instance).dump(2) + "\n"; }

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path.string(), "cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw StructuralError("cannot write " + path.string());
    out << content;
}

namespace {

template <class Fn>
auto with_file_context(const std::filesystem::path& path, Fn&& fn) {
    std::string text = read_file(path);
    try {
        return fn(text);
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ":" + e.where(), e.message());
    }
}

} // namespace

Language load_language(const std::filesystem::path& path) {
    return with_file_context(path, [](const std::string& t) { return parse_language(t); });
}

Instance load_instance(const std::filesystem::path& path) {
    return with_file_context(path, [](const std::string& t) { return parse_instance(t); });
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string language_hash(const Language& lang) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(detail::language_to_json(lang).dump())));
    return buf;
}

} // namespace vcsp
