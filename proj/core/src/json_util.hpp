#ifndef VCSP_JSON_UTIL_HPP
#define VCSP_JSON_UTIL_HPP

// Private to the core library: shared conversions between core types and JSON.

#include "vcsp/cost_function.hpp"
#include "vcsp/error.hpp"
#include "vcsp/language.hpp"

#include <json.hpp>

#include <string>

namespace vcsp::detail {

using json = nlohmann::ordered_json;

json cost_to_json(const Cost& c);
Cost cost_from_json(const json& j, const std::string& where);

json function_to_json(const CostFunction& f);
CostFunction function_from_json(const json& j, int domain_size, const std::string& where);

json language_to_json(const Language& lang);
Language language_from_json(const json& j, const std::string& where);

json instance_to_json(const Instance& inst);
Instance instance_from_json(const json& j, const std::string& where);

json tuple_to_json(const Tuple& t);

/// Parses text, translating syntax errors into ParseError("byte N", ...).
json parse_text(std::string_view text);

const json& require(const json& j, const char* key, const std::string& where);
std::int64_t require_int(const json& j, const std::string& where);

} // namespace vcsp::detail

#endif // VCSP_JSON_UTIL_HPP
