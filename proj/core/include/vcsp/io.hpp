#ifndef VCSP_IO_HPP
#define VCSP_IO_HPP

#include "vcsp/language.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace vcsp {

// Language file:
//   { "domain_size": d, "unary_closure": "none"|"finite"|"general",
//     "functions": [ { "arity": m, "table": [cost, ...] } ] }
// Instance file:
//   { "num_vars": n, "terms": [ { "fn": i, "scope": [v, ...] } ] }
// A cost is a JSON integer, a string "p/q", or "inf". Floats are rejected.
//
// Parse failures throw ParseError whose where() is "byte N" for syntax errors
// or a JSON pointer such as "/functions/1/table/3" for schema errors.

Language parse_language(std::string_view text);
std::string to_json(const Language& lang);

Instance parse_instance(std::string_view text);
std::string to_json(const Instance& instance);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

Language load_language(const std::filesystem::path& path);
Instance load_instance(const std::filesystem::path& path);

std::uint64_t fnv1a64(std::string_view bytes);
/// Stable 16-hex-digit fingerprint of the canonical serialization.
std::string language_hash(const Language& lang);

} // namespace vcsp

#endif // VCSP_IO_HPP
