#pragma once

// Group-spec files: a line-based text format for character tables with
// optional generators, normal subgroups, central characters and quotient
// maps, plus an equivalent JSON form used by the machine output format.
// The grammar is documented in README.md.

#include "lambdachar/builtins.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace lambdachar {

inline constexpr int spec_format_version = 1;

// Parses the text format. Syntax errors throw InputError with
// "source:line: message". With validate set, validate_table failures throw
// InvalidTable listing every failed check with the lines involved.
GroupBundle parse_spec(std::string_view text, const std::string& source = "<input>", bool validate = true);

GroupBundle load_spec_file(const std::string& path, bool validate = true);

// Text form; parse_spec(write_spec(b)) reproduces b.
std::string write_spec(const GroupBundle& b);

// JSON form with the same content; bundle_from_json inverts bundle_to_json.
nlohmann::json bundle_to_json(const GroupBundle& b);
GroupBundle bundle_from_json(const nlohmann::json& j, bool validate = true);

// A cyclotomic value as [[exponent, numerator, denominator], ...] at the
// given root order, and back.
nlohmann::json cyclotomic_to_json(const Cyclotomic& x, int root_order);
Cyclotomic cyclotomic_from_json(const nlohmann::json& j, int root_order);

} // namespace lambdachar
