#pragma once

// Command-line front end: group resolution, character expressions and the
// decompose, genfun, closedform, verify and export commands. Every command
// writes deterministic output in plain, csv or machine (JSON) form.

#include "lambdachar/builtins.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace lambdachar {

inline constexpr int exit_ok = 0;
inline constexpr int exit_verification_failed = 1;
inline constexpr int exit_input_error = 2;

// Largest degree accepted by the series commands.
inline constexpr int max_cli_degree = 500;

// A resolved group selector.
struct GroupContext {
    GroupBundle bundle;
    std::optional<FamilyParams> family;    // set for builtin selectors
    std::optional<ClassFunction> natural;  // permutation character when generators are known
    bool generators_only = false;          // table identified from --generators alone
};

// Resolves a builtin selector or spec-file path, optionally paired with
// generators. With generators and no group, the table is identified among
// the builtins of the same order and characters are limited to regular and
// natural. Throws InputError (or InvalidTable when validate is set).
GroupContext resolve_group(const std::string& group, const std::vector<std::string>& generators, bool validate = true);

// Parses "2*chi3 - chi1", "regular", "natural", "taup:k", "pi:<normal>" or
// "zeta0:<central>" and sums of these with integer or rational coefficients.
ClassFunction parse_character(const std::string& expr, const GroupContext& g);

// Runs the CLI; argv[0] is the program name. Returns the exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace lambdachar
