#pragma once

// Built-in groups with exact character tables: S3, A4, G21, S4, A5 and the
// families D2n, Q4n, Hp. Also the closed-form propositions for the
// two-dimensional family characters and permutation models of each group.

#include "lambdachar/closed_forms.hpp"
#include "lambdachar/genfun.hpp"
#include "lambdachar/group.hpp"
#include "lambdachar/permgroup.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lambdachar {

enum class Family { S3, A4, G21, S4, A5, D2n, Q4n, Hp };

// Largest accepted family parameters for table construction.
inline constexpr int max_d2n_parameter = 50;
inline constexpr int max_q4n_parameter = 25;
inline constexpr int max_hp_parameter = 7;

struct FamilyParams {
    Family family = Family::S3;
    std::optional<int> parameter;

    // Accepts "S3", "A4", "G21", "S4", "A5", "D2n:n", "Q4n:n", "Hp:p".
    // Throws InputError on unknown names or invalid parameters.
    static FamilyParams parse(std::string_view selector);

    // The selector form, e.g. "D2n:6".
    std::string to_string() const;

    friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

// Throws InputError unless the parameter fits the family.
void check_params(const FamilyParams& params);

// Every builtin selector with a representative parameter set used by the
// property suites: the five fixed groups plus small family members.
std::vector<FamilyParams> sample_builtins();

// Validated character table in the class and character order of the
// standard listings. Throws InputError on invalid parameters.
CharacterTable get_group(const FamilyParams& params);

// A character table together with the normal subgroups, central characters
// and quotient maps known for it.
struct QuotientMap {
    std::string target;         // group selector of the quotient
    std::string via;            // name of the kernel in normal_subgroups
    std::vector<int> class_map; // class of G -> class of G/N
};

struct GroupBundle {
    CharacterTable table;
    std::vector<NormalSubgroupSpec> normal_subgroups;
    std::vector<CentralCharSpec> central_chars;
    std::vector<QuotientMap> quotients;
    std::vector<std::string> generators; // cycle notation, may be empty
};

GroupBundle get_bundle(const FamilyParams& params);

// Multiplicity vector in table order, e.g. "2*chi1 + chi2" or "0".
std::string format_decomposition(const MultiplicityVector& m, const CharacterTable& ct);

// Formal integer (or rational, for Hp) combination of irreducible names.
struct TauFamilyExpr {
    std::map<std::string, Rational> terms;

    void add(const std::string& name, const Rational& c);
    MultiplicityVector to_multiplicities(const CharacterTable& ct) const;
    // Terms in table order, e.g. "tau1 + chi1" or "0".
    std::string to_string(const CharacterTable& ct) const;
};

// The class function tau'_k of D2n or Q4n, defined for every integer k.
ClassFunction tau_prime(const CharacterTable& ct, const FamilyParams& params, long k);

// Irreducible names that tau'_k resolves to: tau_j, chi1 + chi2 for k = 0
// mod the period, and the two one-dimensional characters at the midpoint.
TauFamilyExpr normalize_tau(const FamilyParams& params, long k);

// Closed form of S^n or lambda^n of tau'_k (D2n, Q4n) or tau_s (Hp), fully
// normalized to irreducible names. Throws InputError for other families.
TauFamilyExpr family_closed_form(const FamilyParams& params, long k_or_s, PowerOp op, int n);

// A permutation group whose classes match the builtin's classes.
struct PermModel {
    GeneratedGroup group;
    ConjugacyClasses classes;
    std::vector<int> class_map; // builtin class c -> model class
};

// Throws NoModel when the family has no model in range.
PermModel get_perm_model(const FamilyParams& params);

} // namespace lambdachar
