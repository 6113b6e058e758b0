#pragma once

// Cross-checks between independent routes: table validity, closed forms
// against the general engine, per-class series against table
// decompositions, quotient transfer, and permutation models.

#include "lambdachar/builtins.hpp"
#include "lambdachar/closed_forms.hpp"
#include "lambdachar/group.hpp"

#include <functional>
#include <optional>
#include <string>

namespace lambdachar {

struct VerifyOptions {
    int closed_form_degree_cap = 30; // closed forms are checked to min(2|G/N|, cap)
    int dual_route_degree = 25;
    bool dual_route = true;
    int transfer_degree = 10;
    int onedim_degree = 12;
    int dimension_degree = 10;
};

// Sum_j d_j m_ij = C(d+i-1, i) and sum_j d_j n_ij = C(d, i) per irreducible.
void check_dimension_sums(ValidationReport& r, const CharacterTable& ct, int degree);

// Table route versus per-class series route, plus the rational closed form
// expanded back to a series, for irreducible i.
void check_dual_route(ValidationReport& r, const CharacterTable& ct, int i, int degree);

// Burnside closed forms for m * Pi(G/N) against the engine.
void check_burnside(ValidationReport& r, const CharacterTable& ct, const NormalSubgroupSpec& n, long m, int degree,
                    int shortcut_degree);

// Central-character closed forms against the engine.
void check_central(ValidationReport& r, const CharacterTable& ct, const CentralCharSpec& spec, int degree);

// One-dimensional closed forms for irreducible j against the engine.
void check_onedim(ValidationReport& r, const CharacterTable& ct, int j, int degree);

// Inner products, transfer identities and pointwise commutation of the
// pullback with psi, lambda and S.
void check_transfer(ValidationReport& r, const QuotientPullback& pb, int degree, const std::string& label);

// Derived class data matches the table's classes under some relabeling, and
// the natural character is a genuine character.
void check_permutation_model(ValidationReport& r, const CharacterTable& ct, const std::vector<std::string>& generators);

// Resolves a quotient selector to its table; nullopt if unknown.
using QuotientResolver = std::function<std::optional<CharacterTable>(const std::string&)>;

// Every check above for every spec attached to the bundle.
ValidationReport verify_bundle(const GroupBundle& b, const VerifyOptions& opt, const QuotientResolver& resolve);

} // namespace lambdachar
