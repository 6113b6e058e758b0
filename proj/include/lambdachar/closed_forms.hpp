#pragma once

// Shortcut formulas for special characters: one-dimensional characters,
// permutation characters of G on G/N, extensions by zero of central
// one-dimensional characters, binomial series, and pullback along a
// quotient map. Each result can be compared with the general engine.

#include "lambdachar/genfun.hpp"
#include "lambdachar/group.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lambdachar {

// A normal subgroup given as a union of classes.
struct NormalSubgroupSpec {
    std::string name;
    std::vector<int> class_indices;
    long quotient_order = 1;

    std::vector<bool> membership(int class_count) const;
};

// Violations of the subgroup invariants (contains class 0, closed under
// inversion and power maps, order divides |G|); empty when valid.
std::vector<std::string> check_normal_subgroup(const ClassData& cd, const NormalSubgroupSpec& n);

// Builds a spec with quotient_order filled in; throws InvalidSubgroup.
NormalSubgroupSpec make_normal_subgroup(const ClassData& cd, std::vector<int> classes, std::string name = {});

// O_N(c): the order of the image of a representative of c in G/N.
int quotient_element_order(const ClassData& cd, const NormalSubgroupSpec& n, int c);

// A one-dimensional character zeta of N (values on N's classes) with a
// multiplier m; m * zeta_0 is the class function studied.
struct CentralCharSpec {
    std::string name;
    NormalSubgroupSpec subgroup;
    std::map<int, Cyclotomic> zeta;
    long multiplier = 1;
};

std::vector<std::string> check_central_spec(const ClassData& cd, const CentralCharSpec& spec);

// zeta extended by zero outside N.
ClassFunction zeta_zero(const ClassDataPtr& cd, const CentralCharSpec& spec);

// Coefficients 0..m of (1 + sign * t^a)^(exponent_sign * r).
std::vector<Rational> binomial_series(const Rational& r, int a, int sign, int exponent_sign, int m);

struct OneDimForms {
    int order = 1;                            // multiplicative order q of chi
    std::vector<int> power_index;             // chi^i is irreducible power_index[i], i = 0..q-1
    std::vector<RationalFunction> sym;        // <chi_j, S_t(chi)> = t^i / (1 - t^q) when chi^i = chi_j
    std::vector<RationalFunction> ext;        // <chi_j, lambda_t(chi)> from lambda_t = 1 + chi t
    ClassFunction sym_power(int n) const;     // S^n(chi) = chi^n
    ClassFunction lambda_power(int n) const;  // chi, 1, then zero
    ClassFunction chi;
};

// Throws NotOneDimensional unless chi(e) = 1 and chi is a table row.
OneDimForms onedim_forms(const ClassFunction& chi, const CharacterTable& ct);

// m * Pi with Pi = |G/N| on N and 0 elsewhere.
ClassFunction perm_quotient_character(const ClassDataPtr& cd, const NormalSubgroupSpec& n, long m);

struct BurnsideForms {
    long quotient_order = 1;
    long multiplier = 1;
    ClassFunction pi;                      // Pi for m = 1
    ClassFunction character;               // m * Pi
    std::vector<int> orbit_orders;         // O_N(c)
    std::vector<PolyRat> lambda_t;         // (1 - (-t)^h)^(m|G/N|/h)
    std::vector<RationalFunction> sym_t;   // (1 - t^h)^(-m|G/N|/h)

    // Shortcut for gcd(n, |G/N|) = 1; nullopt otherwise.
    std::optional<ClassFunction> sym_power(int n) const;
    std::optional<ClassFunction> lambda_power(int n) const;
};

BurnsideForms burnside_regular_forms(const ClassDataPtr& cd, const NormalSubgroupSpec& n, long m);

struct CentralForms {
    long quotient_order = 1;
    long multiplier = 1;
    ClassFunction zeta0;
    ClassFunction character;                        // m * zeta_0
    std::vector<int> orbit_orders;                  // O_N(c)
    std::vector<Cyclotomic> zeta_at_power;          // zeta(g^h) for h = O_N(c)
    std::vector<std::optional<PolyCyc>> lambda_t;   // (1 - zeta(g^h)(-t)^h)^(m/h) when h | m

    // Per-class lambda_t; throws NonIntegerExponent when h does not divide m.
    const PolyCyc& lambda_t_at(int c) const;
    // Coefficients 0..mdeg of S_t(m zeta_0)(c) = (1 - zeta(g^h) t^h)^(-m/h).
    std::vector<Cyclotomic> sym_series_at(int c, int mdeg) const;

    std::optional<ClassFunction> sym_power(int n) const;
    std::optional<ClassFunction> lambda_power(int n) const;
};

// Throws InvalidSubgroup when the spec breaks its invariants.
CentralForms central_forms(const ClassDataPtr& cd, const CentralCharSpec& spec);

// Pullback along a surjection of class sets G -> Q = G/N.
class QuotientPullback {
public:
    // Throws MapInconsistent listing every failed compatibility condition.
    QuotientPullback(CharacterTable g, CharacterTable q, std::vector<int> class_map);

    const CharacterTable& group() const { return g_; }
    const CharacterTable& quotient() const { return q_; }
    const std::vector<int>& class_map() const { return map_; }

    // f o pi
    ClassFunction pull(const ClassFunction& f) const;

    // <f1, f2>_Q = <pull f1, pull f2>_G for all pairs of irreducibles of Q.
    bool preserves_inner_products() const;

    // <pull phi_j, S^i(pull chi')>_G = <phi_j, S^i(chi')>_Q (or lambda^i) for i <= m.
    bool transfer_holds(const ClassFunction& chi_q, int j, PowerOp op, int m) const;

private:
    CharacterTable g_, q_;
    std::vector<int> map_;
};

} // namespace lambdachar
