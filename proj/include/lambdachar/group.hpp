#pragma once

// Conjugacy-class skeletons, class functions, character tables, and the
// inner product on class functions.

#include "lambdachar/cyclotomic.hpp"
#include "lambdachar/rational.hpp"

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace lambdachar {

// Class-level data of a finite group. Class 0 is always the identity.
struct ClassData {
    long group_order = 1;
    int exponent = 1;
    std::vector<std::string> names;
    std::vector<long> sizes;
    std::vector<int> rep_orders;
    std::vector<int> inverse_class;
    // prime p -> (class of g) |-> (class of g^p). Every prime below the
    // exponent is expected here so that power_map works for all n.
    std::map<int, std::vector<int>> prime_power_maps;

    int class_count() const { return static_cast<int>(sizes.size()); }

    // Index of the class with this name, or -1.
    int index_of(std::string_view name) const;

    friend bool operator==(const ClassData&, const ClassData&) = default;
};

using ClassDataPtr = std::shared_ptr<const ClassData>;

// Structural violations of the class-data invariants; empty when valid.
std::vector<std::string> check_class_data(const ClassData& cd);

// Class map c -> class of g^n for g in c. n is reduced mod the exponent
// first; n = 0 mod exponent sends everything to class 0.
std::vector<int> power_map(const ClassData& cd, long n);

// Least n >= 1 with power_map(n)(c) in the given class set.
int order_modulo(const ClassData& cd, int c, const std::vector<bool>& in_subgroup);

std::vector<int> primes_up_to(int n);

// Distinct prime factors in increasing order.
std::vector<long> prime_factors(long n);

// A function on classes with values in Q(zeta).
class ClassFunction {
public:
    ClassFunction() = default;
    ClassFunction(ClassDataPtr classes, std::vector<Cyclotomic> values);

    static ClassFunction constant(ClassDataPtr classes, const Cyclotomic& value);
    static ClassFunction zero(ClassDataPtr classes) { return constant(std::move(classes), Cyclotomic(0)); }

    const ClassDataPtr& classes() const { return classes_; }
    const std::vector<Cyclotomic>& values() const { return values_; }
    const Cyclotomic& operator[](int c) const { return values_[static_cast<std::size_t>(c)]; }
    int size() const { return static_cast<int>(values_.size()); }

    bool is_zero() const;

    ClassFunction& operator+=(const ClassFunction& o);
    ClassFunction& operator-=(const ClassFunction& o);
    ClassFunction& operator*=(const ClassFunction& o);
    friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
    friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
    friend ClassFunction operator*(ClassFunction a, const ClassFunction& b) { return a *= b; }
    friend ClassFunction operator*(const Cyclotomic& s, ClassFunction f);
    ClassFunction operator-() const;
    friend bool operator==(const ClassFunction& a, const ClassFunction& b);

    // Values joined as "(v0, v1, ...)".
    std::string to_string() const;

private:
    void require_same(const ClassFunction& o) const;

    ClassDataPtr classes_;
    std::vector<Cyclotomic> values_;
};

bool same_classes(const ClassDataPtr& a, const ClassDataPtr& b);

// Irreducible characters over a class skeleton.
struct CharacterTable {
    std::string name;
    ClassDataPtr classes;
    std::vector<std::string> irr_names;
    std::vector<ClassFunction> irreducibles;
    int root_order = 1;

    int size() const { return static_cast<int>(irreducibles.size()); }
    int index_of(std::string_view irr_name) const;
    const ClassFunction& irr(int j) const { return irreducibles[static_cast<std::size_t>(j)]; }
};

// Coefficients of a class function against an irreducible basis.
struct MultiplicityVector {
    std::vector<Rational> coeffs;

    bool is_integral() const;
    bool is_nonnegative() const;
    friend bool operator==(const MultiplicityVector&, const MultiplicityVector&) = default;
};

// (1/|G|) * sum_c sizes[c] f(c) f2(inverse(c)). Throws MismatchedClasses.
Cyclotomic inner_product(const ClassFunction& f, const ClassFunction& f2);

// Multiplicities <chi_j, f>. Throws NonRationalMultiplicity when one is not
// rational and InvalidTable when the reconstruction differs from f.
MultiplicityVector decompose(const ClassFunction& f, const CharacterTable& ct);

// sum_j coeffs[j] chi_j
ClassFunction combine(const CharacterTable& ct, const MultiplicityVector& m);

// One named identity checked by a validation pass.
struct Check {
    std::string name;
    bool ok = true;
    std::string detail;
};

struct ValidationReport {
    std::vector<Check> checks;

    bool ok() const;
    void add(std::string name, bool ok, std::string detail = {});
    std::vector<std::string> failures() const;
};

// Checks class invariants, degrees, both orthogonality relations, inverse
// versus conjugation, power maps versus the Galois action, and integrality
// of Adams operations on irreducibles.
ValidationReport validate_table(const CharacterTable& ct);

// Fills power maps for primes below the exponent that do not divide it,
// using chi(g^q) = sigma_q(chi(g)). Maps already present are kept.
void derive_coprime_power_maps(ClassData& cd, const std::vector<std::vector<Cyclotomic>>& irr_values);

} // namespace lambdachar
