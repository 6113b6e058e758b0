#pragma once

// Rational functions in t over Q, multiplicity tables of symmetric and
// exterior powers, and the multiplicity generating functions
// <chi_j, S_t(chi)> and <chi_j, lambda_t(chi)> as series and in closed form.

#include "lambdachar/group.hpp"
#include "lambdachar/polynomial.hpp"

#include <string>
#include <vector>

namespace lambdachar {

using PolyRat = Polynomial<Rational>;
using PolyCyc = Polynomial<Cyclotomic>;

std::string to_string(const PolyRat& p, const std::string& var = "t");

// num/den with gcd(num, den) = 1 and den(0) = 1.
class RationalFunction {
public:
    RationalFunction() : den_(Rational(1)) {}
    RationalFunction(const PolyRat& num) : num_(num), den_(Rational(1)) {}
    // Throws std::domain_error when den is zero or vanishes at t = 0 after
    // cancellation (no power-series expansion exists).
    RationalFunction(const PolyRat& num, const PolyRat& den);

    const PolyRat& num() const { return num_; }
    const PolyRat& den() const { return den_; }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    // "num / (den)" with both polynomials expanded.
    std::string to_string() const;

    // Denominator written as a product of (1 - t^a)^e where possible, e.g.
    // "1 / ((1 - t^2)(1 - t^3))"; leftover factors are printed expanded.
    std::string to_factored_string() const;

private:
    PolyRat num_;
    PolyRat den_;
};

// Coefficients 0..m of the expansion of rf at t = 0.
std::vector<Rational> series_of_rational(const RationalFunction& rf, int m);

// Factorization of a polynomial with constant term 1 into the factors
// 1 - t^a. Cyclotomic factors are found by trial division and grouped
// greedily, largest a first; `rest` holds what does not factor this way.
struct PowerFactorization {
    std::vector<std::pair<int, int>> factors; // (a, exponent), a ascending
    PolyRat rest;
};
PowerFactorization factor_one_minus_powers(const PolyRat& p);

enum class PowerOp { sym, ext };

enum class Certify { none, genuine };

struct MultiplicityTable {
    PowerOp op = PowerOp::sym;
    std::vector<MultiplicityVector> rows; // rows[i] = decomposition of S^i or lambda^i

    // Column j as a series in t.
    std::vector<Rational> column(int j) const;
};

// Rows 0..m of the decomposition of S^i(chi) or lambda^i(chi). With
// Certify::genuine every entry must be a nonnegative integer (NonIntegral or
// NotACharacter otherwise) and exterior powers must vanish above the degree.
MultiplicityTable multiplicity_table(const ClassFunction& chi, const CharacterTable& ct, PowerOp op, int m,
                                     Certify certify = Certify::genuine);

// Coefficients 0..m of <chi_j, S_t(chi)> or <chi_j, lambda_t(chi)> summed
// class by class from per-class series, independent of the table route.
std::vector<Rational> genfun_series(const ClassFunction& chi, const CharacterTable& ct, int j, PowerOp op, int m);

// genfun_series for every j at once, sharing the per-class series.
std::vector<std::vector<Rational>> genfun_series_all(const ClassFunction& chi, const CharacterTable& ct, PowerOp op,
                                                     int m);

// Exact closed form of the same generating function. Throws
// NotRationalCoefficients if the class sum fails to certify over Q.
RationalFunction genfun_rational(const ClassFunction& chi, const CharacterTable& ct, int j, PowerOp op);

// genfun_rational for every j at once, sharing the per-class products.
std::vector<RationalFunction> genfun_rational_all(const ClassFunction& chi, const CharacterTable& ct, PowerOp op);

// The same closed form summed directly in Q(zeta)[t] with a polynomial gcd
// at each step; slower, kept as an independent route.
RationalFunction genfun_rational_field_gcd(const ClassFunction& chi, const CharacterTable& ct, int j);

// Eigenvalue multiplicities of a genuine character at class c: entry a is
// the multiplicity of zeta_N^a, N = exponent. Returns an empty vector when
// the Fourier inversion is not a nonnegative integer vector.
std::vector<long> eigenvalue_multiplicities(const ClassFunction& chi, int c);

} // namespace lambdachar
