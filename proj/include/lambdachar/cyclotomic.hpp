#pragma once

// Exact elements of the cyclotomic field Q(zeta_N).
//
// A value of order N is stored as phi(N) rational coefficients over the
// power basis 1, z, ..., z^(phi(N)-1) modulo the cyclotomic polynomial
// Phi_N. Operands of different orders are lifted to the lcm order, so mixing
// plain rationals (order 1) with table values is free of ceremony.

#include "lambdachar/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace lambdachar {

class Cyclotomic {
public:
    Cyclotomic() : order_(1), c_{Rational(0)} {}
    Cyclotomic(int n) : Cyclotomic(Rational(n)) {}
    Cyclotomic(long n) : Cyclotomic(Rational(n)) {}
    Cyclotomic(const Rational& q) : order_(1), c_{q} {}

    // Sum of q * zeta_order^e over the given terms; exponents may be any
    // integers and are reduced mod order. Throws InputError if order < 1.
    static Cyclotomic make(int order, const std::vector<std::pair<long, Rational>>& terms);

    // zeta_order^exponent
    static Cyclotomic root(int order, long exponent);

    // Wraps an already reduced coefficient vector of length phi(order).
    static Cyclotomic from_coeffs(int order, std::vector<Rational> coeffs);

    int order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    // Same value expressed at order m, which must be a multiple of order().
    Cyclotomic lifted(int m) const;

    // Same value at the smallest order whose field contains it.
    Cyclotomic minimal() const;

    bool is_zero() const;
    bool is_rational() const;

    // Throws NotRational when a basis coefficient beyond degree 0 is nonzero.
    Rational to_rational() const;

    // Multiplicative inverse by extended Euclid against Phi_N; throws
    // std::domain_error on zero.
    Cyclotomic inverse() const;

    // Complex conjugate, the automorphism zeta -> zeta^-1.
    Cyclotomic conj() const;

    // The automorphism zeta -> zeta^k; k must be coprime to order().
    Cyclotomic galois(long k) const;

    Cyclotomic pow(long e) const;

    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
    Cyclotomic operator-() const;

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

    // Human-readable form over the power basis at the minimal order, e.g.
    // "-1 - z3" or "1/2*z5 + z5^3"; rationals print as "p" or "p/q".
    std::string to_string() const;

    // Nonzero basis terms at order m (a multiple of order()) as
    // (exponent, coefficient) pairs; used by the text and machine formats.
    std::vector<std::pair<int, Rational>> terms_at(int m) const;

private:
    Cyclotomic(int order, std::vector<Rational> c) : order_(order), c_(std::move(c)) {}

    int order_;
    std::vector<Rational> c_;
};

inline bool is_zero(const Cyclotomic& x) { return x.is_zero(); }

// Euler's totient.
int euler_phi(int n);

// Coefficients of Phi_n in ascending degree (cached, thread-safe).
const std::vector<long>& cyclotomic_polynomial(int n);

// Mobius function.
int moebius(int n);

} // namespace lambdachar
