#pragma once

// Exact rational numbers on top of GMP's mpq_class.
//
// The wrapper keeps values canonical (reduced, positive denominator) after
// every operation and adds the few helpers the engine needs: generalized
// binomial coefficients and integer conversion with checks.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

namespace lambdachar {

using BigInt = mpz_class;

class Rational {
public:
    Rational() = default;
    Rational(int n) : q_(n) {}
    Rational(long n) : q_(n) {}
    Rational(long long n) : q_(static_cast<long>(n)) {}
    Rational(unsigned long n) : q_(n) {}
    Rational(const BigInt& n) : q_(n) {}
    Rational(const BigInt& num, const BigInt& den);
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    // Accepts "a" or "a/b" with optional sign; throws InputError otherwise.
    static Rational parse(std::string_view text);

    BigInt numerator() const { return q_.get_num(); }
    BigInt denominator() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    // Value as a machine integer; throws NonIntegral or InputError on
    // fractions or overflow.
    long to_long() const;

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { return Rational(mpq_class(-q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    // "p" for integers, "p/q" otherwise.
    std::string to_string() const;

private:
    mpq_class q_;
};

inline bool is_zero(const Rational& x) { return x.is_zero(); }

// r(r-1)...(r-n+1)/n! for any rational r.
Rational binomial(const Rational& r, unsigned n);

// Ordinary binomial coefficient as an exact integer; zero when k > n or k < 0.
BigInt binomial(long n, long k);

std::size_t hash_value(const Rational& x);

} // namespace lambdachar
