#pragma once

// Dense univariate polynomials and truncated power series in t over an
// exact field T (Rational or Cyclotomic).
//
// Coefficients are stored in ascending degree with no trailing zeros, so
// the zero polynomial has an empty coefficient vector and degree -1.

#include "lambdachar/errors.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lambdachar {

namespace detail {
// Dispatches to the coefficient type's is_zero found by argument lookup;
// member functions named is_zero would otherwise hide it.
template <class T>
bool coeff_zero(const T& x) {
    return is_zero(x);
}
} // namespace detail

template <class T>
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const T& c) : c_{c} { trim(); }
    explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    // c * t^deg
    static Polynomial monomial(const T& c, int deg) {
        std::vector<T> v(static_cast<std::size_t>(deg) + 1, T(0));
        v.back() = c;
        return Polynomial(std::move(v));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<T>& coeffs() const { return c_; }

    // Coefficient of t^i; zero beyond the degree.
    T coeff(int i) const {
        return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : T(0);
    }
    const T& leading() const { return c_.back(); }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> v(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (detail::coeff_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(v));
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    friend Polynomial operator*(const T& s, Polynomial p) {
        for (auto& x : p.c_) x = s * x;
        p.trim();
        return p;
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }

    T eval(const T& x) const {
        T acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    // p(s*t)
    Polynomial scaled(const T& s) const {
        Polynomial r = *this;
        T f(1);
        for (auto& x : r.c_) {
            x = x * f;
            f = f * s;
        }
        r.trim();
        return r;
    }

    // Coefficients 0..m, padded with zeros.
    std::vector<T> truncated(int m) const {
        std::vector<T> v(static_cast<std::size_t>(m) + 1, T(0));
        for (std::size_t i = 0; i < c_.size() && i < v.size(); ++i) v[i] = c_[i];
        return v;
    }

    Polynomial monic() const {
        if (is_zero()) return {};
        T inv = T(1) / leading();
        return inv * *this;
    }

    // Quotient and remainder of field division; throws on a zero divisor.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero()) throw std::domain_error("polynomial division by zero");
        std::vector<T> r = a.c_;
        int db = b.degree();
        if (a.degree() < db) return {Polynomial{}, a};
        std::vector<T> q(static_cast<std::size_t>(a.degree() - db) + 1, T(0));
        T inv = T(1) / b.leading();
        for (int i = a.degree(); i >= db; --i) {
            const T& top = r[static_cast<std::size_t>(i)];
            if (detail::coeff_zero(top)) continue;
            T f = top * inv;
            q[static_cast<std::size_t>(i - db)] = f;
            for (int j = 0; j <= db; ++j)
                r[static_cast<std::size_t>(i - db + j)] -= f * b.c_[static_cast<std::size_t>(j)];
        }
        r.resize(static_cast<std::size_t>(db), T(0));
        return {Polynomial(std::move(q)), Polynomial(std::move(r))};
    }

    // Exact quotient; throws if b does not divide a.
    static Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
        return q;
    }

    // Monic gcd (zero only when both inputs are zero).
    static Polynomial gcd(Polynomial a, Polynomial b) {
        while (!b.is_zero()) {
            auto r = divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    // Renders e.g. "1 - t + 2*t^3" using fmt_coeff(T) for coefficients.
    template <class F>
    std::string to_string(F&& fmt_coeff, const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (detail::coeff_zero(c_[i])) continue;
            std::string s = fmt_coeff(c_[i]);
            bool compound = s.find_first_of("+-", 1) != std::string::npos;
            bool negative = !compound && !s.empty() && s[0] == '-';
            if (negative) s = s.substr(1);
            if (compound) s = "(" + s + ")";
            if (!out.empty()) out += negative ? " - " : " + ";
            else if (negative) out += "-";
            std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
            if (i == 0) out += s;
            else if (s == "1") out += mono;
            else out += s + "*" + mono;
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && detail::coeff_zero(c_.back())) c_.pop_back();
    }

    std::vector<T> c_;
};

// Truncated series product, coefficients 0..m.
template <class T>
std::vector<T> series_mul(const std::vector<T>& a, const std::vector<T>& b, int m) {
    std::vector<T> out(static_cast<std::size_t>(m) + 1, T(0));
    for (std::size_t i = 0; i < a.size() && i <= static_cast<std::size_t>(m); ++i) {
        if (detail::coeff_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size() && i + j <= static_cast<std::size_t>(m); ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

// Coefficients 0..m of 1/a via b_0 = 1/a_0 and
// b_n = -(a_1 b_{n-1} + ... + a_n b_0) / a_0.
template <class T>
std::vector<T> series_inverse(const std::vector<T>& a, int m) {
    if (a.empty() || detail::coeff_zero(a[0])) throw std::domain_error("series with zero constant term is not invertible");
    std::vector<T> b(static_cast<std::size_t>(m) + 1, T(0));
    T inv0 = T(1) / a[0];
    b[0] = inv0;
    for (std::size_t n = 1; n < b.size(); ++n) {
        T acc(0);
        for (std::size_t i = 1; i <= n && i < a.size(); ++i) acc += a[i] * b[n - i];
        b[n] = -(acc * inv0);
    }
    return b;
}

// Generalized binomial coefficient r(r-1)...(r-n+1)/n! over T.
template <class T>
T binomial_coefficient(const T& r, int n) {
    T acc(1);
    for (int i = 0; i < n; ++i) acc = acc * (r - T(i)) / T(i + 1);
    return acc;
}

// Coefficients 0..m of (1 + s*t^a)^r for any exponent r in T.
template <class T>
std::vector<T> binomial_power_series(const T& r, int a, const T& s, int m) {
    if (a < 1) throw std::invalid_argument("binomial series step must be positive");
    std::vector<T> out(static_cast<std::size_t>(m) + 1, T(0));
    T coeff(1), spow(1);
    for (int i = 0; i * a <= m; ++i) {
        out[static_cast<std::size_t>(i * a)] = coeff * spow;
        coeff = coeff * (r - T(i)) / T(i + 1);
        spow = spow * s;
    }
    return out;
}

} // namespace lambdachar
