#pragma once

// The lambda-ring operations on class functions: Adams operations psi^n,
// exterior powers lambda^n by Newton's formula, symmetric powers S^n by the
// S/lambda recurrence, per-class characteristic polynomials, and the
// product form of periodic class functions.

#include "lambdachar/group.hpp"
#include "lambdachar/polynomial.hpp"

#include <optional>
#include <vector>

namespace lambdachar {

// psi^n(f)(c) = f(class of g^n).
ClassFunction adams(const ClassFunction& f, long n);

struct LambdaSequence {
    ClassFunction base;
    std::vector<ClassFunction> lambdas; // lambda^0 .. lambda^M
    std::vector<ClassFunction> syms;    // S^0 .. S^M, empty unless requested
    std::vector<ClassFunction> adams;   // psi^1 .. psi^M stored at index n-1
    int degree_bound = 0;

    const ClassFunction& lambda(int n) const { return lambdas[static_cast<std::size_t>(n)]; }
    const ClassFunction& sym(int n) const { return syms[static_cast<std::size_t>(n)]; }
    const ClassFunction& psi(int n) const { return adams[static_cast<std::size_t>(n - 1)]; }
};

// lambda^0..lambda^M of chi, with (-1)^(n+1) n lambda^n = sum_{i<n} (-1)^i lambda^i psi^(n-i).
LambdaSequence lambda_seq(const ClassFunction& chi, int m);

// As lambda_seq, plus S^n = sum_{i=1..n} (-1)^(i+1) lambda^i S^(n-i).
LambdaSequence sym_seq(const ClassFunction& chi, int m);

// chi(e) when it is a nonnegative integer.
std::optional<long> integral_degree(const ClassFunction& chi);

// Throws NotACharacter if lambda^n(chi) is nonzero for some degree(chi) < n <= M.
// Does nothing for virtual characters without a nonnegative integral degree.
void assert_degree_bound(const LambdaSequence& seq);

// lambda^0(chi)(c), ..., lambda^m(chi)(c) computed at a single class.
std::vector<Cyclotomic> lambda_values_at_class(const ClassFunction& chi, int c, int m);

// sum_{i<=d} lambda^i(chi)(c) t^i with d = chi(e). Throws NonIntegralDegree
// when chi(e) is not a nonnegative integer and NotACharacter when
// lambda^(d+1)(chi)(c) does not vanish.
Polynomial<Cyclotomic> char_poly(const ClassFunction& chi, int c);

// Coefficients 0..m of S_t(chi)(c) = 1 / lambda_{-t}(chi)(c).
std::vector<Cyclotomic> sym_series_at_class(const ClassFunction& chi, int c, int m);

// Power sum Q_n from elementary values e[0] = e_1, e[1] = e_2, ... via
// p_n = sum_{i=1}^{n-1} (-1)^(i-1) e_i p_(n-i) + (-1)^(n-1) n e_n.
template <class T>
T power_sum_from_elementary(const std::vector<T>& e, int n) {
    auto el = [&](int i) { return i <= static_cast<int>(e.size()) ? e[static_cast<std::size_t>(i - 1)] : T(0); };
    std::vector<T> p(static_cast<std::size_t>(n) + 1, T(0));
    for (int k = 1; k <= n; ++k) {
        T acc(0);
        for (int i = 1; i < k; ++i) {
            T term = el(i) * p[static_cast<std::size_t>(k - i)];
            acc = (i % 2 == 1) ? acc + term : acc - term;
        }
        T last = T(k) * el(k);
        acc = (k % 2 == 1) ? acc + last : acc - last;
        p[static_cast<std::size_t>(k)] = acc;
    }
    return p[static_cast<std::size_t>(n)];
}

// Complete symmetric h_n from elementary values via
// h_n = sum_{i=1}^{n} (-1)^(i-1) e_i h_(n-i).
template <class T>
T complete_from_elementary(const std::vector<T>& e, int n) {
    auto el = [&](int i) { return i <= static_cast<int>(e.size()) ? e[static_cast<std::size_t>(i - 1)] : T(0); };
    std::vector<T> h(static_cast<std::size_t>(n) + 1, T(0));
    h[0] = T(1);
    for (int k = 1; k <= n; ++k) {
        T acc(0);
        for (int i = 1; i <= k; ++i) {
            T term = el(i) * h[static_cast<std::size_t>(k - i)];
            acc = (i % 2 == 1) ? acc + term : acc - term;
        }
        h[static_cast<std::size_t>(k)] = acc;
    }
    return h[static_cast<std::size_t>(n)];
}

// psi^n(f) = psi^gcd(n,|G|)(f) for all n = 1..|G|.
bool is_periodic(const ClassFunction& f);

// Exponents b_l over the divisors a_1 < ... < a_r of |G| with
// psi^(a_l)(chi) = sum_{a_l' | a_l} b_l', so that
// lambda_t(chi) = prod (1 - (-t)^(a_i))^(b_i / a_i) at every class.
struct ProductForm {
    std::vector<long> divisors;
    std::vector<ClassFunction> exponents;
};

// Throws NotPeriodic unless is_periodic(chi).
ProductForm product_form(const ClassFunction& chi);

// Coefficients 0..m of prod_i (1 - (-t)^(a_i))^(b_i(c) / a_i).
std::vector<Cyclotomic> product_form_series(const ProductForm& pf, int c, int m);

} // namespace lambdachar
