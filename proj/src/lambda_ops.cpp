#include "lambdachar/lambda_ops.hpp"

#include "lambdachar/errors.hpp"

#include <fmt/format.h>

#include <numeric>

namespace lambdachar {

namespace {

// Newton's formula on scalars: psi[n-1] holds psi^n, output lambda^0..lambda^m.
std::vector<Cyclotomic> newton_lambdas(const std::vector<Cyclotomic>& psi, int m) {
    std::vector<Cyclotomic> lam(static_cast<std::size_t>(m) + 1);
    lam[0] = Cyclotomic(1);
    for (int n = 1; n <= m; ++n) {
        Cyclotomic acc(0);
        for (int i = 0; i < n; ++i) {
            const auto& l = lam[static_cast<std::size_t>(i)];
            if (l.is_zero()) continue;
            Cyclotomic term = l * psi[static_cast<std::size_t>(n - i - 1)];
            if (i % 2 == 0) acc += term;
            else acc -= term;
        }
        Rational scale(n % 2 == 1 ? 1 : -1, n);
        lam[static_cast<std::size_t>(n)] = Cyclotomic(scale) * acc;
    }
    return lam;
}

std::vector<Cyclotomic> sym_from_lambdas(const std::vector<Cyclotomic>& lam, int m) {
    std::vector<Cyclotomic> s(static_cast<std::size_t>(m) + 1);
    s[0] = Cyclotomic(1);
    for (int n = 1; n <= m; ++n) {
        Cyclotomic acc(0);
        for (int i = 1; i <= n; ++i) {
            const auto& l = lam[static_cast<std::size_t>(i)];
            if (l.is_zero()) continue;
            Cyclotomic term = l * s[static_cast<std::size_t>(n - i)];
            if (i % 2 == 1) acc += term;
            else acc -= term;
        }
        s[static_cast<std::size_t>(n)] = acc;
    }
    return s;
}

std::vector<std::vector<int>> power_maps_up_to(const ClassData& cd, int m) {
    std::vector<std::vector<int>> maps;
    for (int n = 1; n <= m; ++n) maps.push_back(power_map(cd, n));
    return maps;
}

LambdaSequence build(const ClassFunction& chi, int m, bool with_syms) {
    if (m < 0) throw InputError("degree bound must be nonnegative");
    const ClassDataPtr& cd = chi.classes();
    int k = chi.size();
    auto maps = power_maps_up_to(*cd, m);
    std::vector<std::vector<Cyclotomic>> lam_cols, sym_cols, psi_cols;
    for (int c = 0; c < k; ++c) {
        std::vector<Cyclotomic> psi;
        for (int n = 1; n <= m; ++n) psi.push_back(chi[maps[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(c)]]);
        lam_cols.push_back(newton_lambdas(psi, m));
        if (with_syms) sym_cols.push_back(sym_from_lambdas(lam_cols.back(), m));
        psi_cols.push_back(std::move(psi));
    }
    auto gather = [&](const std::vector<std::vector<Cyclotomic>>& cols, int i) {
        std::vector<Cyclotomic> v;
        for (int c = 0; c < k; ++c) v.push_back(cols[static_cast<std::size_t>(c)][static_cast<std::size_t>(i)]);
        return ClassFunction(cd, std::move(v));
    };
    LambdaSequence seq;
    seq.base = chi;
    seq.degree_bound = m;
    for (int n = 0; n <= m; ++n) seq.lambdas.push_back(gather(lam_cols, n));
    if (with_syms)
        for (int n = 0; n <= m; ++n) seq.syms.push_back(gather(sym_cols, n));
    for (int n = 1; n <= m; ++n) seq.adams.push_back(gather(psi_cols, n - 1));
    return seq;
}

} // namespace

ClassFunction adams(const ClassFunction& f, long n) {
    if (n < 1) throw InputError("Adams operation index must be positive");
    auto map = power_map(*f.classes(), n);
    std::vector<Cyclotomic> v;
    for (int c : map) v.push_back(f[c]);
    return ClassFunction(f.classes(), std::move(v));
}

LambdaSequence lambda_seq(const ClassFunction& chi, int m) { return build(chi, m, false); }

LambdaSequence sym_seq(const ClassFunction& chi, int m) { return build(chi, m, true); }

std::optional<long> integral_degree(const ClassFunction& chi) {
    const Cyclotomic& d = chi[0];
    if (!d.is_rational()) return std::nullopt;
    Rational q = d.to_rational();
    if (!q.is_integer() || q.sign() < 0) return std::nullopt;
    return q.to_long();
}

void assert_degree_bound(const LambdaSequence& seq) {
    auto d = integral_degree(seq.base);
    if (!d) return;
    for (long n = *d + 1; n < static_cast<long>(seq.lambdas.size()); ++n)
        if (!seq.lambdas[static_cast<std::size_t>(n)].is_zero())
            throw NotACharacter(fmt::format("exterior power {} is nonzero above the degree {}", n, *d));
}

std::vector<Cyclotomic> lambda_values_at_class(const ClassFunction& chi, int c, int m) {
    std::vector<Cyclotomic> psi;
    for (int n = 1; n <= m; ++n) psi.push_back(chi[power_map(*chi.classes(), n)[static_cast<std::size_t>(c)]]);
    return newton_lambdas(psi, m);
}

Polynomial<Cyclotomic> char_poly(const ClassFunction& chi, int c) {
    auto d = integral_degree(chi);
    if (!d) throw NonIntegralDegree("degree " + chi[0].to_string() + " is not a nonnegative integer");
    auto lam = lambda_values_at_class(chi, c, static_cast<int>(*d) + 1);
    if (!lam.back().is_zero())
        throw NotACharacter(fmt::format("exterior power {} is nonzero above the degree at class {}", *d + 1, c));
    lam.pop_back();
    return Polynomial<Cyclotomic>(std::move(lam));
}

std::vector<Cyclotomic> sym_series_at_class(const ClassFunction& chi, int c, int m) {
    auto p = char_poly(chi, c);
    // lambda_{-t}: coefficient i picks up (-1)^i.
    auto a = p.scaled(Cyclotomic(-1)).truncated(std::max(p.degree(), 0));
    return series_inverse(a, m);
}

bool is_periodic(const ClassFunction& f) {
    const ClassData& cd = *f.classes();
    long g = cd.group_order;
    for (long n = 1; n <= g; ++n) {
        long d = std::gcd(n, g);
        if (d == n) continue;
        auto a = power_map(cd, n), b = power_map(cd, d);
        for (int c = 0; c < cd.class_count(); ++c)
            if (!(f[a[static_cast<std::size_t>(c)]] == f[b[static_cast<std::size_t>(c)]])) return false;
    }
    return true;
}

ProductForm product_form(const ClassFunction& chi) {
    if (!is_periodic(chi)) throw NotPeriodic("class function " + chi.to_string() + " is not periodic");
    long g = chi.classes()->group_order;
    ProductForm pf;
    for (long a = 1; a <= g; ++a)
        if (g % a == 0) pf.divisors.push_back(a);
    for (std::size_t l = 0; l < pf.divisors.size(); ++l) {
        ClassFunction b = adams(chi, pf.divisors[l]);
        for (std::size_t j = 0; j < l; ++j)
            if (pf.divisors[l] % pf.divisors[j] == 0) b -= pf.exponents[j];
        pf.exponents.push_back(std::move(b));
    }
    return pf;
}

std::vector<Cyclotomic> product_form_series(const ProductForm& pf, int c, int m) {
    std::vector<Cyclotomic> acc(static_cast<std::size_t>(m) + 1, Cyclotomic(0));
    acc[0] = Cyclotomic(1);
    for (std::size_t i = 0; i < pf.divisors.size(); ++i) {
        const Cyclotomic& b = pf.exponents[i][c];
        if (b.is_zero()) continue;
        long a = pf.divisors[i];
        if (a > m) continue;
        Cyclotomic r = b * Cyclotomic(Rational(1, a));
        // 1 - (-t)^a = 1 + s t^a with s = -(-1)^a.
        Cyclotomic s(a % 2 == 0 ? -1 : 1);
        acc = series_mul(acc, binomial_power_series(r, static_cast<int>(a), s, m), m);
    }
    return acc;
}

} // namespace lambdachar
