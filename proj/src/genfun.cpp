#include "lambdachar/genfun.hpp"

#include "lambdachar/errors.hpp"
#include "lambdachar/lambda_ops.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <map>
#include <numeric>

namespace lambdachar {

namespace {

std::string rat_str(const Rational& q) { return q.to_string(); }

bool is_compound(const std::string& s) { return s.find(' ') != std::string::npos; }

// Phi_d(t) normalized to constant term 1 (so the d = 1 factor is 1 - t).
PolyRat normalized_cyclotomic(int d) {
    const auto& phi = cyclotomic_polynomial(d);
    std::vector<Rational> v;
    for (long x : phi) v.emplace_back(x);
    PolyRat p(std::move(v));
    Rational c0 = p.coeff(0);
    return Rational(1) / c0 * p;
}

PolyCyc to_cyc(const PolyRat& p) {
    std::vector<Cyclotomic> v;
    for (const auto& c : p.coeffs()) v.emplace_back(c);
    return PolyCyc(std::move(v));
}

// Certifies that every coefficient is rational.
std::vector<Rational> certify(const std::vector<Cyclotomic>& v, const char* what) {
    std::vector<Rational> out;
    out.reserve(v.size());
    for (const auto& c : v) {
        if (!c.is_rational())
            throw NotRationalCoefficients(fmt::format("{} has the non-rational coefficient {}", what, c.to_string()));
        out.push_back(c.to_rational());
    }
    return out;
}

// Class weights sizes[c] chi_j(c) / |G|.
std::vector<Cyclotomic> class_weights(const CharacterTable& ct, int j) {
    const ClassData& cd = *ct.classes;
    std::vector<Cyclotomic> w;
    for (int c = 0; c < cd.class_count(); ++c)
        w.push_back(Cyclotomic(Rational(cd.sizes[static_cast<std::size_t>(c)], cd.group_order)) * ct.irr(j)[c]);
    return w;
}

void require_irreducible_index(const CharacterTable& ct, int j) {
    if (j < 0 || j >= ct.size()) throw InputError(fmt::format("irreducible index {} out of range", j));
}

// prod_a (1 - zeta_N^a t)^(k_a); orbits with a common exponent use the
// rational factor Phi_d.
PolyCyc product_of_linear_factors(int n, const std::vector<long>& k) {
    PolyCyc acc(Cyclotomic(1));
    std::vector<long> rem = k;
    for (int d = 1; d <= n; ++d) {
        if (n % d) continue;
        std::vector<int> orbit;
        for (int a = 0; a < n; ++a)
            if (std::gcd(a, n) == n / d) orbit.push_back(a);
        long common = rem[static_cast<std::size_t>(orbit.front())];
        for (int a : orbit) common = std::min(common, rem[static_cast<std::size_t>(a)]);
        if (common > 0) {
            PolyCyc f = to_cyc(normalized_cyclotomic(d));
            for (long i = 0; i < common; ++i) acc *= f;
            for (int a : orbit) rem[static_cast<std::size_t>(a)] -= common;
        }
    }
    for (int a = 0; a < n; ++a)
        for (long i = 0; i < rem[static_cast<std::size_t>(a)]; ++i)
            acc *= PolyCyc(std::vector<Cyclotomic>{Cyclotomic(1), -Cyclotomic::root(n, a)});
    return acc;
}

} // namespace

RationalFunction genfun_rational_field_gcd(const ClassFunction& chi, const CharacterTable& ct, int j) {
    require_irreducible_index(ct, j);
    const ClassData& cd = *ct.classes;
    auto w = class_weights(ct, j);
    PolyCyc a, b(Cyclotomic(1));
    for (int c = 0; c < cd.class_count(); ++c) {
        if (w[static_cast<std::size_t>(c)].is_zero()) continue;
        PolyCyc d = char_poly(chi, cd.inverse_class[static_cast<std::size_t>(c)]).scaled(Cyclotomic(-1));
        PolyCyc g = PolyCyc::gcd(b, d);
        PolyCyc d_g = PolyCyc::exact_div(d, g), b_g = PolyCyc::exact_div(b, g);
        a = a * d_g + PolyCyc(w[static_cast<std::size_t>(c)]) * b_g;
        b = b * d_g;
    }
    PolyCyc g = PolyCyc::gcd(a, b);
    if (!a.is_zero()) {
        a = PolyCyc::exact_div(a, g);
        b = PolyCyc::exact_div(b, g);
    } else {
        b = PolyCyc(Cyclotomic(1));
    }
    Cyclotomic c0 = b.coeff(0);
    a = c0.inverse() * a;
    b = c0.inverse() * b;
    return RationalFunction(PolyRat(certify(a.coeffs(), "generating function numerator")),
                            PolyRat(certify(b.coeffs(), "generating function denominator")));
}

std::string to_string(const PolyRat& p, const std::string& var) { return p.to_string(rat_str, var); }

RationalFunction::RationalFunction(const PolyRat& num, const PolyRat& den) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num.is_zero()) {
        den_ = PolyRat(Rational(1));
        return;
    }
    PolyRat g = PolyRat::gcd(num, den);
    num_ = PolyRat::exact_div(num, g);
    den_ = PolyRat::exact_div(den, g);
    Rational c0 = den_.coeff(0);
    if (c0.is_zero()) throw std::domain_error("denominator vanishes at t = 0");
    Rational inv = Rational(1) / c0;
    num_ = inv * num_;
    den_ = inv * den_;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    PolyRat g = PolyRat::gcd(a.den_, b.den_);
    PolyRat ad = PolyRat::exact_div(a.den_, g), bd = PolyRat::exact_div(b.den_, g);
    return RationalFunction(a.num_ * bd + b.num_ * ad, a.den_ * bd);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + RationalFunction(-b.num_, b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

std::string RationalFunction::to_string() const {
    std::string n = lambdachar::to_string(num_);
    if (den_ == PolyRat(Rational(1))) return n;
    return (is_compound(n) ? "(" + n + ")" : n) + " / (" + lambdachar::to_string(den_) + ")";
}

std::string RationalFunction::to_factored_string() const {
    std::string n = lambdachar::to_string(num_);
    if (den_ == PolyRat(Rational(1))) return n;
    auto f = factor_one_minus_powers(den_);
    std::vector<std::string> parts;
    for (auto [a, e] : f.factors) {
        std::string s = a == 1 ? "(1 - t)" : fmt::format("(1 - t^{})", a);
        if (e > 1) s += fmt::format("^{}", e);
        parts.push_back(s);
    }
    if (!(f.rest == PolyRat(Rational(1)))) parts.push_back("(" + lambdachar::to_string(f.rest) + ")");
    std::string d = fmt::format("{}", fmt::join(parts, ""));
    if (parts.size() > 1 || (f.factors.size() == 1 && f.factors[0].second > 1)) d = "(" + d + ")";
    return (is_compound(n) ? "(" + n + ")" : n) + " / " + d;
}

std::vector<Rational> series_of_rational(const RationalFunction& rf, int m) {
    auto inv = series_inverse(rf.den().truncated(std::max(rf.den().degree(), 0)), m);
    return series_mul(rf.num().coeffs(), inv, m);
}

PowerFactorization factor_one_minus_powers(const PolyRat& p) {
    PowerFactorization out;
    PolyRat rest = p;
    std::map<int, int> e;
    int bound = 2 * rest.degree() * rest.degree() + 2;
    for (int d = 1; d <= bound && rest.degree() > 0; ++d) {
        if (euler_phi(d) > rest.degree()) continue;
        PolyRat f = normalized_cyclotomic(d);
        for (;;) {
            auto [q, r] = PolyRat::divmod(rest, f);
            if (!r.is_zero()) break;
            rest = q;
            ++e[d];
        }
    }
    std::map<int, int> taken;
    int top = e.empty() ? 0 : e.rbegin()->first;
    for (int a = top; a >= 1; --a) {
        for (;;) {
            bool all = true;
            for (int d = 1; d <= a && all; ++d)
                if (a % d == 0) all = e[d] > 0;
            if (!all) break;
            for (int d = 1; d <= a; ++d)
                if (a % d == 0) --e[d];
            ++taken[a];
        }
    }
    for (auto [d, k] : e)
        for (int i = 0; i < k; ++i) rest = rest * normalized_cyclotomic(d);
    for (auto [a, k] : taken) out.factors.emplace_back(a, k);
    out.rest = rest;
    return out;
}

std::vector<Rational> MultiplicityTable::column(int j) const {
    std::vector<Rational> out;
    for (const auto& r : rows) out.push_back(r.coeffs[static_cast<std::size_t>(j)]);
    return out;
}

MultiplicityTable multiplicity_table(const ClassFunction& chi, const CharacterTable& ct, PowerOp op, int m,
                                     Certify certify_mode) {
    if (m < 0) throw InputError("degree must be nonnegative");
    LambdaSequence seq = op == PowerOp::sym ? sym_seq(chi, m) : lambda_seq(chi, m);
    if (certify_mode == Certify::genuine) {
        if (!integral_degree(chi)) throw NonIntegralDegree("degree " + chi[0].to_string() + " is not a nonnegative integer");
        assert_degree_bound(seq);
    }
    MultiplicityTable t;
    t.op = op;
    const auto& src = op == PowerOp::sym ? seq.syms : seq.lambdas;
    for (int i = 0; i <= m; ++i) {
        auto row = decompose(src[static_cast<std::size_t>(i)], ct);
        if (certify_mode == Certify::genuine) {
            if (!row.is_integral())
                throw NonIntegral(fmt::format("fractional multiplicity in degree {}; the table is inconsistent", i));
            if (!row.is_nonnegative())
                throw NotACharacter(fmt::format("negative multiplicity in degree {}; the input is not a character", i));
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

namespace {

// Coefficients 0..m of S_t(chi)(c) or lambda_t(chi)(c). Newton's formula at
// the class also covers virtual characters, whose lambda_t need not be a
// polynomial.
std::vector<Cyclotomic> class_series(const ClassFunction& chi, int c, PowerOp op, int m) {
    auto lam = lambda_values_at_class(chi, c, m);
    if (op == PowerOp::ext) return lam;
    for (std::size_t i = 1; i < lam.size(); i += 2) lam[i] = -lam[i];
    return series_inverse(lam, m);
}

} // namespace

std::vector<Rational> genfun_series(const ClassFunction& chi, const CharacterTable& ct, int j, PowerOp op, int m) {
    require_irreducible_index(ct, j);
    if (m < 0) throw InputError("degree must be nonnegative");
    const ClassData& cd = *ct.classes;
    auto w = class_weights(ct, j);
    std::vector<Cyclotomic> acc(static_cast<std::size_t>(m) + 1, Cyclotomic(0));
    for (int c = 0; c < cd.class_count(); ++c) {
        const auto& wc = w[static_cast<std::size_t>(c)];
        if (wc.is_zero()) continue;
        int ci = cd.inverse_class[static_cast<std::size_t>(c)];
        auto s = class_series(chi, ci, op, m);
        for (int i = 0; i <= m; ++i) acc[static_cast<std::size_t>(i)] += wc * s[static_cast<std::size_t>(i)];
    }
    return certify(acc, "generating function series");
}

std::vector<std::vector<Rational>> genfun_series_all(const ClassFunction& chi, const CharacterTable& ct, PowerOp op,
                                                     int m) {
    if (m < 0) throw InputError("degree must be nonnegative");
    const ClassData& cd = *ct.classes;
    std::vector<std::vector<Cyclotomic>> per_class;
    for (int c = 0; c < cd.class_count(); ++c) per_class.push_back(class_series(chi, c, op, m));
    std::vector<std::vector<Rational>> out;
    for (int j = 0; j < ct.size(); ++j) {
        auto w = class_weights(ct, j);
        std::vector<Cyclotomic> acc(static_cast<std::size_t>(m) + 1, Cyclotomic(0));
        for (int c = 0; c < cd.class_count(); ++c) {
            const auto& wc = w[static_cast<std::size_t>(c)];
            if (wc.is_zero()) continue;
            const auto& s = per_class[static_cast<std::size_t>(cd.inverse_class[static_cast<std::size_t>(c)])];
            for (int i = 0; i <= m; ++i) acc[static_cast<std::size_t>(i)] += wc * s[static_cast<std::size_t>(i)];
        }
        out.push_back(certify(acc, "generating function series"));
    }
    return out;
}

std::vector<long> eigenvalue_multiplicities(const ClassFunction& chi, int c) {
    const ClassData& cd = *chi.classes();
    int n = cd.exponent;
    int o = cd.rep_orders[static_cast<std::size_t>(c)];
    // m_b = (1/o) sum_j chi(g^j) zeta_o^(-bj); gather j by the class of g^j.
    std::map<int, std::vector<int>> by_class;
    for (int jx = 0; jx < o; ++jx) by_class[power_map(cd, jx)[static_cast<std::size_t>(c)]].push_back(jx);
    std::vector<long> out(static_cast<std::size_t>(n), 0);
    long total = 0;
    for (int b = 0; b < o; ++b) {
        Cyclotomic acc(0);
        for (const auto& [cls, js] : by_class) {
            std::vector<std::pair<long, Rational>> terms;
            for (int jx : js) terms.emplace_back(-static_cast<long>(b) * jx, Rational(1));
            acc += chi[cls] * Cyclotomic::make(o, terms);
        }
        acc = Cyclotomic(Rational(1, o)) * acc;
        if (!acc.is_rational()) return {};
        Rational q = acc.to_rational();
        if (!q.is_integer() || q.sign() < 0) return {};
        out[static_cast<std::size_t>(b * (n / o))] = q.to_long();
        total += out[static_cast<std::size_t>(b * (n / o))];
    }
    auto d = integral_degree(chi);
    if (!d || *d != total) return {};
    return out;
}

std::vector<RationalFunction> genfun_rational_all(const ClassFunction& chi, const CharacterTable& ct, PowerOp op) {
    std::vector<RationalFunction> out;
    if (op == PowerOp::ext) {
        auto d = integral_degree(chi);
        if (!d) throw NonIntegralDegree("degree " + chi[0].to_string() + " is not a nonnegative integer");
        for (auto& s : genfun_series_all(chi, ct, op, static_cast<int>(*d))) out.emplace_back(PolyRat(std::move(s)));
        return out;
    }
    const ClassData& cd = *ct.classes;
    int n = cd.exponent, k = cd.class_count();
    std::vector<std::vector<long>> mult;
    for (int c = 0; c < k; ++c) {
        mult.push_back(eigenvalue_multiplicities(chi, c));
        if (mult.back().empty()) {
            for (int j = 0; j < ct.size(); ++j) out.push_back(genfun_rational_field_gcd(chi, ct, j));
            return out;
        }
    }
    // Common denominator prod_a (1 - zeta^a t)^(max_c m_{c,a}); the maxima are
    // constant on Galois orbits, so it has rational coefficients.
    std::vector<long> top(static_cast<std::size_t>(n), 0);
    for (const auto& m : mult)
        for (int a = 0; a < n; ++a) top[static_cast<std::size_t>(a)] = std::max(top[static_cast<std::size_t>(a)], m[static_cast<std::size_t>(a)]);
    // Cofactor of class c in the common denominator, shared by every column.
    std::vector<PolyCyc> cofactor;
    for (int c = 0; c < k; ++c) {
        const auto& m = mult[static_cast<std::size_t>(cd.inverse_class[static_cast<std::size_t>(c)])];
        std::vector<long> rest(static_cast<std::size_t>(n));
        for (int a = 0; a < n; ++a) rest[static_cast<std::size_t>(a)] = top[static_cast<std::size_t>(a)] - m[static_cast<std::size_t>(a)];
        cofactor.push_back(product_of_linear_factors(n, rest));
    }
    PolyRat den(certify(product_of_linear_factors(n, top).coeffs(), "generating function denominator"));
    for (int j = 0; j < ct.size(); ++j) {
        auto w = class_weights(ct, j);
        PolyCyc num;
        for (int c = 0; c < k; ++c) {
            const auto& wc = w[static_cast<std::size_t>(c)];
            if (!wc.is_zero()) num += PolyCyc(wc) * cofactor[static_cast<std::size_t>(c)];
        }
        out.emplace_back(PolyRat(certify(num.coeffs(), "generating function numerator")), den);
    }
    return out;
}

RationalFunction genfun_rational(const ClassFunction& chi, const CharacterTable& ct, int j, PowerOp op) {
    require_irreducible_index(ct, j);
    if (op == PowerOp::ext) {
        auto d = integral_degree(chi);
        if (!d) throw NonIntegralDegree("degree " + chi[0].to_string() + " is not a nonnegative integer");
        return RationalFunction(PolyRat(genfun_series(chi, ct, j, op, static_cast<int>(*d))));
    }
    return genfun_rational_all(chi, ct, op)[static_cast<std::size_t>(j)];
}

} // namespace lambdachar
