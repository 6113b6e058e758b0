#include "lambdachar/closed_forms.hpp"

#include "lambdachar/errors.hpp"
#include "lambdachar/lambda_ops.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <numeric>
#include <set>

namespace lambdachar {

namespace {

// (1 + s t^a)^e for a nonnegative integer e.
template <class T>
Polynomial<T> binomial_poly(const T& s, int a, long e) {
    std::vector<T> c(static_cast<std::size_t>(a * e) + 1, T(0));
    T spow(1);
    for (long i = 0; i <= e; ++i) {
        c[static_cast<std::size_t>(i * a)] = T(Rational(binomial(e, i))) * spow;
        spow = spow * s;
    }
    return Polynomial<T>(std::move(c));
}

ClassFunction pointwise_power(const ClassFunction& f, int n) {
    std::vector<Cyclotomic> v;
    for (const auto& x : f.values()) v.push_back(x.pow(n));
    return ClassFunction(f.classes(), std::move(v));
}

} // namespace

std::vector<bool> NormalSubgroupSpec::membership(int class_count) const {
    std::vector<bool> in(static_cast<std::size_t>(class_count), false);
    for (int c : class_indices)
        if (c >= 0 && c < class_count) in[static_cast<std::size_t>(c)] = true;
    return in;
}

std::vector<std::string> check_normal_subgroup(const ClassData& cd, const NormalSubgroupSpec& n) {
    std::vector<std::string> bad;
    int k = cd.class_count();
    std::set<int> seen;
    long order = 0;
    for (int c : n.class_indices) {
        if (c < 0 || c >= k) {
            bad.push_back(fmt::format("class index {} out of range", c));
            return bad;
        }
        if (!seen.insert(c).second) bad.push_back(fmt::format("class {} listed twice", cd.names[static_cast<std::size_t>(c)]));
        order += cd.sizes[static_cast<std::size_t>(c)];
    }
    auto in = n.membership(k);
    if (!in[0]) bad.push_back("subgroup does not contain the identity class");
    if (order == 0 || cd.group_order % order) bad.push_back(fmt::format("subgroup order {} does not divide |G|", order));
    else if (n.quotient_order != cd.group_order / order)
        bad.push_back(fmt::format("quotient order {} differs from |G|/|N| = {}", n.quotient_order, cd.group_order / order));
    for (int c : n.class_indices) {
        if (!in[static_cast<std::size_t>(cd.inverse_class[static_cast<std::size_t>(c)])])
            bad.push_back(fmt::format("subgroup is not closed under inversion at {}", cd.names[static_cast<std::size_t>(c)]));
        for (const auto& [p, map] : cd.prime_power_maps)
            if (!in[static_cast<std::size_t>(map[static_cast<std::size_t>(c)])])
                bad.push_back(fmt::format("subgroup is not closed under {}-th powers at {}", p, cd.names[static_cast<std::size_t>(c)]));
    }
    return bad;
}

NormalSubgroupSpec make_normal_subgroup(const ClassData& cd, std::vector<int> classes, std::string name) {
    NormalSubgroupSpec n;
    n.name = std::move(name);
    std::sort(classes.begin(), classes.end());
    n.class_indices = std::move(classes);
    long order = 0;
    for (int c : n.class_indices)
        if (c >= 0 && c < cd.class_count()) order += cd.sizes[static_cast<std::size_t>(c)];
    n.quotient_order = order > 0 && cd.group_order % order == 0 ? cd.group_order / order : 0;
    auto bad = check_normal_subgroup(cd, n);
    if (!bad.empty()) throw InvalidSubgroup(fmt::format("invalid normal subgroup {}: {}", n.name, fmt::join(bad, "; ")));
    return n;
}

int quotient_element_order(const ClassData& cd, const NormalSubgroupSpec& n, int c) {
    return order_modulo(cd, c, n.membership(cd.class_count()));
}

std::vector<std::string> check_central_spec(const ClassData& cd, const CentralCharSpec& spec) {
    auto bad = check_normal_subgroup(cd, spec.subgroup);
    if (!bad.empty()) return bad;
    auto in = spec.subgroup.membership(cd.class_count());
    for (int c : spec.subgroup.class_indices)
        if (!spec.zeta.count(c)) bad.push_back(fmt::format("no value of zeta on class {}", cd.names[static_cast<std::size_t>(c)]));
    for (const auto& [c, v] : spec.zeta)
        if (c < 0 || c >= cd.class_count() || !in[static_cast<std::size_t>(c)])
            bad.push_back(fmt::format("zeta given on class index {} outside the subgroup", c));
    if (spec.multiplier < 1) bad.push_back("multiplier must be positive");
    if (!bad.empty()) return bad;
    if (!(spec.zeta.at(0) == Cyclotomic(1))) bad.push_back("zeta is not 1 on the identity");
    for (int c : spec.subgroup.class_indices) {
        const auto& z = spec.zeta.at(c);
        std::string nm = cd.names[static_cast<std::size_t>(c)];
        if (!(z.pow(cd.rep_orders[static_cast<std::size_t>(c)]) == Cyclotomic(1)))
            bad.push_back(fmt::format("zeta({}) is not a root of unity of the element order", nm));
        if (!(spec.zeta.at(cd.inverse_class[static_cast<std::size_t>(c)]) * z == Cyclotomic(1)))
            bad.push_back(fmt::format("zeta is not inverted by inversion at {}", nm));
        for (const auto& [p, map] : cd.prime_power_maps)
            if (!(spec.zeta.at(map[static_cast<std::size_t>(c)]) == z.pow(p)))
                bad.push_back(fmt::format("zeta does not commute with {}-th powers at {}", p, nm));
    }
    return bad;
}

ClassFunction zeta_zero(const ClassDataPtr& cd, const CentralCharSpec& spec) {
    std::vector<Cyclotomic> v(static_cast<std::size_t>(cd->class_count()), Cyclotomic(0));
    for (const auto& [c, z] : spec.zeta) v[static_cast<std::size_t>(c)] = z;
    return ClassFunction(cd, std::move(v));
}

std::vector<Rational> binomial_series(const Rational& r, int a, int sign, int exponent_sign, int m) {
    return binomial_power_series(exponent_sign < 0 ? -r : r, a, Rational(sign < 0 ? -1 : 1), m);
}

ClassFunction OneDimForms::sym_power(int n) const { return pointwise_power(chi, n); }

ClassFunction OneDimForms::lambda_power(int n) const {
    if (n == 0) return ClassFunction::constant(chi.classes(), Cyclotomic(1));
    if (n == 1) return chi;
    return ClassFunction::zero(chi.classes());
}

OneDimForms onedim_forms(const ClassFunction& chi, const CharacterTable& ct) {
    if (!(chi[0] == Cyclotomic(1)))
        throw NotOneDimensional("character value at the identity is " + chi[0].to_string() + ", not 1");
    int self = -1, triv = -1;
    ClassFunction one = ClassFunction::constant(ct.classes, Cyclotomic(1));
    for (int j = 0; j < ct.size(); ++j) {
        if (ct.irr(j) == chi) self = j;
        if (ct.irr(j) == one) triv = j;
    }
    if (self < 0) throw NotOneDimensional("class function is not a linear character of the table");
    OneDimForms f;
    f.chi = chi;
    ClassFunction p = one;
    do {
        int idx = -1;
        for (int j = 0; j < ct.size(); ++j)
            if (ct.irr(j) == p) idx = j;
        if (idx < 0) throw NotOneDimensional("a power of the character is not in the table");
        f.power_index.push_back(idx);
        p *= chi;
    } while (!(p == one));
    f.order = static_cast<int>(f.power_index.size());
    PolyRat den(std::vector<Rational>{Rational(1)});
    den = den - PolyRat::monomial(Rational(1), f.order);
    for (int j = 0; j < ct.size(); ++j) {
        auto it = std::find(f.power_index.begin(), f.power_index.end(), j);
        if (it == f.power_index.end()) f.sym.emplace_back();
        else f.sym.emplace_back(PolyRat::monomial(Rational(1), static_cast<int>(it - f.power_index.begin())), den);
        PolyRat e;
        if (j == triv) e += PolyRat(Rational(1));
        if (j == self) e += PolyRat::monomial(Rational(1), 1);
        f.ext.emplace_back(e);
    }
    return f;
}

ClassFunction perm_quotient_character(const ClassDataPtr& cd, const NormalSubgroupSpec& n, long m) {
    auto bad = check_normal_subgroup(*cd, n);
    if (!bad.empty()) throw InvalidSubgroup(fmt::format("invalid normal subgroup: {}", fmt::join(bad, "; ")));
    if (m < 1) throw InputError("multiplier must be positive");
    auto in = n.membership(cd->class_count());
    std::vector<Cyclotomic> v;
    for (int c = 0; c < cd->class_count(); ++c)
        v.emplace_back(in[static_cast<std::size_t>(c)] ? m * n.quotient_order : 0L);
    return ClassFunction(cd, std::move(v));
}

std::optional<ClassFunction> BurnsideForms::sym_power(int n) const {
    if (n < 1 || std::gcd(static_cast<long>(n), quotient_order) != 1) return std::nullopt;
    Rational c(binomial(multiplier * quotient_order + n - 1, n), BigInt(quotient_order));
    return Cyclotomic(c) * pi;
}

std::optional<ClassFunction> BurnsideForms::lambda_power(int n) const {
    if (n < 1 || std::gcd(static_cast<long>(n), quotient_order) != 1) return std::nullopt;
    Rational c(binomial(multiplier * quotient_order, n), BigInt(quotient_order));
    return Cyclotomic(c) * pi;
}

BurnsideForms burnside_regular_forms(const ClassDataPtr& cd, const NormalSubgroupSpec& n, long m) {
    BurnsideForms f;
    f.pi = perm_quotient_character(cd, n, 1);
    f.character = perm_quotient_character(cd, n, m);
    f.quotient_order = n.quotient_order;
    f.multiplier = m;
    for (int c = 0; c < cd->class_count(); ++c) {
        int h = quotient_element_order(*cd, n, c);
        long e = m * n.quotient_order / h; // h divides |G/N|
        f.orbit_orders.push_back(h);
        f.lambda_t.push_back(binomial_poly(Rational(h % 2 == 0 ? -1 : 1), h, e));
        f.sym_t.emplace_back(PolyRat(Rational(1)), binomial_poly(Rational(-1), h, e));
    }
    return f;
}

const PolyCyc& CentralForms::lambda_t_at(int c) const {
    const auto& p = lambda_t[static_cast<std::size_t>(c)];
    if (!p)
        throw NonIntegerExponent(fmt::format("O_N = {} does not divide m = {} at class index {}",
                                             orbit_orders[static_cast<std::size_t>(c)], multiplier, c));
    return *p;
}

std::vector<Cyclotomic> CentralForms::sym_series_at(int c, int mdeg) const {
    int h = orbit_orders[static_cast<std::size_t>(c)];
    Cyclotomic r(Rational(-multiplier, h));
    return binomial_power_series(r, h, -zeta_at_power[static_cast<std::size_t>(c)], mdeg);
}

std::optional<ClassFunction> CentralForms::sym_power(int n) const {
    if (n < 1 || std::gcd(static_cast<long>(n), quotient_order) != 1) return std::nullopt;
    return Cyclotomic(Rational(binomial(multiplier + n - 1, n))) * pointwise_power(zeta0, n);
}

std::optional<ClassFunction> CentralForms::lambda_power(int n) const {
    if (n < 1 || std::gcd(static_cast<long>(n), quotient_order) != 1) return std::nullopt;
    return Cyclotomic(Rational(binomial(multiplier, n))) * pointwise_power(zeta0, n);
}

CentralForms central_forms(const ClassDataPtr& cd, const CentralCharSpec& spec) {
    auto bad = check_central_spec(*cd, spec);
    if (!bad.empty()) throw InvalidSubgroup(fmt::format("invalid central character {}: {}", spec.name, fmt::join(bad, "; ")));
    CentralForms f;
    f.quotient_order = spec.subgroup.quotient_order;
    f.multiplier = spec.multiplier;
    f.zeta0 = zeta_zero(cd, spec);
    f.character = Cyclotomic(spec.multiplier) * f.zeta0;
    for (int c = 0; c < cd->class_count(); ++c) {
        int h = quotient_element_order(*cd, spec.subgroup, c);
        Cyclotomic z = spec.zeta.at(power_map(*cd, h)[static_cast<std::size_t>(c)]);
        f.orbit_orders.push_back(h);
        f.zeta_at_power.push_back(z);
        if (spec.multiplier % h == 0) {
            // 1 - z (-t)^h = 1 + s t^h with s = -z (-1)^h
            Cyclotomic s = h % 2 == 0 ? -z : z;
            f.lambda_t.push_back(binomial_poly(s, h, spec.multiplier / h));
        } else {
            f.lambda_t.push_back(std::nullopt);
        }
    }
    return f;
}

QuotientPullback::QuotientPullback(CharacterTable g, CharacterTable q, std::vector<int> class_map)
    : g_(std::move(g)), q_(std::move(q)), map_(std::move(class_map)) {
    const ClassData& cg = *g_.classes;
    const ClassData& cq = *q_.classes;
    std::vector<std::string> bad;
    int kg = cg.class_count(), kq = cq.class_count();
    if (static_cast<int>(map_.size()) != kg) throw MapInconsistent("class map length differs from the class count");
    for (int x : map_)
        if (x < 0 || x >= kq) throw MapInconsistent(fmt::format("class map value {} out of range", x));
    if (cg.group_order % cq.group_order) bad.push_back("|Q| does not divide |G|");
    long n_order = cg.group_order / cq.group_order;
    if (map_[0] != 0) bad.push_back("identity does not map to identity");
    std::vector<long> fiber(static_cast<std::size_t>(kq), 0);
    for (int c = 0; c < kg; ++c) fiber[static_cast<std::size_t>(map_[static_cast<std::size_t>(c)])] += cg.sizes[static_cast<std::size_t>(c)];
    for (int d = 0; d < kq; ++d)
        if (fiber[static_cast<std::size_t>(d)] != n_order * cq.sizes[static_cast<std::size_t>(d)])
            bad.push_back(fmt::format("fiber over {} has {} elements, expected {}", cq.names[static_cast<std::size_t>(d)],
                                      fiber[static_cast<std::size_t>(d)], n_order * cq.sizes[static_cast<std::size_t>(d)]));
    for (int c = 0; c < kg; ++c) {
        int d = map_[static_cast<std::size_t>(c)];
        if (map_[static_cast<std::size_t>(cg.inverse_class[static_cast<std::size_t>(c)])] != cq.inverse_class[static_cast<std::size_t>(d)])
            bad.push_back(fmt::format("map does not commute with inversion at {}", cg.names[static_cast<std::size_t>(c)]));
        if (cg.rep_orders[static_cast<std::size_t>(c)] % cq.rep_orders[static_cast<std::size_t>(d)])
            bad.push_back(fmt::format("image order does not divide the order at {}", cg.names[static_cast<std::size_t>(c)]));
    }
    if (bad.empty())
        for (int p : primes_up_to(cg.exponent)) {
            auto pg = power_map(cg, p), pq = power_map(cq, p);
            for (int c = 0; c < kg; ++c)
                if (map_[static_cast<std::size_t>(pg[static_cast<std::size_t>(c)])] != pq[static_cast<std::size_t>(map_[static_cast<std::size_t>(c)])])
                    bad.push_back(fmt::format("map does not commute with {}-th powers at {}", p, cg.names[static_cast<std::size_t>(c)]));
        }
    if (!bad.empty()) throw MapInconsistent(fmt::format("{}", fmt::join(bad, "; ")));
}

ClassFunction QuotientPullback::pull(const ClassFunction& f) const {
    if (!same_classes(f.classes(), q_.classes)) throw MismatchedClasses("pullback of a class function not on the quotient");
    std::vector<Cyclotomic> v;
    for (int d : map_) v.push_back(f[d]);
    return ClassFunction(g_.classes, std::move(v));
}

bool QuotientPullback::preserves_inner_products() const {
    for (int i = 0; i < q_.size(); ++i)
        for (int j = 0; j < q_.size(); ++j)
            if (!(inner_product(q_.irr(i), q_.irr(j)) == inner_product(pull(q_.irr(i)), pull(q_.irr(j))))) return false;
    return true;
}

bool QuotientPullback::transfer_holds(const ClassFunction& chi_q, int j, PowerOp op, int m) const {
    auto sq = op == PowerOp::sym ? sym_seq(chi_q, m) : lambda_seq(chi_q, m);
    auto sg = op == PowerOp::sym ? sym_seq(pull(chi_q), m) : lambda_seq(pull(chi_q), m);
    const auto& vq = op == PowerOp::sym ? sq.syms : sq.lambdas;
    const auto& vg = op == PowerOp::sym ? sg.syms : sg.lambdas;
    ClassFunction phi = q_.irr(j), pulled = pull(phi);
    for (int i = 0; i <= m; ++i)
        if (!(inner_product(pulled, vg[static_cast<std::size_t>(i)]) == inner_product(phi, vq[static_cast<std::size_t>(i)]))) return false;
    return true;
}

} // namespace lambdachar
