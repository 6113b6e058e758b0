#include "lambdachar/group.hpp"

#include "lambdachar/errors.hpp"

#include <fmt/format.h>

#include <numeric>
#include <set>

namespace lambdachar {

namespace {

long mod_pos(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

// A unit k modulo `ambient` with k = q (mod base); sigma_k then acts on
// Q(zeta_base) as zeta -> zeta^q.
long galois_unit(long q, long base, long ambient) {
    for (long k = mod_pos(q, base); k < base * ambient + base; k += base)
        if (k > 0 && std::gcd(k, ambient) == 1) return k;
    throw InvalidTable(fmt::format("no Galois unit for {} mod {}", q, base));
}

} // namespace

int ClassData::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i);
    return -1;
}

std::vector<int> primes_up_to(int n) {
    std::vector<int> out;
    for (int p = 2; p <= n; ++p) {
        bool prime = true;
        for (int d = 2; d * d <= p && prime; ++d) prime = p % d != 0;
        if (prime) out.push_back(p);
    }
    return out;
}

std::vector<long> prime_factors(long n) {
    std::vector<long> out;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        out.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::vector<int> power_map(const ClassData& cd, long n) {
    int k = cd.class_count();
    std::vector<int> map(static_cast<std::size_t>(k));
    std::iota(map.begin(), map.end(), 0);
    long r = mod_pos(n, cd.exponent);
    if (r == 0) return std::vector<int>(static_cast<std::size_t>(k), 0);
    for (long p = 2; r > 1; ++p) {
        while (r % p == 0) {
            r /= p;
            auto it = cd.prime_power_maps.find(static_cast<int>(p));
            if (it == cd.prime_power_maps.end())
                throw InvalidTable(fmt::format("class data has no power map for prime {}", p));
            for (auto& c : map) c = it->second[static_cast<std::size_t>(c)];
        }
    }
    return map;
}

int order_modulo(const ClassData& cd, int c, const std::vector<bool>& in_subgroup) {
    for (int n = 1; n <= cd.exponent; ++n) {
        if (cd.exponent % n) continue;
        if (in_subgroup[static_cast<std::size_t>(power_map(cd, n)[static_cast<std::size_t>(c)])]) return n;
    }
    return cd.exponent;
}

std::vector<std::string> check_class_data(const ClassData& cd) {
    std::vector<std::string> bad;
    int k = cd.class_count();
    auto uk = static_cast<std::size_t>(k);
    if (k == 0) return {"no classes"};
    if (cd.names.size() != uk || cd.rep_orders.size() != uk || cd.inverse_class.size() != uk)
        return {"class vectors have inconsistent lengths"};
    std::set<std::string> seen(cd.names.begin(), cd.names.end());
    if (seen.size() != uk) bad.push_back("class names are not unique");
    long total = 0;
    for (int c = 0; c < k; ++c) {
        long s = cd.sizes[static_cast<std::size_t>(c)];
        if (s <= 0) bad.push_back(fmt::format("class {} has nonpositive size", cd.names[static_cast<std::size_t>(c)]));
        else if (cd.group_order % s) bad.push_back(fmt::format("size of class {} does not divide |G|", cd.names[static_cast<std::size_t>(c)]));
        total += s;
    }
    if (total != cd.group_order)
        bad.push_back(fmt::format("class sizes sum to {} but |G| = {}", total, cd.group_order));
    if (cd.sizes[0] != 1 || cd.rep_orders[0] != 1) bad.push_back("class 0 is not the identity class");
    long lcm = 1;
    for (int c = 0; c < k; ++c) {
        int o = cd.rep_orders[static_cast<std::size_t>(c)];
        if (o < 1) {
            bad.push_back(fmt::format("class {} has nonpositive order", c));
            return bad;
        }
        if (c > 0 && o == 1) bad.push_back(fmt::format("class {} has order 1 but is not class 0", c));
        lcm = std::lcm(lcm, static_cast<long>(o));
    }
    if (lcm != cd.exponent) bad.push_back(fmt::format("exponent {} differs from lcm of orders {}", cd.exponent, lcm));
    if (cd.exponent < 1 || cd.group_order % cd.exponent) bad.push_back("exponent does not divide |G|");
    for (int c = 0; c < k; ++c) {
        int i = cd.inverse_class[static_cast<std::size_t>(c)];
        if (i < 0 || i >= k) {
            bad.push_back(fmt::format("inverse of class {} out of range", c));
            return bad;
        }
        auto ui = static_cast<std::size_t>(i);
        auto uc = static_cast<std::size_t>(c);
        if (cd.inverse_class[ui] != c) bad.push_back(fmt::format("inverse map is not an involution at class {}", c));
        if (cd.sizes[ui] != cd.sizes[uc] || cd.rep_orders[ui] != cd.rep_orders[uc])
            bad.push_back(fmt::format("class {} and its inverse differ in size or order", c));
    }
    for (int p : primes_up_to(cd.exponent))
        if (!cd.prime_power_maps.count(p)) bad.push_back(fmt::format("missing power map for prime {}", p));
    for (const auto& [p, map] : cd.prime_power_maps) {
        if (map.size() != uk) {
            bad.push_back(fmt::format("power map for {} has wrong length", p));
            return bad;
        }
        for (int c = 0; c < k; ++c) {
            int t = map[static_cast<std::size_t>(c)];
            if (t < 0 || t >= k) {
                bad.push_back(fmt::format("power map for {} out of range at class {}", p, c));
                return bad;
            }
            int o = cd.rep_orders[static_cast<std::size_t>(c)];
            int expect = o / std::gcd(o, p);
            if (cd.rep_orders[static_cast<std::size_t>(t)] != expect)
                bad.push_back(fmt::format("power map for {} sends class {} (order {}) to order {}", p, c, o,
                                          cd.rep_orders[static_cast<std::size_t>(t)]));
            int ti = cd.inverse_class[static_cast<std::size_t>(c)];
            if (map[static_cast<std::size_t>(ti)] != cd.inverse_class[static_cast<std::size_t>(t)])
                bad.push_back(fmt::format("power map for {} does not commute with inversion at class {}", p, c));
        }
    }
    if (!bad.empty()) return bad;
    for (int c = 0; c < k; ++c) {
        auto m = power_map(cd, cd.rep_orders[static_cast<std::size_t>(c)]);
        if (m[static_cast<std::size_t>(c)] != 0)
            bad.push_back(fmt::format("class {} raised to its order is not the identity", c));
    }
    return bad;
}

ClassFunction::ClassFunction(ClassDataPtr classes, std::vector<Cyclotomic> values)
    : classes_(std::move(classes)), values_(std::move(values)) {
    if (!classes_ || static_cast<int>(values_.size()) != classes_->class_count())
        throw MismatchedClasses("class function length differs from class count");
}

ClassFunction ClassFunction::constant(ClassDataPtr classes, const Cyclotomic& value) {
    std::vector<Cyclotomic> v(static_cast<std::size_t>(classes->class_count()), value);
    return ClassFunction(std::move(classes), std::move(v));
}

bool ClassFunction::is_zero() const {
    for (const auto& v : values_)
        if (!v.is_zero()) return false;
    return true;
}

bool same_classes(const ClassDataPtr& a, const ClassDataPtr& b) {
    return a == b || (a && b && *a == *b);
}

void ClassFunction::require_same(const ClassFunction& o) const {
    if (!same_classes(classes_, o.classes_)) throw MismatchedClasses("class functions live on different class data");
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
    require_same(o);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
    return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& o) {
    require_same(o);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
    return *this;
}

ClassFunction& ClassFunction::operator*=(const ClassFunction& o) {
    require_same(o);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] *= o.values_[i];
    return *this;
}

ClassFunction operator*(const Cyclotomic& s, ClassFunction f) {
    for (auto& v : f.values_) v = s * v;
    return f;
}

ClassFunction ClassFunction::operator-() const {
    ClassFunction r = *this;
    for (auto& v : r.values_) v = -v;
    return r;
}

bool operator==(const ClassFunction& a, const ClassFunction& b) {
    return same_classes(a.classes_, b.classes_) && a.values_ == b.values_;
}

std::string ClassFunction::to_string() const {
    std::vector<std::string> parts;
    for (const auto& v : values_) parts.push_back(v.to_string());
    return "(" + fmt::format("{}", fmt::join(parts, ", ")) + ")";
}

int CharacterTable::index_of(std::string_view irr_name) const {
    for (std::size_t i = 0; i < irr_names.size(); ++i)
        if (irr_names[i] == irr_name) return static_cast<int>(i);
    return -1;
}

bool MultiplicityVector::is_integral() const {
    for (const auto& c : coeffs)
        if (!c.is_integer()) return false;
    return true;
}

bool MultiplicityVector::is_nonnegative() const {
    for (const auto& c : coeffs)
        if (c.sign() < 0) return false;
    return true;
}

Cyclotomic inner_product(const ClassFunction& f, const ClassFunction& f2) {
    if (!same_classes(f.classes(), f2.classes())) throw MismatchedClasses("inner product of class functions on different classes");
    const ClassData& cd = *f.classes();
    Cyclotomic acc(0);
    for (int c = 0; c < cd.class_count(); ++c) {
        const auto& a = f[c];
        if (a.is_zero()) continue;
        const auto& b = f2[cd.inverse_class[static_cast<std::size_t>(c)]];
        if (b.is_zero()) continue;
        acc += Cyclotomic(Rational(cd.sizes[static_cast<std::size_t>(c)])) * a * b;
    }
    return Cyclotomic(Rational(1, cd.group_order)) * acc;
}

MultiplicityVector decompose(const ClassFunction& f, const CharacterTable& ct) {
    MultiplicityVector m;
    m.coeffs.reserve(static_cast<std::size_t>(ct.size()));
    for (int j = 0; j < ct.size(); ++j) {
        Cyclotomic ip = inner_product(ct.irr(j), f);
        if (!ip.is_rational())
            throw NonRationalMultiplicity(fmt::format("multiplicity of {} is {}, not rational",
                                                      ct.irr_names[static_cast<std::size_t>(j)], ip.to_string()));
        m.coeffs.push_back(ip.to_rational());
    }
    if (!(combine(ct, m) == f))
        throw InvalidTable("class function is not in the span of the irreducibles of " + ct.name);
    return m;
}

ClassFunction combine(const CharacterTable& ct, const MultiplicityVector& m) {
    ClassFunction acc = ClassFunction::zero(ct.classes);
    for (int j = 0; j < ct.size(); ++j) {
        const Rational& c = m.coeffs[static_cast<std::size_t>(j)];
        if (!c.is_zero()) acc += Cyclotomic(c) * ct.irr(j);
    }
    return acc;
}

bool ValidationReport::ok() const {
    for (const auto& c : checks)
        if (!c.ok) return false;
    return true;
}

void ValidationReport::add(std::string name, bool ok, std::string detail) {
    checks.push_back({std::move(name), ok, std::move(detail)});
}

std::vector<std::string> ValidationReport::failures() const {
    std::vector<std::string> out;
    for (const auto& c : checks)
        if (!c.ok) out.push_back(c.detail.empty() ? c.name : c.name + ": " + c.detail);
    return out;
}

void derive_coprime_power_maps(ClassData& cd, const std::vector<std::vector<Cyclotomic>>& irr_values) {
    int k = cd.class_count();
    int ambient = 1;
    for (const auto& row : irr_values)
        for (const auto& v : row) ambient = std::lcm(ambient, v.order());
    ambient = std::lcm(ambient, cd.exponent);
    for (int q : primes_up_to(cd.exponent)) {
        if (cd.exponent % q == 0 || cd.prime_power_maps.count(q)) continue;
        long unit = galois_unit(q, cd.exponent, ambient);
        std::vector<int> map(static_cast<std::size_t>(k), -1);
        for (int c = 0; c < k; ++c) {
            std::vector<Cyclotomic> target;
            for (const auto& row : irr_values) target.push_back(row[static_cast<std::size_t>(c)].galois(unit));
            for (int d = 0; d < k; ++d) {
                bool match = true;
                for (std::size_t i = 0; i < irr_values.size() && match; ++i)
                    match = irr_values[i][static_cast<std::size_t>(d)] == target[i];
                if (!match) continue;
                if (map[static_cast<std::size_t>(c)] != -1)
                    throw InvalidTable(fmt::format("table columns {} and {} coincide", map[static_cast<std::size_t>(c)], d));
                map[static_cast<std::size_t>(c)] = d;
            }
            if (map[static_cast<std::size_t>(c)] == -1)
                throw InvalidTable(fmt::format("no class matches the Galois image of class {} under {}", c, q));
        }
        cd.prime_power_maps[q] = std::move(map);
    }
}

ValidationReport validate_table(const CharacterTable& ct) {
    ValidationReport rep;
    const ClassData& cd = *ct.classes;
    auto issues = check_class_data(cd);
    rep.add("class data invariants", issues.empty(), fmt::format("{}", fmt::join(issues, "; ")));
    if (!issues.empty()) return rep;
    int k = cd.class_count();
    bool count_ok = ct.size() == k && ct.irr_names.size() == static_cast<std::size_t>(k);
    rep.add("number of irreducibles equals number of classes", count_ok,
            fmt::format("{} irreducibles, {} classes", ct.size(), k));
    if (!count_ok) return rep;
    for (int i = 0; i < k; ++i)
        if (!same_classes(ct.irr(i).classes(), ct.classes)) {
            rep.add("irreducibles share the table's classes", false, ct.irr_names[static_cast<std::size_t>(i)]);
            return rep;
        }

    bool field_ok = true;
    std::string field_detail;
    for (int i = 0; i < k; ++i)
        for (int c = 0; c < k; ++c)
            if (ct.root_order % ct.irr(i)[c].order() != 0 && !ct.irr(i)[c].is_rational()) {
                field_ok = false;
                field_detail = fmt::format("{} at class {}", ct.irr_names[static_cast<std::size_t>(i)], c);
            }
    rep.add("values lie in the ambient cyclotomic field", field_ok, field_detail);

    std::vector<std::string> deg_bad;
    BigInt sumsq = 0;
    for (int i = 0; i < k; ++i) {
        const auto& d = ct.irr(i)[0];
        if (!d.is_rational() || !d.to_rational().is_integer() || d.to_rational().sign() <= 0) {
            deg_bad.push_back(ct.irr_names[static_cast<std::size_t>(i)]);
            continue;
        }
        BigInt v = d.to_rational().numerator();
        sumsq += v * v;
    }
    rep.add("degrees are positive integers", deg_bad.empty(), fmt::format("{}", fmt::join(deg_bad, ", ")));
    rep.add("sum of squared degrees equals |G|", deg_bad.empty() && sumsq == cd.group_order,
            fmt::format("sum = {}, |G| = {}", sumsq.get_str(), cd.group_order));
    bool trivial = false;
    for (int i = 0; i < k && !trivial; ++i)
        trivial = ct.irr(i) == ClassFunction::constant(ct.classes, Cyclotomic(1));
    rep.add("trivial character present", trivial);

    std::vector<std::string> row_bad;
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) {
            Cyclotomic ip = inner_product(ct.irr(i), ct.irr(j));
            if (!(ip == Cyclotomic(i == j ? 1 : 0)))
                row_bad.push_back(fmt::format("<{},{}> = {}", ct.irr_names[static_cast<std::size_t>(i)],
                                              ct.irr_names[static_cast<std::size_t>(j)], ip.to_string()));
        }
    rep.add("row orthogonality", row_bad.empty(), fmt::format("{}", fmt::join(row_bad, "; ")));

    std::vector<std::string> col_bad;
    for (int c = 0; c < k; ++c)
        for (int d = c; d < k; ++d) {
            Cyclotomic acc(0);
            for (int i = 0; i < k; ++i) acc += ct.irr(i)[c] * ct.irr(i)[d].conj();
            Rational expect = c == d ? Rational(cd.group_order) / Rational(cd.sizes[static_cast<std::size_t>(c)]) : Rational(0);
            if (!(acc == Cyclotomic(expect)))
                col_bad.push_back(fmt::format("columns {},{} give {}", cd.names[static_cast<std::size_t>(c)],
                                              cd.names[static_cast<std::size_t>(d)], acc.to_string()));
        }
    rep.add("column orthogonality", col_bad.empty(), fmt::format("{}", fmt::join(col_bad, "; ")));

    std::vector<std::string> inv_bad;
    for (int i = 0; i < k; ++i)
        for (int c = 0; c < k; ++c)
            if (!(ct.irr(i)[cd.inverse_class[static_cast<std::size_t>(c)]] == ct.irr(i)[c].conj()))
                inv_bad.push_back(fmt::format("{} at {}", ct.irr_names[static_cast<std::size_t>(i)], cd.names[static_cast<std::size_t>(c)]));
    rep.add("inverse classes carry conjugate values", inv_bad.empty(), fmt::format("{}", fmt::join(inv_bad, "; ")));

    // chi(g^p) = sigma(chi(g)) for p prime to the order of g, with sigma acting as zeta -> zeta^p.
    int ambient = std::lcm(ct.root_order, cd.exponent);
    std::vector<std::string> gal_bad;
    for (const auto& [p, map] : cd.prime_power_maps)
        for (int c = 0; c < k; ++c) {
            int o = cd.rep_orders[static_cast<std::size_t>(c)];
            if (o % p == 0) continue;
            long unit = galois_unit(p, o, ambient);
            for (int i = 0; i < k; ++i)
                if (!(ct.irr(i)[map[static_cast<std::size_t>(c)]] == ct.irr(i)[c].lifted(ambient).galois(unit)))
                    gal_bad.push_back(fmt::format("p={} class {} {}", p, cd.names[static_cast<std::size_t>(c)],
                                                  ct.irr_names[static_cast<std::size_t>(i)]));
        }
    rep.add("power maps agree with the Galois action", gal_bad.empty(), fmt::format("{}", fmt::join(gal_bad, "; ")));

    // psi^p of each irreducible must be a virtual character.
    std::vector<std::string> adams_bad;
    for (long p : prime_factors(cd.exponent)) {
        auto map = power_map(cd, p);
        for (int i = 0; i < k; ++i) {
            std::vector<Cyclotomic> v;
            for (int c = 0; c < k; ++c) v.push_back(ct.irr(i)[map[static_cast<std::size_t>(c)]]);
            ClassFunction psi(ct.classes, std::move(v));
            bool integral = true;
            for (int j = 0; j < k && integral; ++j) {
                Cyclotomic ip = inner_product(ct.irr(j), psi);
                integral = ip.is_rational() && ip.to_rational().is_integer();
            }
            if (!integral) adams_bad.push_back(fmt::format("psi^{}({})", p, ct.irr_names[static_cast<std::size_t>(i)]));
        }
    }
    rep.add("Adams operations of irreducibles are virtual characters", adams_bad.empty(),
            fmt::format("{}", fmt::join(adams_bad, "; ")));
    return rep;
}

} // namespace lambdachar
