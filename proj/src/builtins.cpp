#include "lambdachar/builtins.hpp"

#include "lambdachar/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <numeric>

namespace lambdachar {

namespace {

using Row = std::vector<Cyclotomic>;

long positive_mod(long a, long m) { return ((a % m) + m) % m; }

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Row ints(std::initializer_list<int> v) { return Row(v.begin(), v.end()); }

struct Builder {
    std::string name;
    ClassData cd;
    std::vector<std::string> irr_names;
    std::vector<Row> rows;

    void add_class(std::string n, long size, int order, int inverse) {
        cd.names.push_back(std::move(n));
        cd.sizes.push_back(size);
        cd.rep_orders.push_back(order);
        cd.inverse_class.push_back(inverse);
    }

    void add_irr(std::string n, Row values) {
        irr_names.push_back(std::move(n));
        rows.push_back(std::move(values));
    }

    // Fills prime power maps from an element-level rule class -> class of g^q.
    template <class F>
    void power_maps_from(F&& rule) {
        for (int q : primes_up_to(cd.exponent)) {
            std::vector<int> map;
            for (int c = 0; c < cd.class_count(); ++c) map.push_back(rule(c, q));
            cd.prime_power_maps[q] = std::move(map);
        }
    }

    CharacterTable finish() {
        cd.group_order = std::accumulate(cd.sizes.begin(), cd.sizes.end(), 0L);
        cd.exponent = std::accumulate(cd.rep_orders.begin(), cd.rep_orders.end(), 1,
                                      [](int a, int b) { return std::lcm(a, b); });
        derive_coprime_power_maps(cd, rows);
        CharacterTable ct;
        ct.name = name;
        ct.root_order = cd.exponent;
        auto classes = std::make_shared<const ClassData>(cd);
        ct.classes = classes;
        ct.irr_names = irr_names;
        for (auto& r : rows) ct.irreducibles.emplace_back(classes, r);
        auto report = validate_table(ct);
        if (!report.ok())
            throw InvalidTable(fmt::format("builtin {} fails validation: {}", name, fmt::join(report.failures(), "; ")));
        return ct;
    }
};

CharacterTable build_s3() {
    Builder b;
    b.name = "S3";
    b.add_class("C1", 1, 1, 0);
    b.add_class("C2", 3, 2, 1);
    b.add_class("C3", 2, 3, 2);
    b.cd.exponent = 6;
    b.cd.prime_power_maps = {{2, {0, 0, 2}}, {3, {0, 1, 0}}};
    b.add_irr("chi1", ints({1, 1, 1}));
    b.add_irr("chi2", ints({1, -1, 1}));
    b.add_irr("chi3", ints({2, 0, -1}));
    return b.finish();
}

CharacterTable build_a4() {
    Builder b;
    b.name = "A4";
    b.add_class("C1", 1, 1, 0);
    b.add_class("C2", 3, 2, 1);
    b.add_class("C3", 4, 3, 3);
    b.add_class("C4", 4, 3, 2);
    b.cd.exponent = 6;
    b.cd.prime_power_maps = {{2, {0, 0, 3, 2}}, {3, {0, 1, 0, 0}}};
    Cyclotomic w = Cyclotomic::root(6, 2), w2 = Cyclotomic::root(6, 4);
    b.add_irr("chi1", ints({1, 1, 1, 1}));
    b.add_irr("chi2", {1, 1, w, w2});
    b.add_irr("chi3", {1, 1, w2, w});
    b.add_irr("chi4", ints({3, -1, 0, 0}));
    return b.finish();
}

CharacterTable build_g21() {
    Builder b;
    b.name = "G21";
    b.add_class("C1", 1, 1, 0);
    b.add_class("C2", 3, 7, 2);
    b.add_class("C3", 3, 7, 1);
    b.add_class("C4", 7, 3, 4);
    b.add_class("C5", 7, 3, 3);
    b.cd.exponent = 21;
    b.cd.prime_power_maps = {{3, {0, 2, 1, 0, 0}}, {7, {0, 0, 0, 3, 4}}};
    Cyclotomic w = Cyclotomic::root(21, 7), w2 = Cyclotomic::root(21, 14);
    // a = eta + eta^2 + eta^4, b = eta^3 + eta^5 + eta^6 with eta = z21^3
    Cyclotomic a = Cyclotomic::make(21, {{3, 1}, {6, 1}, {12, 1}});
    Cyclotomic c = Cyclotomic::make(21, {{9, 1}, {15, 1}, {18, 1}});
    b.add_irr("chi1", ints({1, 1, 1, 1, 1}));
    b.add_irr("chi2", {1, 1, 1, w, w2});
    b.add_irr("chi3", {1, 1, 1, w2, w});
    b.add_irr("chi4", {3, a, c, 0, 0});
    b.add_irr("chi5", {3, c, a, 0, 0});
    return b.finish();
}

CharacterTable build_s4() {
    Builder b;
    b.name = "S4";
    b.add_class("C1", 1, 1, 0);
    b.add_class("C2", 6, 2, 1);
    b.add_class("C3", 8, 3, 2);
    b.add_class("C4", 6, 4, 3);
    b.add_class("C5", 3, 2, 4);
    b.cd.exponent = 12;
    b.cd.prime_power_maps = {{2, {0, 0, 2, 4, 0}}, {3, {0, 1, 0, 3, 4}}};
    b.add_irr("chi1", ints({1, 1, 1, 1, 1}));
    b.add_irr("chi2", ints({1, -1, 1, -1, 1}));
    b.add_irr("chi3", ints({3, 1, 0, -1, -1}));
    b.add_irr("chi4", ints({3, -1, 0, 1, -1}));
    b.add_irr("chi5", ints({2, 0, -1, 0, 2}));
    return b.finish();
}

CharacterTable build_a5() {
    Builder b;
    b.name = "A5";
    b.add_class("C1", 1, 1, 0);
    b.add_class("C2", 15, 2, 1);
    b.add_class("C3", 20, 3, 2);
    b.add_class("C4", 12, 5, 3);
    b.add_class("C5", 12, 5, 4);
    b.cd.exponent = 30;
    b.cd.prime_power_maps = {{2, {0, 0, 2, 4, 3}}, {3, {0, 1, 0, 4, 3}}, {5, {0, 1, 2, 0, 0}}};
    // a = eta + eta^-1, b = eta^2 + eta^-2 with eta = z30^6
    Cyclotomic a = Cyclotomic::make(30, {{6, 1}, {24, 1}});
    Cyclotomic c = Cyclotomic::make(30, {{12, 1}, {18, 1}});
    b.add_irr("chi1", ints({1, 1, 1, 1, 1}));
    b.add_irr("chi2", ints({4, 0, 1, -1, -1}));
    b.add_irr("chi3", ints({5, 1, -1, 0, 0}));
    b.add_irr("chi4", {3, -1, 0, -c, -a});
    b.add_irr("chi5", {3, -1, 0, -a, -c});
    return b.finish();
}

// Index of the rotation class containing a^i when rotations have period p.
int rotation_class(long i, long p) {
    long r = positive_mod(i, p);
    return static_cast<int>(std::min(r, p - r));
}

CharacterTable build_d2n(int n) {
    Builder b;
    b.name = fmt::format("D2n:{}", n);
    bool even = n % 2 == 0;
    int r = n / 2;
    for (int i = 0; i <= r; ++i) {
        long size = i == 0 || (even && i == r) ? 1 : 2;
        b.add_class(fmt::format("C{}", i), size, n / std::gcd(i, n), i);
    }
    int cp = r + 1;
    if (even) {
        b.add_class("Cp", n / 2, 2, cp);
        b.add_class("Cpp", n / 2, 2, cp + 1);
    } else {
        b.add_class("Cp", n, 2, cp);
    }
    b.cd.exponent = std::lcm(n, 2);
    b.power_maps_from([&](int c, int q) {
        if (c < cp) return rotation_class(static_cast<long>(c) * q, n);
        return q % 2 == 0 ? 0 : c;
    });
    int N = b.cd.exponent;
    int k_classes = b.cd.class_count();
    auto linear = [&](int rot_sign, int v1, int v2) {
        Row v;
        for (int i = 0; i < cp; ++i) v.emplace_back(rot_sign < 0 && i % 2 ? -1 : 1);
        v.emplace_back(v1);
        if (even) v.emplace_back(v2);
        return v;
    };
    b.add_irr("chi1", linear(1, 1, 1));
    b.add_irr("chi2", linear(1, -1, -1));
    if (even) {
        b.add_irr("chi3", linear(-1, 1, -1));
        b.add_irr("chi4", linear(-1, -1, 1));
    }
    int taus = even ? r - 1 : r;
    for (int k = 1; k <= taus; ++k) {
        Row v(static_cast<std::size_t>(k_classes), Cyclotomic(0));
        for (int i = 0; i < cp; ++i)
            v[static_cast<std::size_t>(i)] = Cyclotomic::make(N, {{static_cast<long>(i) * k * (N / n), 1}, {-static_cast<long>(i) * k * (N / n), 1}});
        b.add_irr(fmt::format("tau{}", k), std::move(v));
    }
    return b.finish();
}

CharacterTable build_q4n(int n) {
    Builder b;
    b.name = fmt::format("Q4n:{}", n);
    bool even = n % 2 == 0;
    int cp = n + 1;
    for (int i = 0; i <= n; ++i) {
        long size = i == 0 || i == n ? 1 : 2;
        b.add_class(fmt::format("C{}", i), size, 2 * n / std::gcd(i, 2 * n), i);
    }
    // (b a^j)^-1 = b a^(j-n): the parity class is kept iff n is even
    b.add_class("Cp", n, 4, even ? cp : cp + 1);
    b.add_class("Cpp", n, 4, even ? cp + 1 : cp);
    b.cd.exponent = std::lcm(2 * n, 4);
    b.power_maps_from([&](int c, int q) {
        if (c < cp) return rotation_class(static_cast<long>(c) * q, 2 * n);
        switch (q % 4) {
        case 0: return 0;
        case 2: return n;
        case 1: return c;
        default: return b.cd.inverse_class[static_cast<std::size_t>(c)];
        }
    });
    int N = b.cd.exponent;
    Cyclotomic im = Cyclotomic::root(N, N / 4);
    auto linear = [&](bool alternating, const Cyclotomic& v1, const Cyclotomic& v2) {
        Row v;
        for (int i = 0; i < cp; ++i) v.emplace_back(alternating && i % 2 ? -1 : 1);
        v.push_back(v1);
        v.push_back(v2);
        return v;
    };
    b.add_irr("chi1", linear(false, 1, 1));
    b.add_irr("chi2", linear(false, -1, -1));
    if (even) {
        b.add_irr("chi3p", linear(true, 1, -1));
        b.add_irr("chi4p", linear(true, -1, 1));
    } else {
        b.add_irr("chi3pp", linear(true, im, -im));
        b.add_irr("chi4pp", linear(true, -im, im));
    }
    for (int k = 1; k <= n - 1; ++k) {
        Row v(static_cast<std::size_t>(cp + 2), Cyclotomic(0));
        for (int i = 0; i < cp; ++i)
            v[static_cast<std::size_t>(i)] =
                Cyclotomic::make(N, {{static_cast<long>(i) * k * (N / (2 * n)), 1}, {-static_cast<long>(i) * k * (N / (2 * n)), 1}});
        b.add_irr(fmt::format("tau{}", k), std::move(v));
    }
    return b.finish();
}

// Class index of C(h) is h; C(e, f) follows in lexicographic order of (e, f).
int hp_class(int p, long e, long f, long h) {
    e = positive_mod(e, p);
    f = positive_mod(f, p);
    if (e == 0 && f == 0) return static_cast<int>(positive_mod(h, p));
    return static_cast<int>(p + e * p + f - 1);
}

CharacterTable build_hp(int p) {
    Builder b;
    b.name = fmt::format("Hp:{}", p);
    for (int h = 0; h < p; ++h) b.add_class(fmt::format("C{}", h), 1, h == 0 ? 1 : p, hp_class(p, 0, 0, -h));
    for (int e = 0; e < p; ++e)
        for (int f = 0; f < p; ++f)
            if (e || f) b.add_class(fmt::format("C{}_{}", e, f), p, p, hp_class(p, -e, -f, 0));
    b.cd.exponent = p;
    b.power_maps_from([&](int c, int q) {
        if (c < p) return hp_class(p, 0, 0, static_cast<long>(c) * q);
        int ef = c - p + 1;
        long e = ef / p, f = ef % p;
        if (q % p == 0) return 0;
        return hp_class(p, e * q, f * q, 0);
    });
    int k_classes = b.cd.class_count();
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) {
            Row v(static_cast<std::size_t>(k_classes), Cyclotomic(1));
            for (int e = 0; e < p; ++e)
                for (int f = 0; f < p; ++f)
                    if (e || f) v[static_cast<std::size_t>(hp_class(p, e, f, 0))] = Cyclotomic::root(p, static_cast<long>(e) * i + static_cast<long>(f) * j);
            b.add_irr(fmt::format("chi_{}_{}", i, j), std::move(v));
        }
    for (int s = 1; s < p; ++s) {
        Row v(static_cast<std::size_t>(k_classes), Cyclotomic(0));
        for (int h = 0; h < p; ++h) v[static_cast<std::size_t>(h)] = Cyclotomic(p) * Cyclotomic::root(p, static_cast<long>(s) * h);
        b.add_irr(fmt::format("tau{}", s), std::move(v));
    }
    return b.finish();
}

std::vector<Permutation> model_generators(const FamilyParams& params) {
    auto cyc = [](const char* text, int degree) { return Permutation::parse_cycles(text, degree); };
    auto from_rule = [](int degree, auto&& rule) {
        std::vector<int> images;
        for (int i = 0; i < degree; ++i) images.push_back(rule(i));
        return Permutation(std::move(images));
    };
    switch (params.family) {
    case Family::S3: return {cyc("(0 1)", 3), cyc("(0 1 2)", 3)};
    case Family::A4: return {cyc("(0 1 2)", 4), cyc("(0 1)(2 3)", 4)};
    case Family::S4: return {cyc("(0 1)", 4), cyc("(0 1 2 3)", 4)};
    case Family::A5: return {cyc("(0 1 2 3 4)", 5), cyc("(0 1 2)", 5)};
    case Family::G21:
        return {from_rule(7, [](int i) { return (i + 1) % 7; }), from_rule(7, [](int i) { return 2 * i % 7; })};
    case Family::D2n: {
        int n = *params.parameter;
        return {from_rule(n, [n](int i) { return (i + 1) % n; }), from_rule(n, [n](int i) { return (n - i) % n; })};
    }
    case Family::Q4n: {
        // a^i b^j sits at i + 2n j; left multiplication by a and by b
        int n = *params.parameter, m = 2 * n;
        auto ga = from_rule(2 * m, [m](int x) { return (x % m + 1) % m + (x / m) * m; });
        auto gb = from_rule(2 * m, [m, n](int x) {
            int i = x % m;
            return x < m ? (m - i) % m + m : ((m - i) % m + n) % m;
        });
        return {ga, gb};
    }
    case Family::Hp: {
        // (a, b, c) sits at (a p + b) p + c; left multiplication by the
        // unit upper-triangular matrices with a = 1 and with c = 1
        int p = *params.parameter;
        auto idx = [p](int a, int b2, int c) { return ((a % p) * p + (b2 % p)) * p + (c % p); };
        auto gx = from_rule(p * p * p, [p, idx](int x) {
            int a = x / (p * p), b2 = x / p % p, c = x % p;
            return idx(a + 1, b2 + c, c);
        });
        auto gy = from_rule(p * p * p, [p, idx](int x) {
            int a = x / (p * p), b2 = x / p % p, c = x % p;
            return idx(a, b2, c + 1);
        });
        return {gx, gy};
    }
    }
    throw NoModel("no permutation model");
}

} // namespace

FamilyParams FamilyParams::parse(std::string_view selector) {
    static const std::pair<const char*, Family> names[] = {
        {"S3", Family::S3},   {"A4", Family::A4},   {"G21", Family::G21}, {"S4", Family::S4},
        {"A5", Family::A5},   {"D2n", Family::D2n}, {"Q4n", Family::Q4n}, {"Hp", Family::Hp},
    };
    auto colon = selector.find(':');
    std::string_view head = selector.substr(0, colon);
    FamilyParams fp;
    bool found = false;
    for (const auto& [n, f] : names)
        if (head == n) {
            fp.family = f;
            found = true;
        }
    if (!found) throw InputError(fmt::format("unknown group '{}'", selector));
    if (colon != std::string_view::npos) {
        std::string_view tail = selector.substr(colon + 1);
        int v = 0;
        auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), v);
        if (ec != std::errc() || ptr != tail.data() + tail.size())
            throw InputError(fmt::format("invalid group parameter in '{}'", selector));
        fp.parameter = v;
    }
    check_params(fp);
    return fp;
}

std::string FamilyParams::to_string() const {
    static const char* names[] = {"S3", "A4", "G21", "S4", "A5", "D2n", "Q4n", "Hp"};
    std::string s = names[static_cast<int>(family)];
    if (parameter) s += fmt::format(":{}", *parameter);
    return s;
}

void check_params(const FamilyParams& fp) {
    bool parametric = fp.family == Family::D2n || fp.family == Family::Q4n || fp.family == Family::Hp;
    if (!parametric) {
        if (fp.parameter) throw InputError(fmt::format("group {} takes no parameter", fp.to_string()));
        return;
    }
    if (!fp.parameter) throw InputError(fmt::format("group family {} needs a parameter", fp.to_string()));
    int v = *fp.parameter;
    switch (fp.family) {
    case Family::D2n:
        if (v < 3 || v > max_d2n_parameter)
            throw InputError(fmt::format("D2n needs 3 <= n <= {}, got {}", max_d2n_parameter, v));
        break;
    case Family::Q4n:
        if (v < 2 || v > max_q4n_parameter)
            throw InputError(fmt::format("Q4n needs 2 <= n <= {}, got {}", max_q4n_parameter, v));
        break;
    default:
        if (v < 3 || v > max_hp_parameter || !is_prime(v))
            throw InputError(fmt::format("Hp needs an odd prime p <= {}, got {}", max_hp_parameter, v));
    }
}

std::vector<FamilyParams> sample_builtins() {
    return {{Family::S3, {}},    {Family::A4, {}},    {Family::G21, {}},   {Family::S4, {}},
            {Family::A5, {}},    {Family::D2n, 5},    {Family::D2n, 6},    {Family::Q4n, 2},
            {Family::Q4n, 3},    {Family::Hp, 3}};
}

CharacterTable get_group(const FamilyParams& params) {
    check_params(params);
    switch (params.family) {
    case Family::S3: return build_s3();
    case Family::A4: return build_a4();
    case Family::G21: return build_g21();
    case Family::S4: return build_s4();
    case Family::A5: return build_a5();
    case Family::D2n: return build_d2n(*params.parameter);
    case Family::Q4n: return build_q4n(*params.parameter);
    case Family::Hp: return build_hp(*params.parameter);
    }
    throw InputError("unknown family");
}

GroupBundle get_bundle(const FamilyParams& params) {
    GroupBundle g;
    g.table = get_group(params);
    const ClassData& cd = *g.table.classes;
    int k = cd.class_count();
    std::vector<int> all(static_cast<std::size_t>(k));
    std::iota(all.begin(), all.end(), 0);
    auto normal = [&](std::vector<int> classes, const std::string& name) {
        g.normal_subgroups.push_back(make_normal_subgroup(cd, std::move(classes), name));
    };
    normal({0}, "1");
    switch (params.family) {
    case Family::S3: normal({0, 2}, "A3"); break;
    case Family::A4: normal({0, 1}, "V"); break;
    case Family::G21: normal({0, 1, 2}, "C7"); break;
    case Family::S4:
        normal({0, 4}, "V");
        normal({0, 2, 4}, "A4");
        g.quotients.push_back({"S3", "V", {0, 1, 2, 1, 0}});
        break;
    case Family::A5: break;
    case Family::D2n: {
        int n = *params.parameter;
        normal(std::vector<int>(all.begin(), all.begin() + n / 2 + 1), "rotations");
        break;
    }
    case Family::Q4n: {
        int n = *params.parameter;
        normal({0, n}, "center");
        normal(std::vector<int>(all.begin(), all.begin() + n + 1), "cyclic");
        if (n >= 3) {
            // Q4n / <a^n> is D2n: a^i -> rotation i mod n, b a^j -> reflection b a^j
            std::vector<int> map;
            for (int i = 0; i <= n; ++i) map.push_back(rotation_class(i, n));
            int dcp = n / 2 + 1;
            map.push_back(dcp);
            map.push_back(n % 2 == 0 ? dcp + 1 : dcp);
            g.quotients.push_back({fmt::format("D2n:{}", n), "center", std::move(map)});
        }
        break;
    }
    case Family::Hp: {
        int p = *params.parameter;
        normal(std::vector<int>(all.begin(), all.begin() + p), "Z");
        for (int s = 1; s < p; ++s) {
            CentralCharSpec spec;
            spec.name = fmt::format("tau{}", s);
            spec.subgroup = g.normal_subgroups.back();
            for (int h = 0; h < p; ++h) spec.zeta[h] = Cyclotomic::root(p, static_cast<long>(s) * h);
            spec.multiplier = p;
            g.central_chars.push_back(std::move(spec));
        }
        break;
    }
    }
    if (k > 1) normal(all, "G");
    for (const auto& p : model_generators(params)) g.generators.push_back(p.to_cycles());
    return g;
}

void TauFamilyExpr::add(const std::string& name, const Rational& c) {
    auto& v = terms[name];
    v += c;
    if (v.is_zero()) terms.erase(name);
}

MultiplicityVector TauFamilyExpr::to_multiplicities(const CharacterTable& ct) const {
    MultiplicityVector m;
    m.coeffs.assign(static_cast<std::size_t>(ct.size()), Rational(0));
    for (const auto& [name, c] : terms) {
        int j = ct.index_of(name);
        if (j < 0) throw InputError(fmt::format("unknown irreducible '{}' in closed form", name));
        m.coeffs[static_cast<std::size_t>(j)] = c;
    }
    return m;
}

std::string format_decomposition(const MultiplicityVector& m, const CharacterTable& ct) {
    std::string out;
    for (int j = 0; j < ct.size(); ++j) {
        const Rational& c = m.coeffs[static_cast<std::size_t>(j)];
        if (c.is_zero()) continue;
        Rational a = c.sign() < 0 ? -c : c;
        if (out.empty()) out += c.sign() < 0 ? "-" : "";
        else out += c.sign() < 0 ? " - " : " + ";
        if (a != Rational(1)) out += a.to_string() + "*";
        out += ct.irr_names[static_cast<std::size_t>(j)];
    }
    return out.empty() ? "0" : out;
}

std::string TauFamilyExpr::to_string(const CharacterTable& ct) const {
    return format_decomposition(to_multiplicities(ct), ct);
}

ClassFunction tau_prime(const CharacterTable& ct, const FamilyParams& params, long k) {
    if (params.family != Family::D2n && params.family != Family::Q4n)
        throw InputError("tau' is defined for D2n and Q4n only");
    int n = *params.parameter;
    long period = params.family == Family::D2n ? n : 2L * n;
    int rotations = static_cast<int>(period / 2) + 1;
    int N = ct.classes->exponent;
    std::vector<Cyclotomic> v;
    for (int c = 0; c < ct.classes->class_count(); ++c) {
        if (c < rotations) {
            long e = positive_mod(static_cast<long>(c) * k, period) * (N / period);
            v.push_back(Cyclotomic::make(N, {{e, 1}, {-e, 1}}));
        } else {
            v.emplace_back(0);
        }
    }
    return ClassFunction(ct.classes, std::move(v));
}

TauFamilyExpr normalize_tau(const FamilyParams& params, long k) {
    if (params.family != Family::D2n && params.family != Family::Q4n)
        throw InputError("tau' is defined for D2n and Q4n only");
    int n = *params.parameter;
    long period = params.family == Family::D2n ? n : 2L * n;
    long r = rotation_class(k, period);
    TauFamilyExpr e;
    if (r == 0) {
        e.add("chi1", 1);
        e.add("chi2", 1);
    } else if (2 * r == period) {
        if (params.family == Family::D2n) {
            e.add("chi3", 1);
            e.add("chi4", 1);
        } else if (n % 2 == 0) {
            e.add("chi3p", 1);
            e.add("chi4p", 1);
        } else {
            e.add("chi3pp", 1);
            e.add("chi4pp", 1);
        }
    } else {
        e.add(fmt::format("tau{}", r), 1);
    }
    return e;
}

TauFamilyExpr family_closed_form(const FamilyParams& params, long k, PowerOp op, int n) {
    check_params(params);
    if (n < 0) throw InputError("degree must be nonnegative");
    TauFamilyExpr e;
    auto add_all = [&e](const TauFamilyExpr& x) {
        for (const auto& [name, c] : x.terms) e.add(name, c);
    };
    if (params.family == Family::D2n || params.family == Family::Q4n) {
        bool quaternion = params.family == Family::Q4n;
        // chi2^e resolved to chi1 or chi2
        auto chi2_pow = [](long ex) { return positive_mod(ex, 2) == 0 ? "chi1" : "chi2"; };
        if (op == PowerOp::ext) {
            if (n == 0) e.add("chi1", 1);
            else if (n == 1) add_all(normalize_tau(params, k));
            else if (n == 2) e.add(quaternion ? chi2_pow(k + 1) : "chi2", 1);
            return e;
        }
        if (n == 0) {
            e.add("chi1", 1);
        } else if (n % 2 == 1) {
            for (long i = 1; i <= (n + 1) / 2; ++i) add_all(normalize_tau(params, (2 * i - 1) * k));
        } else {
            long m = n / 2;
            for (long i = 1; i <= m; ++i) add_all(normalize_tau(params, 2 * i * k));
            e.add(quaternion ? chi2_pow(m * k) : "chi1", 1);
        }
        return e;
    }
    if (params.family != Family::Hp) throw InputError("closed forms exist for D2n, Q4n and Hp only");
    long p = *params.parameter;
    if (k < 1 || k >= p) throw InputError(fmt::format("tau_s needs 1 <= s <= {}", p - 1));
    std::string tau_n = fmt::format("tau{}", positive_mod(static_cast<long>(n) * k, p));
    if (op == PowerOp::ext) {
        if (n == 0 || n == p) e.add("chi_0_0", 1);
        else if (n < p) e.add(tau_n, Rational(binomial(p, n), BigInt(p)));
        return e;
    }
    Rational c(binomial(p + n - 1, n));
    if (n % p == 0) {
        Rational p2(p * p);
        for (long i = 0; i < p; ++i)
            for (long j = 0; j < p; ++j)
                e.add(fmt::format("chi_{}_{}", i, j), i == 0 && j == 0 ? (c + p2 - Rational(1)) / p2 : (c - Rational(1)) / p2);
    } else {
        e.add(tau_n, c / Rational(p));
    }
    return e;
}

PermModel get_perm_model(const FamilyParams& params) {
    check_params(params);
    PermModel m;
    try {
        m.group = enumerate(model_generators(params));
    } catch (const CapExceeded& e) {
        throw NoModel(fmt::format("no permutation model for {}: {}", params.to_string(), e.what()));
    }
    m.classes = conjugacy_classes(m.group);
    auto ct = get_group(params);
    auto match = match_class_data(*ct.classes, *m.classes.data);
    if (!match) throw NoModel(fmt::format("permutation model for {} does not match the table", params.to_string()));
    m.class_map = std::move(*match);
    return m;
}

} // namespace lambdachar
