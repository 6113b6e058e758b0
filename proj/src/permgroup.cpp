#include "lambdachar/permgroup.hpp"

#include "lambdachar/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace lambdachar {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> hit(images_.size(), false);
    for (int x : images_) {
        if (x < 0 || x >= degree() || hit[static_cast<std::size_t>(x)])
            throw InputError("image list is not a permutation");
        hit[static_cast<std::size_t>(x)] = true;
    }
}

Permutation Permutation::identity(int degree) {
    std::vector<int> v(static_cast<std::size_t>(degree));
    std::iota(v.begin(), v.end(), 0);
    return Permutation(std::move(v));
}

namespace {

// Cycles as lists of points; validates syntax only.
std::vector<std::vector<int>> parse_cycle_lists(std::string_view text) {
    std::vector<std::vector<int>> cycles;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    skip_ws();
    if (i == text.size()) throw InputError("empty permutation text");
    while (i < text.size()) {
        if (text[i] != '(') throw InputError(fmt::format("expected '(' in '{}'", text));
        ++i;
        std::vector<int> cyc;
        for (;;) {
            skip_ws();
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            if (i < text.size() && text[i] == ')') {
                ++i;
                break;
            }
            std::size_t start = i;
            while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
            if (start == i) throw InputError(fmt::format("malformed cycle in '{}'", text));
            if (i - start > 6) throw InputError(fmt::format("point too large in '{}'", text));
            cyc.push_back(std::stoi(std::string(text.substr(start, i - start))));
        }
        cycles.push_back(std::move(cyc));
        skip_ws();
    }
    return cycles;
}

} // namespace

int Permutation::max_point(std::string_view text) {
    int m = 0;
    for (const auto& cyc : parse_cycle_lists(text))
        for (int x : cyc) m = std::max(m, x + 1);
    return m;
}

Permutation Permutation::parse_cycles(std::string_view text, int degree) {
    std::vector<int> img(static_cast<std::size_t>(degree));
    std::iota(img.begin(), img.end(), 0);
    std::vector<bool> used(static_cast<std::size_t>(degree), false);
    for (const auto& cyc : parse_cycle_lists(text)) {
        for (int x : cyc) {
            if (x >= degree) throw InputError(fmt::format("point {} exceeds degree {} in '{}'", x, degree, text));
            if (used[static_cast<std::size_t>(x)]) throw InputError(fmt::format("point {} repeated in '{}'", x, text));
            used[static_cast<std::size_t>(x)] = true;
        }
        for (std::size_t j = 0; j < cyc.size(); ++j)
            img[static_cast<std::size_t>(cyc[j])] = cyc[(j + 1) % cyc.size()];
    }
    return Permutation(std::move(img));
}

Permutation operator*(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree()) throw InputError("permutations of different degrees");
    std::vector<int> v(q.images_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = p.images_[static_cast<std::size_t>(q.images_[i])];
    Permutation r;
    r.images_ = std::move(v);
    return r;
}

Permutation Permutation::inverse() const {
    Permutation r;
    r.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) r.images_[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
    return r;
}

Permutation Permutation::pow(long e) const {
    Permutation base = e < 0 ? inverse() : *this;
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    Permutation acc = identity(degree());
    while (n) {
        if (n & 1) acc = acc * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return acc;
}

int Permutation::order() const {
    std::vector<bool> seen(images_.size(), false);
    long o = 1;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (seen[i]) continue;
        long len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
            seen[j] = true;
            ++len;
        }
        o = std::lcm(o, len);
    }
    return static_cast<int>(o);
}

int Permutation::fixed_points() const {
    int n = 0;
    for (std::size_t i = 0; i < images_.size(); ++i) n += images_[i] == static_cast<int>(i);
    return n;
}

std::string Permutation::to_cycles() const {
    std::string out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (seen[i] || images_[i] == static_cast<int>(i)) continue;
        std::vector<int> cyc;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
            seen[j] = true;
            cyc.push_back(static_cast<int>(j));
        }
        out += "(" + fmt::format("{}", fmt::join(cyc, " ")) + ")";
    }
    return out.empty() ? "()" : out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : p.images()) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
}

GeneratedGroup enumerate(const std::vector<Permutation>& generators, std::size_t cap, int degree) {
    if (cap < 1) throw InputError("enumeration cap must be positive");
    GeneratedGroup g;
    g.degree = generators.empty() ? std::max(degree, 0) : generators.front().degree();
    for (const auto& s : generators)
        if (s.degree() != g.degree) throw InputError("generators have different degrees");
    g.generators = generators;
    auto add = [&](const Permutation& p) {
        if (g.elements.size() >= cap)
            throw CapExceeded(fmt::format("group has more than {} elements", cap));
        g.element_index.emplace(p, static_cast<int>(g.elements.size()));
        g.elements.push_back(p);
    };
    add(Permutation::identity(g.degree));
    std::vector<Permutation> layer{g.elements.front()};
    while (!layer.empty()) {
        std::set<Permutation> next;
        for (const auto& x : layer)
            for (const auto& s : generators) {
                Permutation y = s * x;
                if (!g.element_index.count(y)) next.insert(std::move(y));
            }
        layer.assign(next.begin(), next.end());
        for (const auto& y : layer) add(y);
    }
    return g;
}

ConjugacyClasses conjugacy_classes(const GeneratedGroup& g) {
    std::size_t n = g.elements.size();
    std::vector<int> raw_class(n, -1);
    std::vector<std::vector<int>> members;
    std::vector<Permutation> inverses;
    inverses.reserve(n);
    for (const auto& h : g.elements) inverses.push_back(h.inverse());
    for (std::size_t x = 0; x < n; ++x) {
        if (raw_class[x] != -1) continue;
        int id = static_cast<int>(members.size());
        members.emplace_back();
        for (std::size_t h = 0; h < n; ++h) {
            int y = g.index_of(g.elements[h] * g.elements[x] * inverses[h]);
            if (raw_class[static_cast<std::size_t>(y)] == -1) {
                raw_class[static_cast<std::size_t>(y)] = id;
                members.back().push_back(y);
            }
        }
    }
    struct Raw {
        int order;
        long size;
        int rep;
    };
    std::vector<Raw> raws;
    for (const auto& m : members) {
        int rep = *std::min_element(m.begin(), m.end(), [&](int a, int b) { return g.elements[static_cast<std::size_t>(a)] < g.elements[static_cast<std::size_t>(b)]; });
        raws.push_back({g.elements[static_cast<std::size_t>(rep)].order(), static_cast<long>(m.size()), rep});
    }
    std::vector<int> perm(raws.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
        const Raw &ra = raws[static_cast<std::size_t>(a)], &rb = raws[static_cast<std::size_t>(b)];
        if (ra.order != rb.order) return ra.order < rb.order;
        if (ra.size != rb.size) return ra.size < rb.size;
        return g.elements[static_cast<std::size_t>(ra.rep)] < g.elements[static_cast<std::size_t>(rb.rep)];
    });
    std::vector<int> new_id(raws.size());
    for (std::size_t i = 0; i < perm.size(); ++i) new_id[static_cast<std::size_t>(perm[i])] = static_cast<int>(i);

    ConjugacyClasses cc;
    cc.class_of.resize(n);
    for (std::size_t x = 0; x < n; ++x) cc.class_of[x] = new_id[static_cast<std::size_t>(raw_class[x])];
    auto cd = std::make_shared<ClassData>();
    cd->group_order = static_cast<long>(n);
    long exponent = 1;
    for (int p : perm) {
        const Raw& r = raws[static_cast<std::size_t>(p)];
        cc.representatives.push_back(r.rep);
        cd->names.push_back("C" + std::to_string(cd->names.size() + 1));
        cd->sizes.push_back(r.size);
        cd->rep_orders.push_back(r.order);
        cd->inverse_class.push_back(cc.class_of[static_cast<std::size_t>(g.index_of(inverses[static_cast<std::size_t>(r.rep)]))]);
        exponent = std::lcm(exponent, static_cast<long>(r.order));
    }
    cd->exponent = static_cast<int>(exponent);
    for (int p : primes_up_to(cd->exponent)) {
        std::vector<int> map;
        for (int rep : cc.representatives)
            map.push_back(cc.class_of[static_cast<std::size_t>(g.index_of(g.elements[static_cast<std::size_t>(rep)].pow(p)))]);
        cd->prime_power_maps[p] = std::move(map);
    }
    cc.data = std::move(cd);
    return cc;
}

ClassData class_data(const GeneratedGroup& g) { return *conjugacy_classes(g).data; }

StandardCharacters standard_characters(const GeneratedGroup& g, const ConjugacyClasses& cc) {
    std::vector<Cyclotomic> reg, nat;
    for (std::size_t c = 0; c < cc.representatives.size(); ++c) {
        reg.emplace_back(c == 0 ? g.order() : 0L);
        nat.emplace_back(static_cast<long>(g.elements[static_cast<std::size_t>(cc.representatives[c])].fixed_points()));
    }
    return {ClassFunction(cc.data, std::move(reg)), ClassFunction(cc.data, std::move(nat))};
}

std::optional<std::vector<int>> match_class_data(const ClassData& t, const ClassData& m) {
    int k = t.class_count();
    if (k != m.class_count() || t.group_order != m.group_order || t.exponent != m.exponent) return std::nullopt;
    std::vector<std::vector<int>> tp, mp;
    for (int p : primes_up_to(t.exponent)) {
        tp.push_back(power_map(t, p));
        mp.push_back(power_map(m, p));
    }
    std::vector<int> a(static_cast<std::size_t>(k), -1), owner(static_cast<std::size_t>(k), -1);
    std::vector<int> trail;
    std::function<bool(int, int)> assign = [&](int c, int x) -> bool {
        auto uc = static_cast<std::size_t>(c), ux = static_cast<std::size_t>(x);
        if (a[uc] != -1) return a[uc] == x;
        if (owner[ux] != -1) return false;
        if (t.sizes[uc] != m.sizes[ux] || t.rep_orders[uc] != m.rep_orders[ux]) return false;
        a[uc] = x;
        owner[ux] = c;
        trail.push_back(c);
        for (std::size_t i = 0; i < tp.size(); ++i)
            if (!assign(tp[i][uc], mp[i][ux])) return false;
        return assign(t.inverse_class[uc], m.inverse_class[ux]);
    };
    auto undo = [&](std::size_t mark) {
        while (trail.size() > mark) {
            int c = trail.back();
            trail.pop_back();
            owner[static_cast<std::size_t>(a[static_cast<std::size_t>(c)])] = -1;
            a[static_cast<std::size_t>(c)] = -1;
        }
    };
    std::function<bool()> search = [&]() -> bool {
        int c = 0;
        while (c < k && a[static_cast<std::size_t>(c)] != -1) ++c;
        if (c == k) return true;
        for (int x = 0; x < k; ++x) {
            std::size_t mark = trail.size();
            if (assign(c, x) && search()) return true;
            undo(mark);
        }
        return false;
    };
    if (!search()) return std::nullopt;
    return a;
}

} // namespace lambdachar
