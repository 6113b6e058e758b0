#include "lambdachar/verify.hpp"

#include "lambdachar/errors.hpp"
#include "lambdachar/genfun.hpp"
#include "lambdachar/lambda_ops.hpp"
#include "lambdachar/permgroup.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <numeric>

namespace lambdachar {

namespace {

// <f, chi_j> for every irreducible; values may be irrational for class
// functions that are not virtual characters.
std::vector<Cyclotomic> multiplicities(const CharacterTable& ct, const ClassFunction& f) {
    std::vector<Cyclotomic> out;
    for (int j = 0; j < ct.size(); ++j) out.push_back(inner_product(f, ct.irr(j)));
    return out;
}

ClassFunction from_values(const CharacterTable& ct, std::vector<Cyclotomic> v) {
    return ClassFunction(ct.classes, std::move(v));
}

template <class T>
Cyclotomic coeff(const std::vector<T>& v, int i) {
    return i < static_cast<int>(v.size()) ? Cyclotomic(v[static_cast<std::size_t>(i)]) : Cyclotomic(0);
}

std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size() && i < 5; ++i) s += (i ? "; " : "") + v[i];
    if (v.size() > 5) s += fmt::format("; and {} more", v.size() - 5);
    return s;
}

// Runs fn, recording any library error as a failed check.
template <class F>
void guarded(ValidationReport& r, const std::string& name, F&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        r.add(name, false, e.what());
    } catch (const std::domain_error& e) {
        r.add(name, false, e.what());
    }
}

// Per-class coefficients versus the engine, and the multiplicities they
// imply versus decompositions of the engine's powers.
void compare_with_engine(ValidationReport& r, const std::string& label, const CharacterTable& ct,
                         const LambdaSequence& seq, PowerOp op, int degree,
                         const std::function<Cyclotomic(int c, int i)>& closed) {
    std::vector<std::string> class_bad, mult_bad;
    int k = ct.classes->class_count();
    const char* opname = op == PowerOp::sym ? "S" : "lambda";
    for (int i = 0; i <= degree; ++i) {
        std::vector<Cyclotomic> vals;
        const ClassFunction& eng = op == PowerOp::sym ? seq.sym(i) : seq.lambda(i);
        for (int c = 0; c < k; ++c) {
            vals.push_back(closed(c, i));
            if (!(vals.back() == eng[c]))
                class_bad.push_back(fmt::format("{}^{} at {}: closed {} engine {}", opname, i, ct.classes->names[static_cast<std::size_t>(c)],
                                                vals.back().to_string(), eng[c].to_string()));
        }
        if (multiplicities(ct, from_values(ct, vals)) != multiplicities(ct, eng))
            mult_bad.push_back(fmt::format("{}^{}", opname, i));
    }
    r.add(fmt::format("{}: per-class {}_t to degree {}", label, op == PowerOp::sym ? "S" : "lambda", degree),
          class_bad.empty(), join(class_bad));
    r.add(fmt::format("{}: {} multiplicities to degree {}", label, opname, degree), mult_bad.empty(), join(mult_bad));
}

} // namespace

void check_dimension_sums(ValidationReport& r, const CharacterTable& ct, int degree) {
    for (int x = 0; x < ct.size(); ++x) {
        std::string name = fmt::format("dimension sums {}", ct.irr_names[static_cast<std::size_t>(x)]);
        guarded(r, name, [&] {
            long d = ct.irr(x)[0].to_rational().to_long();
            std::vector<std::string> bad;
            for (PowerOp op : {PowerOp::sym, PowerOp::ext}) {
                auto t = multiplicity_table(ct.irr(x), ct, op, degree);
                for (int i = 0; i <= degree; ++i) {
                    Rational s(0);
                    for (int j = 0; j < ct.size(); ++j)
                        s += ct.irr(j)[0].to_rational() * t.rows[static_cast<std::size_t>(i)].coeffs[static_cast<std::size_t>(j)];
                    Rational want(op == PowerOp::sym ? binomial(d + i - 1, i) : binomial(d, i));
                    if (s != want) bad.push_back(fmt::format("{}^{}: {} != {}", op == PowerOp::sym ? "S" : "lambda", i, s.to_string(), want.to_string()));
                }
            }
            r.add(name, bad.empty(), join(bad));
        });
    }
}

void check_dual_route(ValidationReport& r, const CharacterTable& ct, int x, int degree) {
    const ClassFunction& chi = ct.irr(x);
    const std::string& nm = ct.irr_names[static_cast<std::size_t>(x)];
    for (PowerOp op : {PowerOp::sym, PowerOp::ext}) {
        std::string name = fmt::format("dual route {} {} to degree {}", nm, op == PowerOp::sym ? "S" : "lambda", degree);
        guarded(r, name, [&] {
            auto table = multiplicity_table(chi, ct, op, degree);
            auto series = genfun_series_all(chi, ct, op, degree);
            auto rational = genfun_rational_all(chi, ct, op);
            std::vector<std::string> bad;
            for (int j = 0; j < ct.size(); ++j) {
                auto col = table.column(j);
                if (series[static_cast<std::size_t>(j)] != col) bad.push_back(fmt::format("series column {}", ct.irr_names[static_cast<std::size_t>(j)]));
                if (series_of_rational(rational[static_cast<std::size_t>(j)], degree) != col)
                    bad.push_back(fmt::format("rational column {}", ct.irr_names[static_cast<std::size_t>(j)]));
            }
            r.add(name, bad.empty(), join(bad));
        });
    }
}

void check_burnside(ValidationReport& r, const CharacterTable& ct, const NormalSubgroupSpec& n, long m, int degree,
                    int shortcut_degree) {
    std::string label = fmt::format("regular G/{} m={}", n.name, m);
    guarded(r, label, [&] {
        auto forms = burnside_regular_forms(ct.classes, n, m);
        auto seq = sym_seq(forms.character, std::max(degree, shortcut_degree));
        std::vector<std::vector<Rational>> sym_series;
        for (const auto& rf : forms.sym_t) sym_series.push_back(series_of_rational(rf, degree));
        compare_with_engine(r, label, ct, seq, PowerOp::ext, degree,
                            [&](int c, int i) { return coeff(forms.lambda_t[static_cast<std::size_t>(c)].coeffs(), i); });
        compare_with_engine(r, label, ct, seq, PowerOp::sym, degree,
                            [&](int c, int i) { return coeff(sym_series[static_cast<std::size_t>(c)], i); });
        std::vector<std::string> bad;
        int used = 0;
        for (int k = 1; k <= shortcut_degree; ++k) {
            auto s = forms.sym_power(k);
            auto l = forms.lambda_power(k);
            if (!s) continue;
            ++used;
            if (!(*s == seq.sym(k))) bad.push_back(fmt::format("S^{}", k));
            if (!(*l == seq.lambda(k))) bad.push_back(fmt::format("lambda^{}", k));
        }
        r.add(fmt::format("{}: coprime shortcuts ({} degrees up to {})", label, used, shortcut_degree), bad.empty(), join(bad));
    });
}

void check_central(ValidationReport& r, const CharacterTable& ct, const CentralCharSpec& spec, int degree) {
    std::string label = fmt::format("central {} m={}", spec.name, spec.multiplier);
    guarded(r, label, [&] {
        auto forms = central_forms(ct.classes, spec);
        auto seq = sym_seq(forms.character, degree);
        int k = ct.classes->class_count();
        std::vector<std::vector<Cyclotomic>> lam, sym;
        for (int c = 0; c < k; ++c) {
            int h = forms.orbit_orders[static_cast<std::size_t>(c)];
            const Cyclotomic& z = forms.zeta_at_power[static_cast<std::size_t>(c)];
            if (forms.lambda_t[static_cast<std::size_t>(c)]) {
                lam.push_back(forms.lambda_t_at(c).coeffs());
            } else {
                // (1 - z (-t)^h)^(m/h) as a series when h does not divide m
                lam.push_back(binomial_power_series(Cyclotomic(Rational(spec.multiplier, h)), h, h % 2 == 0 ? -z : z, degree));
            }
            sym.push_back(forms.sym_series_at(c, degree));
        }
        compare_with_engine(r, label, ct, seq, PowerOp::ext, degree,
                            [&](int c, int i) { return coeff(lam[static_cast<std::size_t>(c)], i); });
        compare_with_engine(r, label, ct, seq, PowerOp::sym, degree,
                            [&](int c, int i) { return coeff(sym[static_cast<std::size_t>(c)], i); });
        std::vector<std::string> bad;
        for (int n = 1; n <= degree; ++n) {
            auto s = forms.sym_power(n);
            if (!s) continue;
            if (!(*s == seq.sym(n))) bad.push_back(fmt::format("S^{}", n));
            if (!(*forms.lambda_power(n) == seq.lambda(n))) bad.push_back(fmt::format("lambda^{}", n));
        }
        r.add(fmt::format("{}: coprime shortcuts to degree {}", label, degree), bad.empty(), join(bad));
    });
}

void check_onedim(ValidationReport& r, const CharacterTable& ct, int j, int degree) {
    std::string label = fmt::format("one-dimensional {}", ct.irr_names[static_cast<std::size_t>(j)]);
    guarded(r, label, [&] {
        auto forms = onedim_forms(ct.irr(j), ct);
        auto seq = sym_seq(ct.irr(j), degree);
        std::vector<std::string> bad;
        for (int i = 0; i <= degree; ++i) {
            if (!(forms.sym_power(i) == seq.sym(i))) bad.push_back(fmt::format("S^{}", i));
            if (!(forms.lambda_power(i) == seq.lambda(i))) bad.push_back(fmt::format("lambda^{}", i));
        }
        auto rs = genfun_rational_all(ct.irr(j), ct, PowerOp::sym);
        auto re = genfun_rational_all(ct.irr(j), ct, PowerOp::ext);
        for (int x = 0; x < ct.size(); ++x) {
            if (!(rs[static_cast<std::size_t>(x)] == forms.sym[static_cast<std::size_t>(x)]))
                bad.push_back(fmt::format("S_t column {}", ct.irr_names[static_cast<std::size_t>(x)]));
            if (!(re[static_cast<std::size_t>(x)] == forms.ext[static_cast<std::size_t>(x)]))
                bad.push_back(fmt::format("lambda_t column {}", ct.irr_names[static_cast<std::size_t>(x)]));
        }
        r.add(fmt::format("{}: closed forms to degree {}", label, degree), bad.empty(), join(bad));
    });
}

void check_transfer(ValidationReport& r, const QuotientPullback& pb, int degree, const std::string& label) {
    r.add(label + ": pullback preserves inner products", pb.preserves_inner_products());
    const CharacterTable& q = pb.quotient();
    std::vector<std::string> bad, pointwise;
    for (int x = 0; x < q.size(); ++x) {
        const ClassFunction& chi = q.irr(x);
        for (PowerOp op : {PowerOp::sym, PowerOp::ext})
            for (int j = 0; j < q.size(); ++j)
                if (!pb.transfer_holds(chi, j, op, degree))
                    bad.push_back(fmt::format("{} {} {}", op == PowerOp::sym ? "S" : "lambda", q.irr_names[static_cast<std::size_t>(x)],
                                              q.irr_names[static_cast<std::size_t>(j)]));
        int d = std::min(degree, 8);
        auto sq = sym_seq(chi, d);
        auto sg = sym_seq(pb.pull(chi), d);
        for (int i = 1; i <= d; ++i)
            if (!(pb.pull(sq.sym(i)) == sg.sym(i)) || !(pb.pull(sq.lambda(i)) == sg.lambda(i)) ||
                !(pb.pull(sq.psi(i)) == sg.psi(i)))
                pointwise.push_back(fmt::format("{} degree {}", q.irr_names[static_cast<std::size_t>(x)], i));
    }
    r.add(fmt::format("{}: multiplicity transfer to degree {}", label, degree), bad.empty(), join(bad));
    r.add(fmt::format("{}: pullback commutes with psi, lambda, S", label), pointwise.empty(), join(pointwise));
}

void check_permutation_model(ValidationReport& r, const CharacterTable& ct, const std::vector<std::string>& generators) {
    std::string name = "permutation model";
    guarded(r, name, [&] {
        int degree = 1;
        for (const auto& g : generators) degree = std::max(degree, Permutation::max_point(g));
        std::vector<Permutation> gens;
        for (const auto& g : generators) gens.push_back(Permutation::parse_cycles(g, degree));
        auto group = enumerate(gens);
        if (group.order() != ct.classes->group_order) {
            r.add(name + ": group order", false, fmt::format("generators give order {}, table has {}", group.order(), ct.classes->group_order));
            return;
        }
        auto cc = conjugacy_classes(group);
        auto match = match_class_data(*ct.classes, *cc.data);
        r.add(name + ": class data matches", match.has_value(), match ? "" : "no class relabeling preserves the invariants");
        if (!match) return;
        auto std_chars = standard_characters(group, cc);
        std::vector<Cyclotomic> nat, reg;
        for (int c = 0; c < ct.classes->class_count(); ++c) {
            nat.push_back(std_chars.natural[(*match)[static_cast<std::size_t>(c)]]);
            reg.push_back(std_chars.regular[(*match)[static_cast<std::size_t>(c)]]);
        }
        auto mn = decompose(from_values(ct, nat), ct);
        r.add(name + ": natural character is genuine", mn.is_integral() && mn.is_nonnegative());
        MultiplicityVector degrees;
        for (int j = 0; j < ct.size(); ++j) degrees.coeffs.push_back(ct.irr(j)[0].to_rational());
        r.add(name + ": regular character is sum of d_j chi_j", decompose(from_values(ct, reg), ct) == degrees);
    });
}

ValidationReport verify_bundle(const GroupBundle& b, const VerifyOptions& opt, const QuotientResolver& resolve) {
    ValidationReport r;
    const CharacterTable& ct = b.table;
    auto table = validate_table(ct);
    for (const auto& c : table.checks) r.add("table: " + c.name, c.ok, c.detail);
    if (!table.ok()) return r;
    check_dimension_sums(r, ct, opt.dimension_degree);
    if (opt.dual_route)
        for (int x = 0; x < ct.size(); ++x) check_dual_route(r, ct, x, opt.dual_route_degree);
    for (int j = 0; j < ct.size(); ++j)
        if (ct.irr(j)[0] == Cyclotomic(1)) check_onedim(r, ct, j, opt.onedim_degree);
    for (const auto& n : b.normal_subgroups) {
        int q = static_cast<int>(std::min<long>(n.quotient_order, opt.closed_form_degree_cap));
        check_burnside(r, ct, n, 1, std::min(2 * q, opt.closed_form_degree_cap), std::min(q + 5, opt.closed_form_degree_cap));
    }
    for (const auto& c : b.central_chars) {
        int q = static_cast<int>(std::min<long>(c.subgroup.quotient_order, opt.closed_form_degree_cap));
        check_central(r, ct, c, std::min(2 * q, opt.closed_form_degree_cap));
    }
    for (const auto& qm : b.quotients) {
        std::string label = fmt::format("quotient {} via {}", qm.target, qm.via);
        auto target = resolve(qm.target);
        if (!target) {
            r.add(label, false, "quotient group is not available");
            continue;
        }
        guarded(r, label, [&] {
            QuotientPullback pb(ct, *target, qm.class_map);
            check_transfer(r, pb, opt.transfer_degree, label);
        });
    }
    if (!b.generators.empty()) check_permutation_model(r, ct, b.generators);
    return r;
}

} // namespace lambdachar
