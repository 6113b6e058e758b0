#include "lambdachar/cli.hpp"

#include "lambdachar/errors.hpp"
#include "lambdachar/genfun.hpp"
#include "lambdachar/lambda_ops.hpp"
#include "lambdachar/spec_file.hpp"
#include "lambdachar/verify.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <ostream>
#include <sstream>

namespace lambdachar {

using nlohmann::json;

namespace {

enum class Format { plain, csv, machine };

Format parse_format(const std::string& s) {
    if (s == "csv") return Format::csv;
    if (s == "machine") return Format::machine;
    return Format::plain;
}

std::string trim(std::string s) {
    s.erase(0, s.find_first_not_of(" \t"));
    s.erase(s.find_last_not_of(" \t") + 1);
    return s;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

std::string csv_row(const std::vector<std::string>& fields) {
    std::vector<std::string> esc;
    for (const auto& f : fields) esc.push_back(csv_field(f));
    return fmt::format("{}\n", fmt::join(esc, ","));
}

// Right-aligned columns under a header row.
std::string plain_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width(header.size(), 0);
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& r : rows)
        for (std::size_t c = 0; c < r.size() && c < width.size(); ++c) width[c] = std::max(width[c], r[c].size());
    auto line = [&](const std::vector<std::string>& r) {
        std::string s;
        for (std::size_t c = 0; c < r.size(); ++c) {
            if (c) s += "  ";
            s += std::string(width[c] - r[c].size(), ' ') + r[c];
        }
        return s + "\n";
    };
    std::string out = line(header);
    for (const auto& r : rows) out += line(r);
    return out;
}

json rationals_json(const std::vector<Rational>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.to_string());
    return a;
}

std::vector<std::string> rational_strings(const std::vector<Rational>& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(x.to_string());
    return out;
}

const char* op_name(PowerOp op) { return op == PowerOp::sym ? "sym" : "ext"; }

bool looks_like_path(const std::string& s) {
    if (s.find('/') != std::string::npos) return true;
    auto ends = [&s](const std::string& suf) { return s.size() >= suf.size() && s.compare(s.size() - suf.size(), suf.size(), suf) == 0; };
    if (ends(".spec") || ends(".json") || ends(".txt")) return true;
    std::error_code ec;
    return std::filesystem::is_regular_file(s, ec);
}

// Builtins whose order is n.
std::vector<FamilyParams> builtins_of_order(long n) {
    std::vector<FamilyParams> out;
    const std::pair<Family, long> fixed[] = {{Family::S3, 6}, {Family::A4, 12}, {Family::G21, 21}, {Family::S4, 24}, {Family::A5, 60}};
    for (auto [f, o] : fixed)
        if (o == n) out.push_back({f, std::nullopt});
    if (n % 2 == 0 && n / 2 >= 3 && n / 2 <= max_d2n_parameter) out.push_back({Family::D2n, static_cast<int>(n / 2)});
    if (n % 4 == 0 && n / 4 >= 2 && n / 4 <= max_q4n_parameter) out.push_back({Family::Q4n, static_cast<int>(n / 4)});
    for (int p : {3, 5, 7})
        if (static_cast<long>(p) * p * p == n) out.push_back({Family::Hp, p});
    return out;
}

struct PermData {
    GeneratedGroup group;
    ConjugacyClasses classes;
};

PermData perm_data(const std::vector<std::string>& gens) {
    int degree = 1;
    for (const auto& g : gens) degree = std::max(degree, Permutation::max_point(g));
    std::vector<Permutation> perms;
    for (const auto& g : gens) perms.push_back(Permutation::parse_cycles(g, degree));
    PermData d;
    try {
        d.group = enumerate(perms);
    } catch (const CapExceeded& e) {
        throw InputError(fmt::format("generated group too large: {}", e.what()));
    }
    d.classes = conjugacy_classes(d.group);
    return d;
}

ClassFunction transported_natural(const PermData& d, const CharacterTable& ct, const std::vector<int>& map) {
    auto std_chars = standard_characters(d.group, d.classes);
    std::vector<Cyclotomic> v;
    for (int c = 0; c < ct.classes->class_count(); ++c) v.push_back(std_chars.natural.values()[static_cast<std::size_t>(map[static_cast<std::size_t>(c)])]);
    return ClassFunction(ct.classes, std::move(v));
}

const NormalSubgroupSpec& find_normal(const GroupBundle& b, const std::string& name) {
    for (const auto& n : b.normal_subgroups)
        if (n.name == name) return n;
    throw InputError(fmt::format("unknown normal subgroup '{}' for {}", name, b.table.name));
}

const CentralCharSpec& find_central(const GroupBundle& b, const std::string& name) {
    for (const auto& c : b.central_chars)
        if (c.name == name) return c;
    throw InputError(fmt::format("unknown central character spec '{}' for {}", name, b.table.name));
}

int irr_index(const CharacterTable& ct, const std::string& name) {
    int j = ct.index_of(name);
    if (j < 0) throw InputError(fmt::format("unknown irreducible '{}' for {}", name, ct.name));
    return j;
}

ClassFunction atom_value(const std::string& atom, const GroupContext& g) {
    const CharacterTable& ct = g.bundle.table;
    const ClassDataPtr& cd = ct.classes;
    if (atom == "regular") {
        std::vector<Cyclotomic> v(static_cast<std::size_t>(cd->class_count()), Cyclotomic(0));
        v[0] = Cyclotomic(Rational(cd->group_order));
        return ClassFunction(cd, std::move(v));
    }
    if (atom == "natural") {
        if (!g.natural) throw InputError(fmt::format("no permutation model for {}; pass --generators", ct.name));
        return *g.natural;
    }
    if (g.generators_only)
        throw InputError(fmt::format("'{}': without a table only regular and natural are available", atom));
    auto colon = atom.find(':');
    if (colon != std::string::npos) {
        std::string head = atom.substr(0, colon), arg = atom.substr(colon + 1);
        if (head == "taup") {
            if (!g.family || (g.family->family != Family::D2n && g.family->family != Family::Q4n))
                throw InputError("taup:k needs a D2n or Q4n builtin");
            long k;
            try {
                std::size_t pos = 0;
                k = std::stol(arg, &pos);
                if (pos != arg.size()) throw std::invalid_argument(arg);
            } catch (const std::exception&) {
                throw InputError(fmt::format("taup index must be an integer, got '{}'", arg));
            }
            return tau_prime(ct, *g.family, k);
        }
        if (head == "pi") return perm_quotient_character(cd, find_normal(g.bundle, arg), 1);
        if (head == "zeta0") return zeta_zero(cd, find_central(g.bundle, arg));
        throw InputError(fmt::format("unknown character selector '{}'", atom));
    }
    return ct.irr(irr_index(ct, atom));
}

// Burnside, central or one-dimensional closed forms in a common per-class shape:
// lambda_t = (1 - z(-t)^h)^e and S_t = (1 - z t^h)^(-e).
struct ClassForm {
    Cyclotomic z;
    int h = 1;
    Rational e;
};

std::string one_plus(const Cyclotomic& s, int h) {
    std::string tp = h == 1 ? "t" : fmt::format("t^{}", h);
    if (s == Cyclotomic(1)) return "1 + " + tp;
    if (s == Cyclotomic(-1)) return "1 - " + tp;
    if (s.is_rational()) {
        Rational r = s.to_rational();
        return r.sign() > 0 ? fmt::format("1 + {}*{}", r.to_string(), tp) : fmt::format("1 - {}*{}", (-r).to_string(), tp);
    }
    return fmt::format("1 + ({})*{}", s.to_string(), tp);
}

std::string lambda_text(const ClassForm& f) {
    if (f.e.is_zero()) return "1";
    Cyclotomic s = (f.h % 2 == 0) ? -f.z : f.z;
    std::string base = "(" + one_plus(s, f.h) + ")";
    if (f.e == Rational(1)) return base;
    if (f.e.is_integer()) return fmt::format("{}^{}", base, f.e.to_string());
    return fmt::format("{}^({})", base, f.e.to_string());
}

std::string sym_text(const ClassForm& f) {
    if (f.e.is_zero()) return "1";
    std::string base = "(" + one_plus(-f.z, f.h) + ")";
    if (f.e.is_integer() && f.e.sign() > 0) return f.e == Rational(1) ? "1 / " + base : fmt::format("1 / {}^{}", base, f.e.to_string());
    return fmt::format("{}^({})", base, (-f.e).to_string());
}

struct Common {
    std::string group;
    std::vector<std::string> generators;
    std::string format = "plain";
};

struct PowerLine {
    PowerOp op;
    int n;
    MultiplicityVector m;
    std::string route;
};

void emit_consistency(Format f, bool ok, std::ostream& out) {
    if (f == Format::plain) out << fmt::format("# dual-route check: {}\n", ok ? "passed" : "FAILED");
}

int cmd_decompose(const GroupContext& g, const std::string& expr, PowerOp op, int degree, Format f, bool check,
                  std::ostream& out, std::ostream& err) {
    const CharacterTable& ct = g.bundle.table;
    ClassFunction chi = parse_character(expr, g);
    auto dec = decompose(chi, ct);
    bool genuine = dec.is_integral() && dec.is_nonnegative();
    auto table = multiplicity_table(chi, ct, op, degree, genuine ? Certify::genuine : Certify::none);
    bool ok = true;
    if (check) {
        auto cols = genfun_series_all(chi, ct, op, degree);
        for (int i = 0; i <= degree && ok; ++i)
            for (int j = 0; j < ct.size(); ++j)
                if (table.rows[static_cast<std::size_t>(i)].coeffs[static_cast<std::size_t>(j)] !=
                    cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) {
                    err << fmt::format("consistency check failed: degree {} column {}\n", i, ct.irr_names[static_cast<std::size_t>(j)]);
                    ok = false;
                    break;
                }
    }
    if (f == Format::machine) {
        json rows = json::array();
        for (const auto& r : table.rows) rows.push_back(rationals_json(r.coeffs));
        json j{{"kind", "table"}, {"group", ct.name}, {"character", expr}, {"op", op_name(op)}, {"degree", degree},
               {"columns", ct.irr_names}, {"rows", rows}};
        if (check) j["consistency"] = ok ? "passed" : "failed";
        out << j.dump(2) << "\n";
    } else {
        std::vector<std::string> header{"i"};
        header.insert(header.end(), ct.irr_names.begin(), ct.irr_names.end());
        std::vector<std::vector<std::string>> rows;
        for (int i = 0; i <= degree; ++i) {
            std::vector<std::string> r{std::to_string(i)};
            auto v = rational_strings(table.rows[static_cast<std::size_t>(i)].coeffs);
            r.insert(r.end(), v.begin(), v.end());
            rows.push_back(std::move(r));
        }
        if (f == Format::csv) {
            out << csv_row(header);
            for (const auto& r : rows) out << csv_row(r);
        } else {
            out << fmt::format("# {}: {} powers of {}, degrees 0..{}\n", ct.name, op == PowerOp::sym ? "symmetric" : "exterior", expr, degree);
            out << plain_table(header, rows);
            if (check) emit_consistency(f, ok, out);
        }
    }
    return ok ? exit_ok : exit_verification_failed;
}

int cmd_genfun(const GroupContext& g, const std::string& expr, const std::string& irr, PowerOp op, const std::string& mode,
               int degree, Format f, bool check, std::ostream& out, std::ostream& err) {
    const CharacterTable& ct = g.bundle.table;
    ClassFunction chi = parse_character(expr, g);
    std::vector<int> js;
    if (irr.empty())
        for (int j = 0; j < ct.size(); ++j) js.push_back(j);
    else
        js.push_back(irr_index(ct, irr));
    auto dec = decompose(chi, ct);
    bool genuine = dec.is_integral() && dec.is_nonnegative();
    std::optional<MultiplicityTable> table;
    auto table_column = [&](int j) {
        if (!table) table = multiplicity_table(chi, ct, op, degree, genuine ? Certify::genuine : Certify::none);
        return table->column(j);
    };
    const char* fn = op == PowerOp::sym ? "S_t" : "lambda_t";
    bool ok = true;
    json entries = json::array();
    std::string body;
    if (mode == "series") {
        auto cols = genfun_series_all(chi, ct, op, degree);
        if (f == Format::csv) {
            std::vector<std::string> header{"irr"};
            for (int i = 0; i <= degree; ++i) header.push_back(std::to_string(i));
            body += csv_row(header);
        }
        for (int j : js) {
            const auto& col = cols[static_cast<std::size_t>(j)];
            const std::string& name = ct.irr_names[static_cast<std::size_t>(j)];
            if (check && table_column(j) != col) {
                err << fmt::format("consistency check failed: column {}\n", name);
                ok = false;
            }
            auto strs = rational_strings(col);
            if (f == Format::machine) entries.push_back({{"irr", name}, {"coefficients", rationals_json(col)}});
            else if (f == Format::csv) {
                std::vector<std::string> r{name};
                r.insert(r.end(), strs.begin(), strs.end());
                body += csv_row(r);
            } else body += fmt::format("<{}, {}({})>: {}\n", name, fn, expr, fmt::join(strs, ", "));
        }
    } else {
        if (!genuine)
            throw InputError(fmt::format("rational mode needs a genuine character and '{}' is virtual; use --mode series", expr));
        std::vector<RationalFunction> rfs;
        if (js.size() == 1) rfs.push_back(genfun_rational(chi, ct, js[0], op));
        else rfs = genfun_rational_all(chi, ct, op);
        if (f == Format::csv) body += csv_row({"irr", "canonical", "factored"});
        for (std::size_t idx = 0; idx < js.size(); ++idx) {
            int j = js[idx];
            const RationalFunction& rf = rfs[js.size() == 1 ? 0 : static_cast<std::size_t>(j)];
            const std::string& name = ct.irr_names[static_cast<std::size_t>(j)];
            if (check && series_of_rational(rf, degree) != table_column(j)) {
                err << fmt::format("consistency check failed: column {}\n", name);
                ok = false;
            }
            if (f == Format::machine)
                entries.push_back({{"irr", name}, {"numerator", rationals_json(rf.num().coeffs())},
                                   {"denominator", rationals_json(rf.den().coeffs())}, {"canonical", rf.to_string()},
                                   {"factored", rf.to_factored_string()}});
            else if (f == Format::csv) body += csv_row({name, rf.to_string(), rf.to_factored_string()});
            else {
                body += fmt::format("<{}, {}({})> = {}\n", name, fn, expr, rf.to_string());
                if (rf.to_factored_string() != rf.to_string()) body += fmt::format("  factored: {}\n", rf.to_factored_string());
            }
        }
    }
    if (f == Format::machine) {
        json j{{"kind", mode == "series" ? "series" : "ratfun"}, {"group", ct.name}, {"character", expr},
               {"op", op_name(op)}, {"entries", entries}};
        if (mode == "series") j["degree"] = degree;
        if (check) j["consistency"] = ok ? "passed" : "failed";
        out << j.dump(2) << "\n";
    } else {
        if (f == Format::plain)
            out << fmt::format("# {}: generating functions of {} powers of {} ({})\n", ct.name,
                               op == PowerOp::sym ? "symmetric" : "exterior", expr, mode);
        out << body;
        if (check) emit_consistency(f, ok, out);
    }
    return ok ? exit_ok : exit_verification_failed;
}

int cmd_closedform(const GroupContext& g, const std::string& sel, int degree, Format f, std::ostream& out) {
    const CharacterTable& ct = g.bundle.table;
    const ClassDataPtr& cd = ct.classes;
    int k = cd->class_count();
    if (g.generators_only) throw InputError("closed forms need a character table; pass --group");
    std::vector<std::string> parts;
    {
        std::stringstream ss(sel);
        std::string p;
        while (std::getline(ss, p, ':')) parts.push_back(p);
    }
    if (parts.empty()) throw InputError("empty closed-form spec");
    auto parse_m = [&](std::size_t i) -> long {
        if (parts.size() <= i) return 1;
        try {
            std::size_t pos = 0;
            long m = std::stol(parts[i], &pos);
            if (pos != parts[i].size() || m < 1) throw std::invalid_argument(parts[i]);
            return m;
        } catch (const std::exception&) {
            throw InputError(fmt::format("multiplier must be a positive integer, got '{}'", parts[i]));
        }
    };

    std::string label, title;
    std::vector<ClassForm> per_class(static_cast<std::size_t>(k));
    std::vector<std::vector<Cyclotomic>> lam(static_cast<std::size_t>(k)), sym(static_cast<std::size_t>(k));
    std::function<std::optional<ClassFunction>(PowerOp, int)> shortcut;
    std::string shortcut_route = "coprime shortcut";
    std::optional<OneDimForms> onedim;

    if (parts[0] == "regular" || parts[0] == "quotient") {
        NormalSubgroupSpec n;
        long m;
        if (parts[0] == "regular") {
            if (parts.size() > 2) throw InputError("expected regular[:m]");
            n = make_normal_subgroup(*cd, {0}, "1");
            m = parse_m(1);
        } else {
            if (parts.size() < 2 || parts.size() > 3) throw InputError("expected quotient:<normal>[:m]");
            n = find_normal(g.bundle, parts[1]);
            m = parse_m(2);
        }
        bool trivial = n.class_indices == std::vector<int>{0};
        std::string base = trivial ? "regular" : "Pi_" + n.name;
        label = m == 1 ? base : fmt::format("{}*{}", m, base);
        auto forms = std::make_shared<BurnsideForms>(burnside_regular_forms(cd, n, m));
        title = fmt::format("{} on {}, |G/N| = {}, m = {}", label, ct.name, forms->quotient_order, m);
        for (int c = 0; c < k; ++c) {
            auto u = static_cast<std::size_t>(c);
            int h = forms->orbit_orders[u];
            per_class[u] = {Cyclotomic(1), h, Rational(m * forms->quotient_order, h)};
            for (int i = 0; i <= degree; ++i) lam[u].push_back(Cyclotomic(forms->lambda_t[u].coeff(i)));
            for (const auto& x : series_of_rational(forms->sym_t[u], degree)) sym[u].push_back(Cyclotomic(x));
        }
        shortcut = [forms](PowerOp op, int n) { return op == PowerOp::sym ? forms->sym_power(n) : forms->lambda_power(n); };
    } else if (parts[0] == "central") {
        if (parts.size() != 2) throw InputError("expected central:<name>");
        const CentralCharSpec& spec = find_central(g.bundle, parts[1]);
        label = spec.name;
        auto forms = std::make_shared<CentralForms>(central_forms(cd, spec));
        title = fmt::format("{} = {}*zeta0 on {}, N = {}, |G/N| = {}", label, spec.multiplier, ct.name, spec.subgroup.name,
                            forms->quotient_order);
        for (int c = 0; c < k; ++c) {
            auto u = static_cast<std::size_t>(c);
            int h = forms->orbit_orders[u];
            const Cyclotomic& z = forms->zeta_at_power[u];
            per_class[u] = {z, h, Rational(spec.multiplier, h)};
            Cyclotomic s = (h % 2 == 0) ? -z : z;
            lam[u] = binomial_power_series(Cyclotomic(per_class[u].e), h, s, degree);
            sym[u] = forms->sym_series_at(c, degree);
        }
        shortcut = [forms](PowerOp op, int n) { return op == PowerOp::sym ? forms->sym_power(n) : forms->lambda_power(n); };
    } else if (parts[0] == "onedim") {
        if (parts.size() != 2) throw InputError("expected onedim:<character>");
        int j = irr_index(ct, parts[1]);
        onedim = onedim_forms(ct.irr(j), ct);
        label = parts[1];
        title = fmt::format("one-dimensional {} on {}, order {}", label, ct.name, onedim->order);
        for (int c = 0; c < k; ++c) per_class[static_cast<std::size_t>(c)] = {ct.irr(j)[c], 1, Rational(1)};
        auto forms = std::make_shared<OneDimForms>(*onedim);
        shortcut = [forms](PowerOp op, int n) -> std::optional<ClassFunction> {
            return op == PowerOp::sym ? forms->sym_power(n) : forms->lambda_power(n);
        };
        shortcut_route = "one-dimensional";
    } else {
        throw InputError(fmt::format("unknown closed-form spec '{}'; use regular[:m], quotient:<N>[:m], central:<name> or onedim:<char>", sel));
    }

    std::vector<PowerLine> lines;
    for (PowerOp op : {PowerOp::ext, PowerOp::sym})
        for (int n = 1; n <= degree; ++n) {
            auto sc = shortcut(op, n);
            std::string route = shortcut_route;
            ClassFunction value;
            if (sc) value = *sc;
            else {
                std::vector<Cyclotomic> v;
                for (int c = 0; c < k; ++c) v.push_back((op == PowerOp::sym ? sym : lam)[static_cast<std::size_t>(c)][static_cast<std::size_t>(n)]);
                value = ClassFunction(cd, std::move(v));
                route = "closed form";
            }
            lines.push_back({op, n, decompose(value, ct), route});
        }
    auto power_text = [&](const PowerLine& l) {
        return fmt::format("{}^{}({}) = {}", l.op == PowerOp::sym ? "S" : "lambda", l.n, label, format_decomposition(l.m, ct));
    };

    if (f == Format::machine) {
        json classes = json::array();
        for (int c = 0; c < k; ++c) {
            const auto& pc = per_class[static_cast<std::size_t>(c)];
            classes.push_back({{"class", cd->names[static_cast<std::size_t>(c)]}, {"h", pc.h}, {"lambda_t", lambda_text(pc)}, {"S_t", sym_text(pc)}});
        }
        json powers = json::array();
        for (const auto& l : lines)
            powers.push_back({{"op", op_name(l.op)}, {"n", l.n}, {"multiplicities", rationals_json(l.m.coeffs)},
                              {"text", power_text(l)}, {"route", l.route}});
        json j{{"kind", "decomposition"}, {"group", ct.name}, {"spec", sel}, {"label", label}, {"columns", ct.irr_names},
               {"classes", classes}, {"powers", powers}};
        if (onedim) {
            json gfs = json::array();
            for (int x = 0; x < ct.size(); ++x) {
                auto u = static_cast<std::size_t>(x);
                gfs.push_back({{"irr", ct.irr_names[u]}, {"S_t", onedim->sym[u].to_factored_string()}, {"lambda_t", onedim->ext[u].to_string()}});
            }
            j["generating_functions"] = gfs;
        }
        out << j.dump(2) << "\n";
        return exit_ok;
    }
    if (f == Format::csv) {
        out << csv_row({"kind", "key", "h", "lambda_t", "S_t", "route"});
        for (int c = 0; c < k; ++c) {
            const auto& pc = per_class[static_cast<std::size_t>(c)];
            out << csv_row({"class", cd->names[static_cast<std::size_t>(c)], std::to_string(pc.h), lambda_text(pc), sym_text(pc), ""});
        }
        for (const auto& l : lines) out << csv_row({"power", power_text(l), "", "", "", l.route});
        return exit_ok;
    }
    out << fmt::format("# closed forms for {}\n", title);
    for (int c = 0; c < k; ++c) {
        const auto& pc = per_class[static_cast<std::size_t>(c)];
        out << fmt::format("{} (h = {}): lambda_t = {}\n", cd->names[static_cast<std::size_t>(c)], pc.h, lambda_text(pc));
        out << fmt::format("{} (h = {}): S_t = {}\n", cd->names[static_cast<std::size_t>(c)], pc.h, sym_text(pc));
    }
    if (onedim)
        for (int x = 0; x < ct.size(); ++x) {
            auto u = static_cast<std::size_t>(x);
            if (!onedim->sym[u].num().is_zero())
                out << fmt::format("<{}, S_t({})> = {}\n", ct.irr_names[u], label, onedim->sym[u].to_factored_string());
        }
    for (const auto& l : lines) out << fmt::format("{}  [{}]\n", power_text(l), l.route);
    return exit_ok;
}

int cmd_verify(const GroupContext& g, Format f, int degree_cap, std::ostream& out) {
    VerifyOptions opt;
    opt.closed_form_degree_cap = degree_cap;
    QuotientResolver resolve = [](const std::string& sel) -> std::optional<CharacterTable> {
        try {
            return get_group(FamilyParams::parse(sel));
        } catch (const Error&) {
            return std::nullopt;
        }
    };
    auto report = verify_bundle(g.bundle, opt, resolve);
    long failed = std::count_if(report.checks.begin(), report.checks.end(), [](const Check& c) { return !c.ok; });
    const std::string& name = g.bundle.table.name;
    if (f == Format::machine) {
        json checks = json::array();
        for (const auto& c : report.checks) checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
        out << json{{"kind", "report"}, {"group", name}, {"ok", failed == 0}, {"checks", checks}}.dump(2) << "\n";
    } else if (f == Format::csv) {
        out << csv_row({"status", "check", "detail"});
        for (const auto& c : report.checks) out << csv_row({c.ok ? "PASS" : "FAIL", c.name, c.detail});
    } else {
        out << fmt::format("# verify {}: {} checks\n", name, report.checks.size());
        for (const auto& c : report.checks)
            out << (c.ok ? fmt::format("PASS {}\n", c.name)
                         : fmt::format("FAIL {}{}\n", c.name, c.detail.empty() ? "" : ": " + c.detail));
        out << fmt::format("# result: {} ({} of {} passed)\n", failed == 0 ? "PASS" : "FAIL",
                           static_cast<long>(report.checks.size()) - failed, report.checks.size());
    }
    return failed == 0 ? exit_ok : exit_verification_failed;
}

int cmd_export(const GroupContext& g, Format f, std::ostream& out) {
    const CharacterTable& ct = g.bundle.table;
    const ClassData& cd = *ct.classes;
    if (f == Format::machine) {
        out << bundle_to_json(g.bundle).dump(2) << "\n";
    } else if (f == Format::csv) {
        std::vector<std::string> names{"class"}, sizes{"size"}, orders{"order"};
        for (int c = 0; c < cd.class_count(); ++c) {
            auto u = static_cast<std::size_t>(c);
            names.push_back(cd.names[u]);
            sizes.push_back(std::to_string(cd.sizes[u]));
            orders.push_back(std::to_string(cd.rep_orders[u]));
        }
        out << csv_row(names) << csv_row(sizes) << csv_row(orders);
        for (int j = 0; j < ct.size(); ++j) {
            std::vector<std::string> row{ct.irr_names[static_cast<std::size_t>(j)]};
            for (const auto& v : ct.irr(j).values()) row.push_back(v.to_string());
            out << csv_row(row);
        }
    } else {
        out << write_spec(g.bundle);
    }
    return exit_ok;
}

PowerOp parse_op(const std::string& s) { return s == "ext" ? PowerOp::ext : PowerOp::sym; }

void check_degree(int degree) {
    if (degree < 0) throw InputError(fmt::format("degree must be nonnegative, got {}", degree));
    if (degree > max_cli_degree) throw InputError(fmt::format("degree {} exceeds the limit {}", degree, max_cli_degree));
}

} // namespace

GroupContext resolve_group(const std::string& group, const std::vector<std::string>& generators, bool validate) {
    if (group.empty() && generators.empty()) throw InputError("no group given; pass --group or --generators");
    GroupContext g;
    if (!group.empty()) {
        if (looks_like_path(group)) {
            g.bundle = load_spec_file(group, validate);
        } else {
            g.family = FamilyParams::parse(group);
            g.bundle = get_bundle(*g.family);
        }
    }
    const std::vector<std::string>& gens = generators.empty() ? g.bundle.generators : generators;
    if (gens.empty()) return g;
    PermData d = perm_data(gens);
    std::optional<std::vector<int>> map;
    if (group.empty()) {
        for (const auto& fp : builtins_of_order(d.group.order())) {
            auto ct = get_group(fp);
            if ((map = match_class_data(*ct.classes, *d.classes.data))) {
                g.family = fp;
                g.bundle = get_bundle(fp);
                break;
            }
        }
        if (!map)
            throw InputError(fmt::format("the generated group of order {} matches no builtin table; pass --group with a spec file",
                                         d.group.order()));
        g.generators_only = true;
    } else {
        map = match_class_data(*g.bundle.table.classes, *d.classes.data);
        if (!map) throw InputError(fmt::format("the generators do not match the classes of {}", g.bundle.table.name));
    }
    g.bundle.generators = gens;
    g.natural = transported_natural(d, g.bundle.table, *map);
    return g;
}

ClassFunction parse_character(const std::string& expr, const GroupContext& g) {
    std::vector<std::pair<int, std::string>> terms;
    std::string cur;
    int sign = 1;
    auto flush = [&]() {
        std::string t = trim(cur);
        if (t.empty()) throw InputError(fmt::format("malformed character expression '{}'", expr));
        terms.emplace_back(sign, t);
        cur.clear();
    };
    for (char ch : expr) {
        if (ch == '+' || ch == '-') {
            std::string t = trim(cur);
            if (t.empty()) {
                if (ch == '-') sign = -sign;
                continue;
            }
            if (t.back() == ':' || t.back() == '*') {
                cur += ch;
                continue;
            }
            flush();
            sign = ch == '-' ? -1 : 1;
            continue;
        }
        cur += ch;
    }
    flush();
    std::optional<ClassFunction> total;
    for (const auto& [s, t] : terms) {
        Rational coeff(s);
        std::string atom = t;
        if (auto star = t.find('*'); star != std::string::npos) {
            try {
                coeff = coeff * Rational::parse(trim(t.substr(0, star)));
            } catch (const Error&) {
                throw InputError(fmt::format("bad coefficient in '{}'", t));
            }
            atom = trim(t.substr(star + 1));
        }
        ClassFunction v = Cyclotomic(coeff) * atom_value(atom, g);
        total = total ? *total + v : v;
    }
    return *total;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Symmetric and exterior powers of finite group characters", "lambdachar"};
    app.require_subcommand(1);
    Common common;
    std::string charexpr, op = "sym", irr, mode = "rational", spec;
    int degree = 10, degree_cap = 30;
    bool check = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--group,-g", common.group, "builtin selector (S3, A4, G21, S4, A5, D2n:n, Q4n:n, Hp:p) or spec-file path");
        sub->add_option("--generators", common.generators, "permutation generators in cycle notation");
        sub->add_option("--format", common.format, "output format")->check(CLI::IsMember({"plain", "csv", "machine"}));
    };
    auto add_char = [&](CLI::App* sub) {
        sub->add_option("--char,-c", charexpr, "character expression, e.g. chi3, regular, 2*chi2-chi1")->required();
        sub->add_option("--op", op, "sym or ext")->check(CLI::IsMember({"sym", "ext"}));
        sub->add_flag("--check-consistency", check, "cross-check the table route against per-class series");
    };

    auto* dec = app.add_subcommand("decompose", "multiplicity table of S^i or lambda^i for i = 0..degree");
    add_common(dec);
    add_char(dec);
    dec->add_option("--degree,-d", degree, "largest power");

    auto* gen = app.add_subcommand("genfun", "generating functions <chi_j, S_t(chi)> or <chi_j, lambda_t(chi)>");
    add_common(gen);
    add_char(gen);
    gen->add_option("--irr,-j", irr, "irreducible chi_j (default: all)");
    gen->add_option("--mode", mode, "rational or series")->check(CLI::IsMember({"rational", "series"}));
    gen->add_option("--degree,-d", degree, "series length, also used by --check-consistency");

    auto* cf = app.add_subcommand("closedform", "closed forms for special characters");
    add_common(cf);
    cf->add_option("--spec,-s", spec, "regular[:m], quotient:<normal>[:m], central:<name> or onedim:<char>")->required();
    cf->add_option("--degree,-d", degree, "largest power listed");

    auto* ver = app.add_subcommand("verify", "run every consistency check known for the group");
    add_common(ver);
    ver->add_option("--degree-cap", degree_cap, "largest degree for closed-form comparisons");

    auto* exp = app.add_subcommand("export", "write the group as a spec file (plain), JSON (machine) or CSV");
    add_common(exp);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_input_error;
    }

    Format f = parse_format(common.format);
    try {
        if (ver->parsed()) {
            if (degree_cap < 1) throw InputError("--degree-cap must be positive");
            return cmd_verify(resolve_group(common.group, common.generators, false), f, degree_cap, out);
        }
        GroupContext g = resolve_group(common.group, common.generators, true);
        if (dec->parsed()) {
            check_degree(degree);
            return cmd_decompose(g, charexpr, parse_op(op), degree, f, check, out, err);
        }
        if (gen->parsed()) {
            check_degree(degree);
            return cmd_genfun(g, charexpr, irr, parse_op(op), mode, degree, f, check, out, err);
        }
        if (cf->parsed()) {
            check_degree(degree);
            return cmd_closedform(g, spec, degree, f, out);
        }
        return cmd_export(g, f, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }
}

} // namespace lambdachar
