#include "lambdachar/spec_file.hpp"

#include "lambdachar/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <regex>
#include <set>
#include <sstream>

namespace lambdachar {

using nlohmann::json;

namespace {

struct RawClass {
    std::string name;
    long size = 0;
    int order = 0;
    std::string inverse;
    std::map<int, std::string> powers;
    int line = 0;
};

struct RawIrr {
    std::string name;
    std::vector<json> values;
    int line = 0;
};

struct RawNormal {
    std::string name;
    std::vector<std::string> refs;
    int line = 0;
};

struct RawCentral {
    std::string name, normal;
    long multiplier = 1;
    std::vector<std::pair<std::string, long>> zeta;
    int line = 0;
};

struct RawQuotient {
    std::string target, normal;
    std::vector<std::string> refs;
    int line = 0;
};

struct RawSpec {
    std::string source;
    int format = 0;
    std::string name;
    long order = 0;
    int root_order = 0;
    std::map<std::string, int> header_lines;
    std::vector<RawClass> classes;
    std::vector<RawIrr> irrs;
    std::vector<std::string> generators;
    std::vector<RawNormal> normals;
    std::vector<RawCentral> centrals;
    std::vector<RawQuotient> quotients;
};

std::string where(const std::string& source, int line) {
    return line > 0 ? fmt::format("{}:{}", source, line) : source;
}

[[noreturn]] void fail(const std::string& source, int line, const std::string& msg) {
    throw InputError(fmt::format("{}: {}", where(source, line), msg));
}

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

long parse_long(const std::string& s, const std::string& source, int line, const std::string& what) {
    try {
        std::size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        fail(source, line, fmt::format("{} must be an integer, got '{}'", what, s));
    }
}

// Class names may not be pure digits since class references accept indices.
void check_identifier(const std::string& s, const std::string& source, int line, bool allow_digits = false) {
    if (s.empty() || (!allow_digits && all_digits(s)) || s.find_first_of("=[],:;#") != std::string::npos)
        fail(source, line, fmt::format("invalid name '{}'", s));
}

// Whitespace-separated tokens; a bracketed group counts as one token.
std::vector<std::string> value_tokens(std::string_view s, const std::string& source, int line) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < s.size()) {
        if (std::isspace(static_cast<unsigned char>(s[i]))) {
            ++i;
            continue;
        }
        std::string tok;
        int depth = 0;
        while (i < s.size() && (depth > 0 || !std::isspace(static_cast<unsigned char>(s[i])))) {
            if (s[i] == '[') ++depth;
            if (s[i] == ']' && --depth < 0) fail(source, line, "unbalanced ']'");
            if (!std::isspace(static_cast<unsigned char>(s[i]))) tok += s[i];
            ++i;
        }
        if (depth != 0) fail(source, line, "unbalanced '['");
        out.push_back(std::move(tok));
    }
    return out;
}

// Machine-sized integers as numbers, larger ones as decimal strings.
json big_json(const BigInt& n) {
    if (n.fits_slong_p()) return n.get_si();
    return n.get_str();
}

// "2", "-1/3" or "[[e,n,d],...]" as a list of triples.
json value_to_json(const std::string& tok, const std::string& source, int line) {
    if (!tok.empty() && tok[0] == '[') {
        try {
            return json::parse(tok);
        } catch (const json::exception&) {
            fail(source, line, fmt::format("malformed cyclotomic value '{}'", tok));
        }
    }
    try {
        Rational q = Rational::parse(tok);
        return json::array({json::array({0, big_json(q.numerator()), big_json(q.denominator())})});
    } catch (const Error&) {
        fail(source, line, fmt::format("malformed value '{}'", tok));
    }
}

Rational json_rational(const json& n, const json& d) {
    auto text = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    return Rational::parse(text(n) + "/" + text(d));
}

// key=value pairs following the leading tokens of a line.
std::map<std::string, std::string> keyvals(const std::vector<std::string>& toks, std::size_t from, const std::string& source,
                                           int line) {
    std::map<std::string, std::string> kv;
    for (std::size_t i = from; i < toks.size(); ++i) {
        auto eq = toks[i].find('=');
        if (eq == std::string::npos || eq == 0) fail(source, line, fmt::format("expected key=value, got '{}'", toks[i]));
        if (!kv.emplace(toks[i].substr(0, eq), toks[i].substr(eq + 1)).second)
            fail(source, line, fmt::format("duplicate key '{}'", toks[i].substr(0, eq)));
    }
    return kv;
}

std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

RawSpec parse_text(std::string_view text, const std::string& source) {
    RawSpec raw;
    raw.source = source;
    std::istringstream in{std::string(text)};
    std::string l;
    int line = 0;
    while (std::getline(in, l)) {
        ++line;
        if (auto h = l.find('#'); h != std::string::npos) l.erase(h);
        auto toks = split_ws(l);
        if (toks.empty()) continue;
        const std::string& kw = toks[0];
        // "<head> = <tail>" lines carry lists after the equals sign.
        std::string head = l, tail;
        if (kw == "irr" || kw == "normal" || kw == "central" || kw == "quotient") {
            auto eq = l.find(" = ");
            if (eq == std::string::npos) fail(source, line, fmt::format("'{}' line needs ' = ' before its list", kw));
            head = l.substr(0, eq);
            tail = l.substr(eq + 3);
        }
        auto htoks = split_ws(head);
        auto header = [&](const std::string& key) {
            if (htoks.size() != 2) fail(source, line, fmt::format("'{}' takes one value", key));
            if (raw.header_lines.count(key)) fail(source, line, fmt::format("duplicate '{}' line", key));
            raw.header_lines[key] = line;
            return htoks[1];
        };
        if (kw == "format") {
            raw.format = static_cast<int>(parse_long(header(kw), source, line, "format"));
        } else if (kw == "name") {
            raw.name = header(kw);
        } else if (kw == "order") {
            raw.order = parse_long(header(kw), source, line, "order");
        } else if (kw == "root_order") {
            raw.root_order = static_cast<int>(parse_long(header(kw), source, line, "root_order"));
        } else if (kw == "class") {
            if (htoks.size() < 2) fail(source, line, "class needs a name");
            RawClass c;
            c.name = htoks[1];
            c.line = line;
            check_identifier(c.name, source, line);
            for (const auto& [k, v] : keyvals(htoks, 2, source, line)) {
                if (k == "size") c.size = parse_long(v, source, line, "size");
                else if (k == "order") c.order = static_cast<int>(parse_long(v, source, line, "order"));
                else if (k == "inverse") c.inverse = v;
                else if (k.rfind("pow", 0) == 0 && all_digits(k.substr(3))) c.powers[std::stoi(k.substr(3))] = v;
                else fail(source, line, fmt::format("unknown class attribute '{}'", k));
            }
            if (c.size <= 0) fail(source, line, "class needs size=<positive integer>");
            if (c.order <= 0) fail(source, line, "class needs order=<positive integer>");
            if (c.inverse.empty()) fail(source, line, "class needs inverse=<class>");
            raw.classes.push_back(std::move(c));
        } else if (kw == "irr") {
            if (htoks.size() != 2) fail(source, line, "expected 'irr <name> = <values>'");
            RawIrr r;
            r.name = htoks[1];
            r.line = line;
            check_identifier(r.name, source, line);
            for (const auto& t : value_tokens(tail, source, line)) r.values.push_back(value_to_json(t, source, line));
            raw.irrs.push_back(std::move(r));
        } else if (kw == "generator") {
            auto p = l.find("generator");
            std::string g = l.substr(p + 9);
            g.erase(0, g.find_first_not_of(" \t"));
            g.erase(g.find_last_not_of(" \t\r") + 1);
            if (g.empty()) fail(source, line, "generator needs cycle notation");
            try {
                Permutation::parse_cycles(g, Permutation::max_point(g));
            } catch (const Error& e) {
                fail(source, line, e.what());
            }
            raw.generators.push_back(g);
        } else if (kw == "normal") {
            if (htoks.size() != 2) fail(source, line, "expected 'normal <name> = <classes>'");
            RawNormal n{htoks[1], split_ws(tail), line};
            check_identifier(n.name, source, line, true);
            raw.normals.push_back(std::move(n));
        } else if (kw == "central") {
            if (htoks.size() < 2) fail(source, line, "expected 'central <name> normal=<N> m=<m> = <class>:<exponent> ...'");
            RawCentral c;
            c.name = htoks[1];
            c.line = line;
            check_identifier(c.name, source, line, true);
            for (const auto& [k, v] : keyvals(htoks, 2, source, line)) {
                if (k == "normal") c.normal = v;
                else if (k == "m") c.multiplier = parse_long(v, source, line, "m");
                else fail(source, line, fmt::format("unknown central attribute '{}'", k));
            }
            if (c.normal.empty()) fail(source, line, "central needs normal=<name>");
            for (const auto& t : split_ws(tail)) {
                auto colon = t.find(':');
                if (colon == std::string::npos) fail(source, line, fmt::format("expected <class>:<exponent>, got '{}'", t));
                c.zeta.emplace_back(t.substr(0, colon), parse_long(t.substr(colon + 1), source, line, "exponent"));
            }
            raw.centrals.push_back(std::move(c));
        } else if (kw == "quotient") {
            if (htoks.size() < 2) fail(source, line, "expected 'quotient <group> normal=<N> = <class map>'");
            RawQuotient q;
            q.target = htoks[1];
            q.line = line;
            for (const auto& [k, v] : keyvals(htoks, 2, source, line)) {
                if (k == "normal") q.normal = v;
                else fail(source, line, fmt::format("unknown quotient attribute '{}'", k));
            }
            if (q.normal.empty()) fail(source, line, "quotient needs normal=<name>");
            q.refs = split_ws(tail);
            raw.quotients.push_back(std::move(q));
        } else {
            fail(source, line, fmt::format("unknown keyword '{}'", kw));
        }
    }
    return raw;
}

// Appends the lines of every class or irreducible named in a message.
std::string with_lines(const std::string& msg, const RawSpec& raw) {
    std::set<int> lines;
    auto mentions = [&msg](const std::string& name) {
        std::regex re("(^|[^A-Za-z0-9_])" + std::regex_replace(name, std::regex(R"([.^$|()\[\]{}*+?\\])"), R"(\$&)") +
                      "($|[^A-Za-z0-9_])");
        return std::regex_search(msg, re);
    };
    for (const auto& i : raw.irrs)
        if (mentions(i.name)) lines.insert(i.line);
    for (const auto& c : raw.classes)
        if (mentions(c.name)) lines.insert(c.line);
    if (lines.empty()) return msg;
    std::vector<std::string> ls;
    for (int x : lines) ls.push_back(std::to_string(x));
    return fmt::format("{} (line{} {})", msg, lines.size() > 1 ? "s" : "", fmt::join(ls, ", "));
}

GroupBundle build(const RawSpec& raw, bool validate) {
    const std::string& src = raw.source;
    auto hline = [&](const std::string& k) {
        auto it = raw.header_lines.find(k);
        return it == raw.header_lines.end() ? 0 : it->second;
    };
    if (raw.format != spec_format_version)
        fail(src, hline("format"), fmt::format("unsupported or missing format version (expected 'format {}')", spec_format_version));
    if (raw.name.empty()) fail(src, 0, "missing 'name'");
    if (raw.root_order < 1) fail(src, hline("root_order"), "missing or invalid 'root_order'");
    if (raw.classes.empty()) fail(src, 0, "no classes");
    int k = static_cast<int>(raw.classes.size());

    std::map<std::string, int> class_index;
    for (int c = 0; c < k; ++c)
        if (!class_index.emplace(raw.classes[static_cast<std::size_t>(c)].name, c).second)
            fail(src, raw.classes[static_cast<std::size_t>(c)].line, fmt::format("duplicate class '{}'", raw.classes[static_cast<std::size_t>(c)].name));
    auto ref = [&](const std::string& r, int line) {
        if (all_digits(r)) {
            long v = parse_long(r, src, line, "class index");
            if (v >= k) fail(src, line, fmt::format("class index {} out of range", v));
            return static_cast<int>(v);
        }
        auto it = class_index.find(r);
        if (it == class_index.end()) fail(src, line, fmt::format("unknown class '{}'", r));
        return it->second;
    };

    ClassData cd;
    std::set<int> primes;
    for (const auto& c : raw.classes)
        for (const auto& [p, v] : c.powers) primes.insert(p);
    for (const auto& c : raw.classes) {
        cd.names.push_back(c.name);
        cd.sizes.push_back(c.size);
        cd.rep_orders.push_back(c.order);
        cd.inverse_class.push_back(ref(c.inverse, c.line));
        for (int p : primes) {
            auto it = c.powers.find(p);
            if (it == c.powers.end()) fail(src, c.line, fmt::format("class '{}' lacks pow{}", c.name, p));
            cd.prime_power_maps[p].push_back(ref(it->second, c.line));
        }
    }
    cd.group_order = std::accumulate(cd.sizes.begin(), cd.sizes.end(), 0L);
    if (raw.order != cd.group_order)
        fail(src, hline("order"), fmt::format("order {} differs from the sum of class sizes {}", raw.order, cd.group_order));
    cd.exponent = std::accumulate(cd.rep_orders.begin(), cd.rep_orders.end(), 1, [](int a, int b) { return std::lcm(a, b); });
    auto exponent_primes = primes_up_to(cd.exponent);
    for (int p : primes)
        if (std::find(exponent_primes.begin(), exponent_primes.end(), p) == exponent_primes.end())
            fail(src, raw.classes[0].line, fmt::format("pow{}: {} is not a prime up to the exponent {}", p, p, cd.exponent));

    std::vector<std::vector<Cyclotomic>> rows;
    std::set<std::string> irr_seen;
    for (const auto& r : raw.irrs) {
        if (!irr_seen.insert(r.name).second) fail(src, r.line, fmt::format("duplicate irreducible '{}'", r.name));
        if (static_cast<int>(r.values.size()) != k)
            fail(src, r.line, fmt::format("irreducible '{}' has {} values for {} classes", r.name, r.values.size(), k));
        std::vector<Cyclotomic> row;
        for (const auto& v : r.values) {
            try {
                row.push_back(cyclotomic_from_json(v, raw.root_order));
            } catch (const Error& e) {
                fail(src, r.line, e.what());
            }
        }
        rows.push_back(std::move(row));
    }
    // Power maps for primes not dividing the exponent follow from the table.
    for (int p : exponent_primes)
        if (cd.exponent % p == 0 && !cd.prime_power_maps.count(p))
            fail(src, raw.classes[0].line, fmt::format("pow{} is required since {} divides the exponent {}", p, p, cd.exponent));
    derive_coprime_power_maps(cd, rows);
    if (auto bad = check_class_data(cd); !bad.empty()) {
        std::vector<std::string> msgs;
        for (const auto& b : bad) msgs.push_back(with_lines(b, raw));
        fail(src, 0, fmt::format("invalid class data: {}", fmt::join(msgs, "; ")));
    }

    GroupBundle g;
    CharacterTable& ct = g.table;
    ct.name = raw.name;
    ct.root_order = raw.root_order;
    auto classes = std::make_shared<const ClassData>(std::move(cd));
    ct.classes = classes;
    for (std::size_t i = 0; i < raw.irrs.size(); ++i) {
        ct.irr_names.push_back(raw.irrs[i].name);
        ct.irreducibles.emplace_back(classes, rows[i]);
    }
    if (validate) {
        auto report = validate_table(ct);
        if (!report.ok()) {
            std::string msg = fmt::format("{}: character table fails validation", src);
            for (const auto& f : report.failures()) msg += "\n  " + with_lines(f, raw);
            throw InvalidTable(msg);
        }
    }
    for (const auto& n : raw.normals) {
        std::vector<int> idx;
        for (const auto& r : n.refs) idx.push_back(ref(r, n.line));
        try {
            g.normal_subgroups.push_back(make_normal_subgroup(*classes, idx, n.name));
        } catch (const Error& e) {
            fail(src, n.line, e.what());
        }
    }
    auto find_normal = [&](const std::string& name, int line) {
        for (const auto& n : g.normal_subgroups)
            if (n.name == name) return n;
        fail(src, line, fmt::format("unknown normal subgroup '{}'", name));
    };
    for (const auto& c : raw.centrals) {
        CentralCharSpec spec;
        spec.name = c.name;
        spec.subgroup = find_normal(c.normal, c.line);
        spec.multiplier = c.multiplier;
        for (const auto& [r, e] : c.zeta) spec.zeta[ref(r, c.line)] = Cyclotomic::root(raw.root_order, e);
        if (auto bad = check_central_spec(*classes, spec); !bad.empty())
            fail(src, c.line, fmt::format("invalid central character: {}", fmt::join(bad, "; ")));
        g.central_chars.push_back(std::move(spec));
    }
    for (const auto& q : raw.quotients) {
        find_normal(q.normal, q.line);
        QuotientMap m;
        m.target = q.target;
        m.via = q.normal;
        for (const auto& r : q.refs) {
            if (!all_digits(r)) fail(src, q.line, fmt::format("quotient class map entries are indices, got '{}'", r));
            m.class_map.push_back(static_cast<int>(parse_long(r, src, q.line, "class index")));
        }
        if (static_cast<int>(m.class_map.size()) != k)
            fail(src, q.line, fmt::format("quotient class map has {} entries for {} classes", m.class_map.size(), k));
        g.quotients.push_back(std::move(m));
    }
    g.generators = raw.generators;
    return g;
}

std::string value_text(const Cyclotomic& x, int root_order) {
    if (x.is_rational()) return x.to_rational().to_string();
    return cyclotomic_to_json(x, root_order).dump();
}

long root_exponent(const Cyclotomic& z, int root_order) {
    for (long e = 0; e < root_order; ++e)
        if (Cyclotomic::root(root_order, e) == z) return e;
    throw InputError("central character value is not a root of unity of the root order");
}

} // namespace

json cyclotomic_to_json(const Cyclotomic& x, int root_order) {
    json out = json::array();
    int m = std::lcm(root_order, x.order());
    if (m != root_order) throw InputError(fmt::format("value {} does not lie in Q(zeta_{})", x.to_string(), root_order));
    for (const auto& [e, q] : x.terms_at(root_order)) out.push_back(json::array({e, big_json(q.numerator()), big_json(q.denominator())}));
    return out;
}

Cyclotomic cyclotomic_from_json(const json& j, int root_order) {
    if (j.is_number_integer()) return Cyclotomic(Rational(j.get<long>()));
    if (j.is_string()) return Cyclotomic(Rational::parse(j.get<std::string>()));
    if (!j.is_array()) throw InputError("cyclotomic value must be a list of [exponent, numerator, denominator]");
    std::vector<std::pair<long, Rational>> terms;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer())
            throw InputError(fmt::format("malformed cyclotomic term {}", t.dump()));
        Rational q = json_rational(t[1], t[2]);
        terms.emplace_back(t[0].get<long>(), q);
    }
    return Cyclotomic::make(root_order, terms);
}

GroupBundle parse_spec(std::string_view text, const std::string& source, bool validate) {
    return build(parse_text(text, source), validate);
}

GroupBundle load_spec_file(const std::string& path, bool validate) {
    std::ifstream in(path);
    if (!in) throw InputError(fmt::format("cannot read spec file '{}'", path));
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        try {
            return bundle_from_json(json::parse(text), validate);
        } catch (const json::exception& e) {
            throw InputError(fmt::format("{}: malformed JSON: {}", path, e.what()));
        }
    }
    return parse_spec(text, path, validate);
}

std::string write_spec(const GroupBundle& b) {
    const CharacterTable& ct = b.table;
    const ClassData& cd = *ct.classes;
    std::string out;
    out += fmt::format("format {}\nname {}\norder {}\nroot_order {}\n", spec_format_version, ct.name, cd.group_order, ct.root_order);
    for (int c = 0; c < cd.class_count(); ++c) {
        auto u = static_cast<std::size_t>(c);
        out += fmt::format("class {} size={} order={} inverse={}", cd.names[u], cd.sizes[u], cd.rep_orders[u], cd.inverse_class[u]);
        for (const auto& [p, map] : cd.prime_power_maps) out += fmt::format(" pow{}={}", p, map[u]);
        out += "\n";
    }
    for (int j = 0; j < ct.size(); ++j) {
        out += fmt::format("irr {} =", ct.irr_names[static_cast<std::size_t>(j)]);
        for (const auto& v : ct.irr(j).values()) out += " " + value_text(v, ct.root_order);
        out += "\n";
    }
    for (const auto& g : b.generators) out += fmt::format("generator {}\n", g);
    for (const auto& n : b.normal_subgroups) out += fmt::format("normal {} = {}\n", n.name, fmt::join(n.class_indices, " "));
    for (const auto& c : b.central_chars) {
        out += fmt::format("central {} normal={} m={} =", c.name, c.subgroup.name, c.multiplier);
        for (const auto& [cls, z] : c.zeta) out += fmt::format(" {}:{}", cls, root_exponent(z, ct.root_order));
        out += "\n";
    }
    for (const auto& q : b.quotients) out += fmt::format("quotient {} normal={} = {}\n", q.target, q.via, fmt::join(q.class_map, " "));
    return out;
}

json bundle_to_json(const GroupBundle& b) {
    const CharacterTable& ct = b.table;
    const ClassData& cd = *ct.classes;
    json j;
    j["format"] = spec_format_version;
    j["name"] = ct.name;
    j["order"] = cd.group_order;
    j["root_order"] = ct.root_order;
    j["classes"] = json::array();
    for (int c = 0; c < cd.class_count(); ++c) {
        auto u = static_cast<std::size_t>(c);
        json powers = json::object();
        for (const auto& [p, map] : cd.prime_power_maps) powers[std::to_string(p)] = map[u];
        j["classes"].push_back({{"name", cd.names[u]}, {"size", cd.sizes[u]}, {"order", cd.rep_orders[u]},
                                {"inverse", cd.inverse_class[u]}, {"powers", powers}});
    }
    j["irreducibles"] = json::array();
    for (int x = 0; x < ct.size(); ++x) {
        json vals = json::array();
        for (const auto& v : ct.irr(x).values()) vals.push_back(cyclotomic_to_json(v, ct.root_order));
        j["irreducibles"].push_back({{"name", ct.irr_names[static_cast<std::size_t>(x)]}, {"values", vals}});
    }
    j["generators"] = b.generators;
    j["normal_subgroups"] = json::array();
    for (const auto& n : b.normal_subgroups) j["normal_subgroups"].push_back({{"name", n.name}, {"classes", n.class_indices}});
    j["central_chars"] = json::array();
    for (const auto& c : b.central_chars) {
        json zeta = json::array();
        for (const auto& [cls, z] : c.zeta) zeta.push_back(json::array({cls, root_exponent(z, ct.root_order)}));
        j["central_chars"].push_back({{"name", c.name}, {"normal", c.subgroup.name}, {"multiplier", c.multiplier}, {"zeta", zeta}});
    }
    j["quotients"] = json::array();
    for (const auto& q : b.quotients) j["quotients"].push_back({{"target", q.target}, {"normal", q.via}, {"class_map", q.class_map}});
    return j;
}

GroupBundle bundle_from_json(const json& j, bool validate) {
    RawSpec raw;
    raw.source = "<json>";
    try {
        raw.format = j.at("format").get<int>();
        raw.name = j.at("name").get<std::string>();
        raw.order = j.at("order").get<long>();
        raw.root_order = j.at("root_order").get<int>();
        for (const auto& c : j.at("classes")) {
            RawClass rc;
            rc.name = c.at("name").get<std::string>();
            rc.size = c.at("size").get<long>();
            rc.order = c.at("order").get<int>();
            rc.inverse = std::to_string(c.at("inverse").get<int>());
            const json powers = c.value("powers", json::object());
            for (const auto& [p, v] : powers.items()) rc.powers[std::stoi(p)] = std::to_string(v.get<int>());
            raw.classes.push_back(std::move(rc));
        }
        for (const auto& r : j.at("irreducibles")) {
            RawIrr ri;
            ri.name = r.at("name").get<std::string>();
            for (const auto& v : r.at("values")) ri.values.push_back(v);
            raw.irrs.push_back(std::move(ri));
        }
        for (const auto& g : j.value("generators", json::array())) raw.generators.push_back(g.get<std::string>());
        for (const auto& n : j.value("normal_subgroups", json::array())) {
            RawNormal rn;
            rn.name = n.at("name").get<std::string>();
            for (const auto& c : n.at("classes")) rn.refs.push_back(std::to_string(c.get<int>()));
            raw.normals.push_back(std::move(rn));
        }
        for (const auto& c : j.value("central_chars", json::array())) {
            RawCentral rc;
            rc.name = c.at("name").get<std::string>();
            rc.normal = c.at("normal").get<std::string>();
            rc.multiplier = c.at("multiplier").get<long>();
            for (const auto& z : c.at("zeta")) rc.zeta.emplace_back(std::to_string(z.at(0).get<int>()), z.at(1).get<long>());
            raw.centrals.push_back(std::move(rc));
        }
        for (const auto& q : j.value("quotients", json::array())) {
            RawQuotient rq;
            rq.target = q.at("target").get<std::string>();
            rq.normal = q.at("normal").get<std::string>();
            for (const auto& c : q.at("class_map")) rq.refs.push_back(std::to_string(c.get<int>()));
            raw.quotients.push_back(std::move(rq));
        }
    } catch (const json::exception& e) {
        throw InputError(fmt::format("<json>: malformed group spec: {}", e.what()));
    }
    return build(raw, validate);
}

} // namespace lambdachar
