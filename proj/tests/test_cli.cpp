// Command-line front end: documented examples, exit codes, determinism and
// machine-format round trips.

#include "lambdachar/cli.hpp"
#include "lambdachar/errors.hpp"
#include "lambdachar/spec_file.hpp"

#include <catch_amalgamated.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace lambdachar;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "lambdachar");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

std::string last_line(const std::string& s) {
    auto end = s.find_last_not_of('\n');
    auto start = s.rfind('\n', end);
    return s.substr(start == std::string::npos ? 0 : start + 1, end - (start == std::string::npos ? 0 : start + 1) + 1);
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
    auto p = std::filesystem::temp_directory_path() / ("lambdachar_test_" + name);
    std::ofstream(p) << content;
    return p;
}

std::vector<std::string> row_of(const nlohmann::json& j, std::size_t i) { return j.at("rows").at(i).get<std::vector<std::string>>(); }

} // namespace

TEST_CASE("decompose examples") {
    auto r = run({"decompose", "--group", "S3", "--char", "chi3", "--op", "sym", "--degree", "6"});
    CHECK(r.code == 0);
    CHECK(last_line(r.out) == "6     2     1     2");
    auto m = run({"decompose", "-g", "S3", "-c", "chi3", "--op", "ext", "-d", "2", "--format", "machine"});
    REQUIRE(m.code == 0);
    auto j = nlohmann::json::parse(m.out);
    CHECK(j["kind"] == "table");
    CHECK(row_of(j, 0) == std::vector<std::string>{"1", "0", "0"});
    CHECK(row_of(j, 1) == std::vector<std::string>{"0", "0", "1"});
    CHECK(row_of(j, 2) == std::vector<std::string>{"0", "1", "0"});
    auto z = run({"decompose", "-g", "A5", "-c", "chi4", "-d", "0", "--format", "csv"});
    CHECK(z.out == "i,chi1,chi2,chi3,chi4,chi5\n0,1,0,0,0,0\n");
}

TEST_CASE("consistency check and character expressions") {
    auto r = run({"decompose", "-g", "G21", "-c", "chi4 + 2*chi2", "-d", "12", "--check-consistency"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "# dual-route check: passed"));
    auto v = run({"decompose", "-g", "S4", "-c", "chi3-chi2", "-d", "4", "--check-consistency"});
    CHECK(v.code == 0);
    auto t = run({"decompose", "-g", "D2n:6", "-c", "taup:7", "-d", "2", "--format", "csv"});
    CHECK(t.code == 0);
    CHECK(contains(t.out, "1,0,0,0,0,1,0"));
    auto p = run({"decompose", "-g", "S4", "-c", "pi:V", "-d", "1", "--format", "csv"});
    CHECK(last_line(p.out) == "1,1,1,0,0,2");
    auto n = run({"decompose", "-g", "S4", "-c", "natural", "--op", "ext", "-d", "4", "--format", "csv"});
    CHECK(last_line(n.out) == "4,0,1,0,0,0");
    auto h = run({"decompose", "-g", "Hp:3", "-c", "1/3*zeta0:tau1 * 3", "-d", "1"});
    CHECK(h.code == 2);
}

TEST_CASE("genfun examples") {
    auto r = run({"genfun", "-g", "S3", "-c", "chi3", "--irr", "chi1"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "factored: 1 / ((1 - t^2)(1 - t^3))"));
    auto s = run({"genfun", "-g", "S3", "-c", "regular", "-j", "chi3", "--mode", "series", "-d", "10"});
    CHECK(contains(s.out, "0, 2, 7, 18, 42, 84, 153, 264, 429, 666, 1001"));
    auto e = run({"genfun", "-g", "S3", "-c", "chi2", "--op", "ext", "-j", "chi3"});
    CHECK(contains(e.out, "= 0"));
    auto m = run({"genfun", "-g", "S4", "-c", "chi5", "--format", "machine", "--check-consistency"});
    REQUIRE(m.code == 0);
    auto j = nlohmann::json::parse(m.out);
    CHECK(j["consistency"] == "passed");
    CHECK(j["entries"][4]["factored"] == "t / ((1 - t)(1 - t^3))");
}

TEST_CASE("closedform examples") {
    auto r = run({"closedform", "-g", "S3", "--spec", "regular"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "C1 (h = 1): lambda_t = (1 + t)^6"));
    CHECK(contains(r.out, "[coprime shortcut]"));
    auto h = run({"closedform", "-g", "Hp:3", "-s", "central:tau1", "-d", "4"});
    CHECK(contains(h.out, "lambda^3(tau1) = chi_0_0"));
    CHECK(contains(h.out, "lambda^4(tau1) = 0"));
    auto o = run({"closedform", "-g", "S3", "-s", "onedim:chi1", "-d", "2"});
    CHECK(contains(o.out, "S_t = 1 / (1 - t)"));
    auto q = run({"closedform", "-g", "S4", "-s", "quotient:V:2", "-d", "3", "--format", "machine"});
    REQUIRE(q.code == 0);
    CHECK(nlohmann::json::parse(q.out)["label"] == "2*Pi_V");
    CHECK(run({"closedform", "-g", "S4", "-s", "quotient:W"}).code == 2);
    CHECK(run({"closedform", "-g", "S4", "-s", "central:x"}).code == 2);
    CHECK(run({"closedform", "-g", "S4", "-s", "onedim:chi3"}).code == 2);
    CHECK(run({"closedform", "-g", "S4", "-s", "bogus"}).code == 2);
}

TEST_CASE("verify reports and exit codes") {
    auto r = run({"verify", "--group", "S4"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "PASS quotient S3 via V: multiplicity transfer to degree 10"));
    CHECK_FALSE(contains(r.out, "FAIL"));
    auto spec = run({"export", "-g", "S4"});
    auto bad = spec.out;
    const std::string row = "irr chi2 = 1 -1 1 -1 1";
    auto pos = bad.find(row);
    REQUIRE(pos != std::string::npos);
    bad.replace(pos, row.size(), "irr chi2 = 1 -1 1 1 1");
    auto path = temp_file("bad.spec", bad);
    auto v = run({"verify", "-g", path.string()});
    CHECK(v.code == 1);
    CHECK(contains(v.out, "FAIL table: row orthogonality"));
    auto d = run({"decompose", "-g", path.string(), "-c", "chi1"});
    CHECK(d.code == 2);
    CHECK(contains(d.err, "row orthogonality"));
}

TEST_CASE("input errors exit with code 2") {
    CHECK(run({"decompose", "-g", "S3", "-c", "chi9"}).code == 2);
    CHECK(run({"decompose", "-g", "S9", "-c", "chi1"}).code == 2);
    CHECK(run({"decompose", "-g", "S3", "-c", "chi1", "-d", "-1"}).code == 2);
    CHECK(run({"decompose", "-g", "S3"}).code == 2);
    CHECK(run({"decompose", "-g", "S3", "-c", "chi1", "--format", "xml"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"decompose", "-c", "chi1"}).code == 2);
    CHECK(run({"decompose", "-g", "/nonexistent/x.spec", "-c", "chi1"}).code == 2);
    CHECK(run({"decompose", "-g", "S3", "-c", "taup:1"}).code == 2);
    CHECK(run({"genfun", "-g", "S3", "-c", "chi1-chi2"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("generators select and check a table") {
    auto r = run({"decompose", "--generators", "(0 1)", "(0 1 2 3)", "-c", "natural", "--op", "ext", "-d", "4", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(last_line(r.out) == "4,0,1,0,0,0");
    CHECK(run({"decompose", "--generators", "(0 1)", "(0 1 2 3)", "-c", "chi3"}).code == 2);
    auto both = run({"decompose", "-g", "S4", "--generators", "(0 1)", "(0 1 2 3)", "-c", "chi3+natural", "-d", "1"});
    CHECK(both.code == 0);
    CHECK(run({"decompose", "-g", "A4", "--generators", "(0 1)", "(0 1 2 3)", "-c", "natural"}).code == 2);
    CHECK(run({"decompose", "--generators", "(0 1)(2 3)", "-c", "natural"}).code == 2);
    auto v = run({"verify", "-g", "D2n:5", "--generators", "(0 1 2 3 4)", "(1 4)(2 3)"});
    CHECK(v.code == 0);
}

TEST_CASE("output is deterministic") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"decompose", "-g", "A5", "-c", "chi3", "-d", "8", "--format", "machine"},
             {"genfun", "-g", "Q4n:3", "-c", "tau2"},
             {"closedform", "-g", "Hp:3", "-s", "central:tau2", "--format", "csv"},
             {"export", "-g", "G21", "--format", "machine"},
         }) {
        auto a = run(args), b = run(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("machine export round-trips") {
    for (const char* sel : {"S3", "A5", "G21", "Hp:3", "Q4n:3", "D2n:6"}) {
        INFO(sel);
        auto m = run({"export", "-g", sel, "--format", "machine"});
        REQUIRE(m.code == 0);
        std::string stem = sel;
        std::replace(stem.begin(), stem.end(), ':', '_');
        auto path = temp_file(stem + ".json", m.out);
        auto again = run({"export", "-g", path.string(), "--format", "machine"});
        CHECK(again.out == m.out);
        auto text = run({"export", "-g", sel});
        auto tpath = temp_file(stem + ".spec", text.out);
        CHECK(run({"export", "-g", tpath.string()}).out == text.out);
        CHECK(run({"decompose", "-g", tpath.string(), "-c", "chi2", "-d", "6"}).out ==
              run({"decompose", "-g", sel, "-c", "chi2", "-d", "6"}).out);
    }
    auto d = run({"decompose", "-g", "S4", "-c", "chi3", "-d", "5", "--format", "machine"});
    auto j = nlohmann::json::parse(d.out);
    CHECK(nlohmann::json::parse(j.dump(2)) == j);
    CHECK(j.dump(2) + "\n" == d.out);
}
