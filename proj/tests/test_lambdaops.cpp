// Adams operations, Newton's formula, the S/lambda recurrence, per-class
// characteristic polynomials, product forms, and agreement with the
// matrix-trace oracle.

#include "lambdachar/builtins.hpp"
#include "lambdachar/errors.hpp"
#include "lambdachar/lambda_ops.hpp"
#include "oracles.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace lambdachar;

namespace {

CharacterTable table(const char* sel) { return get_group(FamilyParams::parse(sel)); }

ClassFunction irr(const CharacterTable& ct, const char* name) { return ct.irr(ct.index_of(name)); }

// Class index with the given order and size.
int class_with(const CharacterTable& ct, int order, long size) {
    const ClassData& cd = *ct.classes;
    for (int c = 0; c < cd.class_count(); ++c)
        if (cd.rep_orders[static_cast<std::size_t>(c)] == order && cd.sizes[static_cast<std::size_t>(c)] == size) return c;
    return -1;
}

void check_against_matrices(const ClassFunction& chi, const std::vector<std::pair<int, oracle::Matrix>>& reps) {
    auto seq = sym_seq(chi, 4);
    for (const auto& [c, m] : reps) {
        auto h = oracle::complete_from_traces(m, 4);
        for (int n = 0; n <= 4; ++n) {
            INFO("class " << c << " n=" << n);
            CHECK(seq.lambda(n)[c] == Cyclotomic(oracle::principal_minor_sum(m, n)));
            CHECK(seq.sym(n)[c] == Cyclotomic(h[static_cast<std::size_t>(n)]));
        }
    }
}

ClassFunction random_virtual(const CharacterTable& ct, std::mt19937& rng) {
    std::uniform_int_distribution<int> coeff(-2, 2);
    ClassFunction f = ClassFunction::zero(ct.classes);
    for (int j = 0; j < ct.size(); ++j) f += Cyclotomic(coeff(rng)) * ct.irr(j);
    return f;
}

} // namespace

TEST_CASE("Adams operations follow the power maps") {
    auto s3 = table("S3");
    auto chi3 = irr(s3, "chi3");
    CHECK(adams(chi3, 1) == chi3);
    CHECK(adams(chi3, 2).to_string() == "(2, 2, -1)");
    CHECK(adams(chi3, 3).to_string() == "(2, 0, 2)");
    CHECK(adams(chi3, 6).to_string() == "(2, 2, 2)");
    auto a5 = table("A5");
    // psi^2 swaps the two classes of 5-cycles
    auto chi4 = irr(a5, "chi4");
    CHECK(adams(chi4, 2)[3] == chi4[4]);
}

TEST_CASE("exterior square of the standard character of S3") {
    auto s3 = table("S3");
    auto seq = lambda_seq(irr(s3, "chi3"), 4);
    CHECK(seq.lambda(0) == irr(s3, "chi1"));
    CHECK(seq.lambda(1) == irr(s3, "chi3"));
    CHECK(seq.lambda(2) == irr(s3, "chi2"));
    CHECK(seq.lambda(3).is_zero());
    CHECK(seq.lambda(4).is_zero());
    CHECK_NOTHROW(assert_degree_bound(seq));
}

TEST_CASE("matrix-trace oracle: S3 standard representation") {
    auto s3 = table("S3");
    std::vector<std::pair<int, oracle::Matrix>> reps{
        {0, oracle::standard_matrix({0, 1, 2})},
        {class_with(s3, 2, 3), oracle::standard_matrix({1, 0, 2})},
        {class_with(s3, 3, 2), oracle::standard_matrix({1, 2, 0})},
    };
    check_against_matrices(irr(s3, "chi3"), reps);
}

TEST_CASE("matrix-trace oracle: S4 natural and standard representations") {
    auto s4 = table("S4");
    std::vector<std::vector<int>> perms{{0, 1, 2, 3}, {1, 0, 2, 3}, {1, 2, 0, 3}, {1, 2, 3, 0}, {1, 0, 3, 2}};
    std::vector<int> classes{0, class_with(s4, 2, 6), class_with(s4, 3, 8), class_with(s4, 4, 6), class_with(s4, 2, 3)};
    std::vector<std::pair<int, oracle::Matrix>> natural, standard;
    for (std::size_t i = 0; i < perms.size(); ++i) {
        natural.emplace_back(classes[i], oracle::permutation_matrix(perms[i]));
        standard.emplace_back(classes[i], oracle::standard_matrix(perms[i]));
    }
    check_against_matrices(irr(s4, "chi1") + irr(s4, "chi3"), natural);
    check_against_matrices(irr(s4, "chi3"), standard);
}

TEST_CASE("degree bound and integral degree") {
    auto s3 = table("S3");
    CHECK(integral_degree(irr(s3, "chi3")) == 2);
    CHECK_FALSE(integral_degree(irr(s3, "chi2") - irr(s3, "chi3")).has_value());
    auto bad = Cyclotomic(2) * irr(s3, "chi1") - irr(s3, "chi2");
    CHECK_THROWS_AS(assert_degree_bound(lambda_seq(bad, 3)), NotACharacter);
    CHECK_THROWS_AS(char_poly(bad, 1), NotACharacter);
    CHECK_THROWS_AS(char_poly(irr(s3, "chi2") - irr(s3, "chi3"), 0), NonIntegralDegree);
}

TEST_CASE("characteristic polynomial and symmetric series at a class") {
    auto s3 = table("S3");
    auto chi3 = irr(s3, "chi3");
    int c3 = class_with(s3, 3, 2);
    auto p = char_poly(chi3, c3);
    CHECK(p == PolyCyc(std::vector<Cyclotomic>{Cyclotomic(1), Cyclotomic(-1), Cyclotomic(1)}));
    // 1 / (1 + t + t^2) = (1 - t) / (1 - t^3)
    auto s = sym_series_at_class(chi3, c3, 6);
    std::vector<Cyclotomic> expect{1, -1, 0, 1, -1, 0, 1};
    CHECK(s == expect);
    auto lam = lambda_values_at_class(chi3, c3, 3);
    CHECK(lam == std::vector<Cyclotomic>{1, -1, 1, 0});
}

TEST_CASE("symmetric functions from elementary values") {
    std::vector<Rational> e{Rational(3), Rational(3), Rational(1)}; // (1 + t)^3
    CHECK(power_sum_from_elementary(e, 1) == Rational(3));
    CHECK(power_sum_from_elementary(e, 4) == Rational(3));
    CHECK(complete_from_elementary(e, 2) == Rational(6));
    CHECK(complete_from_elementary(e, 5) == Rational(21));
}

TEST_CASE("product form of periodic characters") {
    auto s3 = table("S3");
    ClassFunction reg(s3.classes, {Cyclotomic(6), Cyclotomic(0), Cyclotomic(0)});
    REQUIRE(is_periodic(reg));
    auto pf = product_form(reg);
    for (int c = 0; c < 3; ++c) {
        auto series = product_form_series(pf, c, 8);
        auto direct = lambda_values_at_class(reg, c, 8);
        CHECK(series == direct);
    }
    auto a5 = table("A5");
    CHECK_FALSE(is_periodic(irr(a5, "chi4")));
    CHECK_THROWS_AS(product_form(irr(a5, "chi4")), NotPeriodic);
}

TEST_CASE("lambda_t and S_t are additive on random virtual characters") {
    std::mt19937 rng(20240917);
    const int m = 8;
    for (const auto& fp : sample_builtins()) {
        auto ct = get_group(fp);
        INFO(fp.to_string());
        for (int trial = 0; trial < 100; ++trial) {
            auto a = random_virtual(ct, rng), b = random_virtual(ct, rng);
            auto sa = sym_seq(a, m), sb = sym_seq(b, m), sab = sym_seq(a + b, m);
            bool ok = true;
            for (int n = 0; n <= m && ok; ++n) {
                ClassFunction lam = ClassFunction::zero(ct.classes), sym = ClassFunction::zero(ct.classes);
                for (int i = 0; i <= n; ++i) {
                    lam += sa.lambda(i) * sb.lambda(n - i);
                    sym += sa.sym(i) * sb.sym(n - i);
                }
                ok = lam == sab.lambda(n) && sym == sab.sym(n);
            }
            CHECK(ok);
        }
    }
}
