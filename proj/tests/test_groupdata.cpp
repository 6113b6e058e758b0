// Class skeletons, class functions, inner products, decomposition and
// table validation.

#include "lambdachar/builtins.hpp"
#include "lambdachar/errors.hpp"
#include "lambdachar/group.hpp"

#include <catch_amalgamated.hpp>

using namespace lambdachar;

namespace {

CharacterTable table(const char* sel) { return get_group(FamilyParams::parse(sel)); }

bool has_failure(const ValidationReport& r, const std::string& name) {
    for (const auto& c : r.checks)
        if (c.name == name && !c.ok) return true;
    return false;
}

// Copy of ct with irreducible j replaced.
CharacterTable with_row(const CharacterTable& ct, int j, std::vector<Cyclotomic> values) {
    CharacterTable out = ct;
    out.irreducibles[static_cast<std::size_t>(j)] = ClassFunction(ct.classes, std::move(values));
    return out;
}

} // namespace

TEST_CASE("class data of S4") {
    auto s4 = table("S4");
    const ClassData& cd = *s4.classes;
    CHECK(check_class_data(cd).empty());
    CHECK(cd.group_order == 24);
    CHECK(cd.exponent == 12);
    CHECK(cd.index_of("C3") == 2);
    CHECK(cd.index_of("nope") == -1);
    // squares of 4-cycles are double transpositions
    CHECK(power_map(cd, 2)[3] == 4);
    CHECK(power_map(cd, 12) == std::vector<int>{0, 0, 0, 0, 0});
    CHECK(power_map(cd, 13) == power_map(cd, 1));
    CHECK(power_map(cd, -1) == cd.inverse_class);
    std::vector<bool> v{true, false, false, false, true};
    CHECK(order_modulo(cd, 3, v) == 2);
    CHECK(order_modulo(cd, 2, v) == 3);
    CHECK(order_modulo(cd, 4, v) == 1);
}

TEST_CASE("class data invariants reject broken skeletons") {
    ClassData cd = *table("S3").classes;
    CHECK(check_class_data(cd).empty());
    ClassData bad = cd;
    bad.sizes[1] = 2;
    CHECK_FALSE(check_class_data(bad).empty());
    bad = cd;
    bad.inverse_class[2] = 1;
    CHECK_FALSE(check_class_data(bad).empty());
    bad = cd;
    bad.prime_power_maps[2][1] = 1;
    CHECK_FALSE(check_class_data(bad).empty());
}

TEST_CASE("primes and factors") {
    CHECK(primes_up_to(12) == std::vector<int>{2, 3, 5, 7, 11});
    CHECK(primes_up_to(1).empty());
    CHECK(prime_factors(60) == std::vector<long>{2, 3, 5});
}

TEST_CASE("class function arithmetic and inner products") {
    auto s3 = table("S3");
    auto chi2 = s3.irr(1), chi3 = s3.irr(2);
    CHECK((chi3 * chi3).to_string() == "(4, 0, 1)");
    CHECK(inner_product(chi3 * chi3, s3.irr(0)) == Cyclotomic(1));
    CHECK(inner_product(chi3, chi3) == Cyclotomic(1));
    CHECK(inner_product(chi2, chi3) == Cyclotomic(0));
    CHECK((chi3 - chi3).is_zero());
    auto s4 = table("S4");
    CHECK_THROWS_AS(chi3 + s4.irr(0), MismatchedClasses);
    CHECK_THROWS_AS(inner_product(chi3, s4.irr(0)), MismatchedClasses);
}

TEST_CASE("decompose and combine are inverse") {
    auto a5 = table("A5");
    auto f = a5.irr(3) * a5.irr(4);
    auto m = decompose(f, a5);
    CHECK(m.is_integral());
    CHECK(m.is_nonnegative());
    CHECK(combine(a5, m) == f);
    CHECK(format_decomposition(m, a5) == "chi2 + chi3");
    auto g21 = table("G21");
    auto v = g21.irr(3) - Cyclotomic(Rational(1, 2)) * g21.irr(0);
    auto mv = decompose(v, g21);
    CHECK_FALSE(mv.is_integral());
    CHECK(format_decomposition(mv, g21) == "-1/2*chi1 + chi4");
}

TEST_CASE("non-rational multiplicities are rejected") {
    auto g21 = table("G21");
    // a class function that is not a rational combination of irreducibles
    std::vector<Cyclotomic> vals(static_cast<std::size_t>(g21.classes->class_count()), Cyclotomic(0));
    vals[0] = Cyclotomic::root(7, 1);
    CHECK_THROWS_AS(decompose(ClassFunction(g21.classes, vals), g21), NonRationalMultiplicity);
}

TEST_CASE("validation passes on builtins and names corruptions") {
    for (const auto& fp : sample_builtins()) CHECK(validate_table(get_group(fp)).ok());
    auto s4 = table("S4");
    auto broken = with_row(s4, 1, {1, -1, 1, 1, 1});
    auto r = validate_table(broken);
    CHECK_FALSE(r.ok());
    CHECK(has_failure(r, "row orthogonality"));
    CHECK(has_failure(r, "column orthogonality"));
    auto g21 = table("G21");
    // swapping the values on a class and its inverse breaks inverse/conjugate symmetry
    auto row = g21.irr(3).values();
    std::swap(row[1], row[2]);
    std::swap(row[3], row[4]);
    auto conj_broken = with_row(g21, 3, row);
    auto r2 = validate_table(conj_broken);
    CHECK_FALSE(r2.ok());
    auto degree_broken = with_row(s4, 4, {3, 0, -1, 0, 2});
    CHECK(has_failure(validate_table(degree_broken), "sum of squared degrees equals |G|"));
}

TEST_CASE("coprime power maps are derived from the table") {
    auto a5 = table("A5");
    ClassData cd = *a5.classes;
    ClassData stripped = cd;
    for (auto it = stripped.prime_power_maps.begin(); it != stripped.prime_power_maps.end();)
        it = cd.exponent % it->first ? stripped.prime_power_maps.erase(it) : std::next(it);
    REQUIRE(stripped.prime_power_maps.size() < cd.prime_power_maps.size());
    std::vector<std::vector<Cyclotomic>> rows;
    for (int j = 0; j < a5.size(); ++j) rows.push_back(a5.irr(j).values());
    derive_coprime_power_maps(stripped, rows);
    CHECK(stripped.prime_power_maps == cd.prime_power_maps);
}
