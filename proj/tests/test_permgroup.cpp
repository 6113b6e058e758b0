// Permutations, group enumeration, conjugacy classes with power maps, and
// the regular and natural characters.

#include "lambdachar/builtins.hpp"
#include "lambdachar/errors.hpp"
#include "lambdachar/permgroup.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>

using namespace lambdachar;

namespace {

GeneratedGroup from_cycles(const std::vector<std::string>& gens) {
    int degree = 1;
    for (const auto& g : gens) degree = std::max(degree, Permutation::max_point(g));
    std::vector<Permutation> perms;
    for (const auto& g : gens) perms.push_back(Permutation::parse_cycles(g, degree));
    return enumerate(perms);
}

} // namespace

TEST_CASE("cycle notation and composition") {
    auto p = Permutation::parse_cycles("(0 1 2)", 4);
    CHECK(p.degree() == 4);
    CHECK(p(0) == 1);
    CHECK(p(2) == 0);
    CHECK(p(3) == 3);
    CHECK(p.order() == 3);
    CHECK(p.fixed_points() == 1);
    CHECK(p.to_cycles() == "(0 1 2)");
    CHECK(p.inverse().to_cycles() == "(0 2 1)");
    CHECK(p.pow(3) == Permutation::identity(4));
    CHECK(p.pow(-1) == p.inverse());
    auto q = Permutation::parse_cycles("(0 1)", 4);
    // q acts first
    CHECK((p * q)(0) == p(q(0)));
    CHECK(Permutation::parse_cycles("()", 3) == Permutation::identity(3));
    CHECK(Permutation::max_point("(0 5)(2 3)") == 6);
    CHECK_THROWS_AS(Permutation::parse_cycles("(0 1 0)", 3), InputError);
    CHECK_THROWS_AS(Permutation::parse_cycles("(0 1", 3), InputError);
    CHECK_THROWS_AS(Permutation::parse_cycles("(0 7)", 3), InputError);
    CHECK_THROWS_AS(Permutation(std::vector<int>{0, 0}), InputError);
}

TEST_CASE("enumeration is deterministic and capped") {
    auto s4 = from_cycles({"(0 1)", "(0 1 2 3)"});
    CHECK(s4.order() == 24);
    CHECK(s4.elements.front() == Permutation::identity(4));
    auto again = from_cycles({"(0 1)", "(0 1 2 3)"});
    CHECK(again.elements == s4.elements);
    CHECK(s4.index_of(s4.elements[5]) == 5);
    std::vector<Permutation> s8{Permutation::parse_cycles("(0 1)", 8), Permutation::parse_cycles("(0 1 2 3 4 5 6 7)", 8)};
    CHECK_THROWS_AS(enumerate(s8, 1000), CapExceeded);
}

TEST_CASE("conjugacy classes of S4 and A5") {
    auto s4 = from_cycles({"(0 1)", "(0 1 2 3)"});
    auto cc = conjugacy_classes(s4);
    const ClassData& cd = *cc.data;
    CHECK(check_class_data(cd).empty());
    CHECK(cd.class_count() == 5);
    CHECK(cd.exponent == 12);
    CHECK(cd.sizes[0] == 1);
    long total = 0;
    for (long s : cd.sizes) total += s;
    CHECK(total == 24);
    for (int c = 0; c < cd.class_count(); ++c)
        CHECK(s4.elements[static_cast<std::size_t>(cc.representatives[static_cast<std::size_t>(c)])].order() ==
              cd.rep_orders[static_cast<std::size_t>(c)]);

    auto a5 = from_cycles({"(0 1 2 3 4)", "(0 1 2)"});
    auto ca = conjugacy_classes(a5);
    CHECK(ca.data->class_count() == 5);
    std::vector<long> sizes = ca.data->sizes;
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<long>{1, 12, 12, 15, 20});
    // the two classes of 5-cycles are swapped by squaring
    int five = -1;
    for (int c = 0; c < 5; ++c)
        if (ca.data->rep_orders[static_cast<std::size_t>(c)] == 5) five = c;
    REQUIRE(five >= 0);
    CHECK(power_map(*ca.data, 2)[static_cast<std::size_t>(five)] != five);
}

TEST_CASE("regular and natural characters") {
    auto s3 = from_cycles({"(0 1)", "(0 1 2)"});
    auto cc = conjugacy_classes(s3);
    auto sc = standard_characters(s3, cc);
    CHECK(sc.regular[0] == Cyclotomic(6));
    for (int c = 1; c < cc.data->class_count(); ++c) CHECK(sc.regular[c].is_zero());
    CHECK(sc.natural[0] == Cyclotomic(3));
    for (int c = 0; c < cc.data->class_count(); ++c) {
        auto rep = s3.elements[static_cast<std::size_t>(cc.representatives[static_cast<std::size_t>(c)])];
        CHECK(sc.natural[c] == Cyclotomic(rep.fixed_points()));
    }
}

TEST_CASE("class data matches builtins up to relabeling") {
    auto s4t = get_group(FamilyParams::parse("S4"));
    auto model = conjugacy_classes(from_cycles({"(0 1)", "(0 1 2 3)"}));
    auto m = match_class_data(*s4t.classes, *model.data);
    REQUIRE(m.has_value());
    CHECK(m->at(0) == 0);
    auto a4t = get_group(FamilyParams::parse("A4"));
    CHECK_FALSE(match_class_data(*a4t.classes, *model.data).has_value());
    // D8 and Q8 share sizes but not element orders
    auto q8 = get_group(FamilyParams::parse("Q4n:2"));
    auto d8 = conjugacy_classes(from_cycles({"(0 1 2 3)", "(0 2)"}));
    CHECK_FALSE(match_class_data(*q8.classes, *d8.data).has_value());
    CHECK(match_class_data(*get_group(FamilyParams::parse("D2n:4")).classes, *d8.data).has_value());
}
