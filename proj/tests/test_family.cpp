#include "k3br/family/family.hpp"
#include "k3br/geometry/enumeration.hpp"

#include <doctest.h>

using namespace k3br;

namespace {

const ResidueResult& residue(const FamilyReport& rep, const std::string& name) {
    for (const auto& [n, r] : rep.residues)
        if (n == name) return r;
    throw std::logic_error("missing residue " + name);
}

}  // namespace

TEST_SUITE("family") {

TEST_CASE("the unit parameters give the base surface and class") {
    const FamilyParams unit;
    CHECK(family_surface(unit).equation() == Hypersurface::k3_quartic().equation());
    CHECK(family_class(unit).a() == QuaternionClass::k3_class().a());
    CHECK(family_class(unit).b() == QuaternionClass::k3_class().b());
    const FamilyReport rep = family_check(unit);
    CHECK(rep.passed());
    CHECK(rep.verdict == "obstructed");
    CHECK(*rep.f_p2_mod8 == 7);
}

TEST_CASE("square discriminants are obstructed") {
    for (const char* text : {"9,1,1,1,3", "1,1,9,1,7", "-1,-1,1,1,5", "3,5,15,1,-3"}) {
        CAPTURE(text);
        const FamilyParams params = FamilyParams::parse(text);
        REQUIRE(params.delta_is_square());
        const FamilyReport rep = family_check(params);
        CHECK(rep.passed());
        CHECK(rep.unramified);
        CHECK(rep.p1->invariant.is_zero());
        CHECK(rep.p2->invariant == BrInvariant::half());
        CHECK(*rep.f_p2_mod8 == mod(BigInt(7 * params.c), BigInt(8)));
    }
}

TEST_CASE("20 random square-discriminant members") {
    for (std::uint64_t seed = 100; seed < 120; ++seed) {
        const FamilyParams params = FamilyParams::random(seed, true);
        CAPTURE(params.to_string());
        CHECK(params.delta_is_square());
        const FamilyReport rep = family_check(params);
        CHECK(rep.passed());
        const FamilyPoints pts = family_points(params, 24);
        CHECK(lies_on(family_surface(params), pts.p1));
        CHECK(lies_on(family_surface(params), pts.p2));
        // Every member has the same reduction mod 2.
        CHECK(count_points(family_surface(params), 2) == 10);
    }
}

TEST_CASE("nonsquare discriminants ramify along D5 with class Delta") {
    const std::pair<const char*, long> cases[] = {{"1,1,1,3,1", 3}, {"3,3,1,3,5", 3}, {"-1,1,1,1,1", -1}, {"5,7,1,1,1", 35}};
    for (const auto& [text, kernel] : cases) {
        CAPTURE(text);
        const FamilyReport rep = family_check(FamilyParams::parse(text));
        CHECK(rep.passed());
        CHECK_FALSE(rep.unramified);
        CHECK(rep.delta_kernel == kernel);
        const ResidueResult& d5 = residue(rep, "D5");
        CHECK(d5.verdict == ResidueVerdict::nontrivial);
        CHECK(d5.delta == kernel);
        CHECK(d5.method == "member");
        for (const char* other : {"D1", "D2", "D3", "D4"}) CHECK(residue(rep, other).verdict == ResidueVerdict::trivial);
        CHECK(rep.verdict.find("ramified at D5") == 0);
    }
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const FamilyParams params = FamilyParams::random(seed, false);
        CHECK_FALSE(params.delta_is_square());
        CHECK(family_check(params).passed());
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(FamilyParams::parse("1,2,1,1,1"), std::invalid_argument);
    CHECK_THROWS_AS(FamilyParams::parse("1,1,1,1"), std::invalid_argument);
    CHECK_THROWS_AS(FamilyParams::parse("1,1,1,1,x"), std::invalid_argument);
    CHECK_THROWS_AS(FamilyParams::parse("1,1,1,1,1000001"), std::invalid_argument);
    CHECK(FamilyParams::parse("-3, 5, 7, 9, 11").to_string() == "-3,5,7,9,11");
    const FamilyParams p = FamilyParams::parse("3,3,1,3,5");
    CHECK(p.delta_decomposition() == std::pair<BigInt, BigInt>{3, 3});
}

}  // TEST_SUITE
