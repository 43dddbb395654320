#include "k3br/geometry/enumeration.hpp"
#include "k3br/geometry/hensel.hpp"
#include "k3br/geometry/real_points.hpp"
#include "k3br/geometry/univariate.hpp"

#include "k3br/algebra/poly_text.hpp"

#include <doctest.h>

using namespace k3br;

namespace {

const Hypersurface& Y() {
    static const Hypersurface surface = Hypersurface::k3_quartic();
    return surface;
}

std::vector<std::string> names(const std::vector<FqPoint>& pts) {
    std::vector<std::string> out;
    for (const auto& pt : pts) out.push_back(pt.to_string());
    return out;
}

}  // namespace

TEST_SUITE("geometry") {

TEST_CASE("bad fibers have one singular point that does not lift mod p^2") {
    const std::pair<unsigned long, const char*> expected[] = {{3, "(1:2:1:2)"}, {5, "(1:1:1:1)"}, {17, "(1:13:16:4)"}};
    for (const auto& [p, point] : expected) {
        CAPTURE(p);
        const auto sing = singular_points(Y(), p);
        REQUIRE(sing.size() == 1);
        CHECK(sing[0].to_string() == point);
        CHECK(lifts_mod_p2(Y(), sing[0]) == 0);
    }
}

TEST_CASE("singular points agree with a direct gradient test") {
    for (unsigned long p : {3ul, 5ul, 7ul}) {
        std::vector<FqPoint> direct;
        for (const auto& pt : enumerate_points(Y(), p)) {
            bool all = true;
            for (unsigned v = 0; v < 4; ++v) all = all && evaluate_at(Y().partial(v), pt) == 0;
            if (all) direct.push_back(pt);
        }
        CHECK(names(singular_points(Y(), p)) == names(direct));
    }
}

TEST_CASE("bounded smoothness scans") {
    for (unsigned long p : {7ul, 11ul, 13ul}) CHECK(smoothness_scan(Y(), p, 2).no_singular_points());
    const auto two = smoothness_scan(Y(), 2, 3);
    CHECK(two.no_singular_points());
    REQUIRE(two.levels.size() == 3);
    CHECK(two.levels[1].points == 34);
    CHECK(two.levels[2].points == 106);
    // The rational singularity at 3 reappears over F_9.
    const auto three = smoothness_scan(Y(), 3, 2);
    CHECK(three.levels[0].singular.size() == 1);
    CHECK(three.levels[1].singular.size() == 1);
}

TEST_CASE("is_smooth_point rejects points off the surface") {
    const FiniteField& F = FiniteField::of_order(3);
    CHECK_THROWS_AS(is_smooth_point(Y(), normalize(F, {1, 1, 0, 0})), std::invalid_argument);
}

TEST_CASE("Hensel lifts reduce to their input when the derivative is a unit") {
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul}) {
        CAPTURE(p);
        for (const auto& pt : smooth_points(Y(), p)) {
            const ModPoint base = to_mod_point(pt);
            const ModPoint lifted = hensel_lift(Y(), base, 24);
            CHECK(lifted.precision == 24);
            CHECK(lies_on(Y(), lifted));
            CHECK(lifted.reduce(1) == base);
            // Lifting further refines the same point.
            CHECK(hensel_lift(Y(), lifted, 40).reduce(24) == lifted);
        }
    }
}

TEST_CASE("lifting a point mod 8 along w") {
    const ModPoint pt{2, 3, {1, 2, 1, 2}};
    REQUIRE(lies_on(Y(), pt));
    const ModPoint lifted = hensel_lift(Y(), pt, 32, 3);
    CHECK(lies_on(Y(), lifted));
    CHECK(lifted.coords[0] == 1);
    CHECK(lifted.coords[1] == 2);
    CHECK(lifted.coords[2] == 1);
    // val g'(w) = 1 here, so the root is only congruent to 2 modulo 4.
    CHECK(mod(lifted.coords[3], 4) == 2);
}

TEST_CASE("singular points do not lift") {
    CHECK_THROWS_AS(hensel_lift(Y(), ModPoint{5, 1, {1, 1, 1, 1}}, 10), HenselFailure);
    CHECK_FALSE(choose_free_variable(Y(), ModPoint{5, 1, {1, 1, 1, 1}}).has_value());
}

TEST_CASE("lift samples are consistent across precisions and reproducible") {
    const ModPoint cls{3, 1, {1, 0, 0, 0}};
    REQUIRE(lies_on(Y(), cls));
    LiftSampler a(Y(), cls, 99), b(Y(), cls, 99);
    for (int i = 0; i < 20; ++i) {
        const auto sa = a.draw();
        const auto sb = b.draw();
        const ModPoint hi = sa.at(60);
        CHECK(lies_on(Y(), hi));
        CHECK(hi.reduce(20) == sa.at(20));
        CHECK(hi.reduce(1) == cls);
        CHECK(sb.at(60) == hi);
    }
}

TEST_CASE("smooth classes mod 4") {
    CHECK(smooth_points_mod(Y(), 2, 1).size() == 10);
    const auto mod4 = smooth_points_mod(Y(), 2, 2);
    CHECK(mod4.size() == 40);
    for (const auto& pt : mod4) CHECK(lies_on(Y(), pt));
    CHECK(random_Zp_point(Y(), 13, 16, 5) == random_Zp_point(Y(), 13, 16, 5));
    CHECK(lies_on(Y(), random_Zp_point(Y(), 13, 16, 5)));
}

TEST_CASE("real root isolation") {
    // (t^2 - 2)(t - 1)(t + 3)^2
    const UniPoly p = UniPoly({-2, 0, 1}) * UniPoly({-1, 1}) * UniPoly({3, 1}) * UniPoly({3, 1});
    const auto roots = isolate_real_roots(p);
    REQUIRE(roots.size() == 4);
    CHECK(roots[0].contains(-3));
    CHECK(roots[2].contains(1));
    const UniPoly sq = squarefree_part(p);
    for (const auto& iv : roots) {
        if (iv.is_point()) {
            CHECK(p(iv.lo) == 0);
            continue;
        }
        CHECK(sq.sign_at(iv.lo) * sq.sign_at(iv.hi) < 0);
        const Interval finer = refine_root(sq, iv);
        CHECK(finer.width() * 2 == iv.width());
    }
    CHECK(sturm_chain(sq).size() >= 2);
    CHECK(sign_variations(sturm_chain(sq), -100) - sign_variations(sturm_chain(sq), 100) == 4);
}

TEST_CASE("interval arithmetic encloses exact values") {
    const UniPoly p({1, -3, 0, 2});
    const Interval x{Rational(1, 3), Rational(1, 2)};
    const Interval v = evaluate(p, x);
    for (int i = 0; i <= 6; ++i) CHECK(v.contains(p(x.lo + x.width() * Rational(i, 6))));
}

TEST_CASE("real fibers and certified samples") {
    // G(1, 1, 1, w) = w^3 + 2w + 2 has one real root in (-1, 0).
    const auto fiber = real_fiber(Y(), 1, 1, 1);
    REQUIRE(fiber.size() == 1);
    const UniPoly g111({2, 2, 0, 1});
    Interval root = fiber[0];
    while (root.width() > Rational(1, 100000)) root = refine_root(g111, root);
    CHECK(root.lo > Rational(-77093, 100000));
    CHECK(root.hi < Rational(-77090, 100000));
    const std::vector<HomogPoly> forms{parse_poly("x"), parse_poly("z"), parse_poly("z^3 + w^2*x + x*y*z")};
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const RealSample s = real_point_sample(Y(), forms, seed);
        CHECK(s.x > 0);
        CHECK(s.signs.size() == 3);
        CHECK(s.signs[0] == 1);
        const UniPoly g = restrict_to_line(Y().equation(), {s.x, s.y, s.z, 0}, 3);
        CHECK((s.w.is_point() ? g(s.w.lo) == 0 : g.sign_at(s.w.lo) * g.sign_at(s.w.hi) <= 0));
    }
}

}  // TEST_SUITE
