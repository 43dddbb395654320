#include "k3br/charp/f2poly.hpp"
#include "k3br/charp/forms.hpp"

#include <doctest.h>

#include <random>

using namespace k3br;

namespace {

F2Poly random_f2(std::mt19937_64& rng, unsigned bits) { return F2Poly::from_bits(rng() & ((1ULL << bits) - 1)); }

F2BiPoly random_bi(std::mt19937_64& rng) {
    F2BiPoly out;
    for (unsigned i = 0; i < 3; ++i) out = out + F2BiPoly(random_f2(rng, 4)).shifted_u(i);
    return out;
}

/// Polynomial coefficients of low degree keep inverses in F small.
FnFieldElem random_elem(std::mt19937_64& rng, const FunctionField& F) {
    std::vector<F2Rat> c;
    for (unsigned i = 0; i < F.degree(); ++i)
        c.emplace_back(F2BiPoly(random_f2(rng, 2)) + F2BiPoly(random_f2(rng, 2)).shifted_u(1));
    return FnFieldElem(F, c);
}

}  // namespace

TEST_SUITE("charp") {

TEST_CASE("F2[v] division and gcd") {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 200; ++i) {
        const F2Poly a = random_f2(rng, 20), b = random_f2(rng, 9);
        if (b.is_zero()) continue;
        const auto [q, r] = divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
        const F2Poly g = gcd(a * b, b * b);  // b * gcd(a, b)
        CHECK(divmod(a * b, g).rem.is_zero());
        CHECK(divmod(b * b, g).rem.is_zero());
        CHECK(divmod(g, b).rem.is_zero());
        CHECK(exact_div(a * b, b) == a);
        // Frobenius: (a + b)^2 = a^2 + b^2 and d(a^2) = 0.
        CHECK((a + b) * (a + b) == a * a + b * b);
        CHECK((a * a).derivative().is_zero());
    }
}

TEST_CASE("F2(u, v) fractions") {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 60; ++i) {
        F2BiPoly d1 = random_bi(rng), d2 = random_bi(rng);
        if (d1.is_zero() || d2.is_zero()) continue;
        const F2Rat a(random_bi(rng), d1), b(random_bi(rng), d2);
        CHECK(a + b == b + a);
        CHECK((a + b) + b == a);
        CHECK((a * b).derivative_u() == a.derivative_u() * b + a * b.derivative_u());
        CHECK((a * b).derivative_v() == a.derivative_v() * b + a * b.derivative_v());
        if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    }
}

TEST_CASE("function field arithmetic and derivations") {
    const FunctionField& F = k3_function_field();
    CHECK(F.degree() == 3);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 12; ++i) {
        const FnFieldElem a = random_elem(rng, F), b = random_elem(rng, F), c = random_elem(rng, F);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a * b).d_du() == a.d_du() * b + a * b.d_du());
        CHECK((a * b).d_dv() == a.d_dv() * b + a * b.d_dv());
        CHECK(differential(a * a).is_zero());
        if (!a.is_zero()) {
            CHECK((a * a.inverse()) == F.one());
            if (!b.is_zero()) CHECK(dlog(a * b) == dlog(a) + dlog(b));
        }
        CHECK(exterior_derivative(differential(a)).is_zero());
    }
    CHECK_THROWS_AS(F.zero().inverse(), ZeroDivisor);
}

TEST_CASE("s is a root of the defining equation") {
    const FunctionField& F = k3_function_field();
    const HomogPoly G = Hypersurface::k3_quartic().equation();
    CHECK(F.from_poly(G).is_zero());
    // g = G(1, u, v, s) is already monic in s; implicit differentiation gives g_u + g_s ds/du = 0.
    CHECK(F.ds_du() * F.g_s() == F.from_poly(G.partial(1)));
    CHECK(F.ds_dv() * F.g_s() == F.from_poly(G.partial(2)));
    CHECK(F.g_s() == F.from_poly(G.partial(3)));
}

TEST_CASE("the global 2-form is logarithmic") {
    CHECK(lemma3_check());
    const FunctionField& F = k3_function_field();
    const HomogPoly G = Hypersurface::k3_quartic().equation();
    const auto [eta1, eta2] = log_form_functions(F, G);
    const LogFormSides sides = log_form_sides(F, G, eta1, eta2);
    CHECK(sides.dlog_wedge == sides.omega);
    CHECK(sides.d_wedge == sides.eta2_du_dv);
    CHECK_FALSE(sides.omega.is_zero());
}

TEST_CASE("chart 2-forms glue") {
    unsigned checked = 0;
    for (unsigned p = 0; p < 4; ++p)
        for (unsigned q = 0; q < 4; ++q) {
            if (p == q) continue;
            const GlueResult r = chart_glue_check({0, 3}, {p, q});
            if (!r.checked) continue;
            ++checked;
            CAPTURE(p);
            CAPTURE(q);
            CHECK(r.equal);
        }
    CHECK(checked == 12);
}

TEST_CASE("ordinary reduction") {
    CHECK(is_ordinary(Hypersurface::k3_quartic()));
}

}  // TEST_SUITE
