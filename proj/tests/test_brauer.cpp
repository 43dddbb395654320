#include "k3br/algebra/poly_text.hpp"
#include "k3br/brauer/certificate_io.hpp"
#include "k3br/brauer/cover.hpp"
#include "k3br/brauer/evaluation.hpp"
#include "k3br/brauer/obstruction.hpp"
#include "k3br/brauer/residue.hpp"

#include <doctest.h>

using namespace k3br;

namespace {

const Hypersurface& Y() {
    static const Hypersurface surface = Hypersurface::k3_quartic();
    return surface;
}

ModPoint p2(unsigned k) { return hensel_lift(Y(), ModPoint{2, 3, {1, 2, 1, 2}}, k, 3); }

FactoredFunction F(const char* text) { return FactoredFunction::parse(text); }

}  // namespace

TEST_SUITE("brauer") {

TEST_CASE("factored functions") {
    const FactoredFunction a = F("1 * (x*y*z + x*w^2 + z^3) * (x)^-3");
    CHECK(a.degree() == 0);
    CHECK(FactoredFunction::parse(a.to_string()) == a);
    const FactoredFunction b = F("-1 * (z) * (x)^-1");
    CHECK((b * b.inverse()) == FactoredFunction(1));
    CHECK((b * b).to_string() == "1 * (x)^-2 * (z)^2");
    // Scalars move into the constant: (2x) = 2 * (x).
    CHECK(FactoredFunction::of(parse_poly("2*x")) == FactoredFunction(2) * FactoredFunction::of(parse_poly("x")));
    CHECK(a.evaluate({1, 0, 1, 0}) == 1);
    CHECK_THROWS_AS(b.evaluate({0, 1, 1, 0}), std::domain_error);
    CHECK_THROWS_AS(F("(x"), ParseError);
    CHECK_THROWS_AS(QuaternionClass(F("1 * (x)"), b), std::invalid_argument);
}

TEST_CASE("the five residues are trivial by ideal membership") {
    const QuaternionClass cls = QuaternionClass::k3_class();
    const auto certs = k3_certificates();
    REQUIRE(certs.size() == 5);
    for (const auto& cert : certs) {
        CAPTURE(cert.name);
        const ResidueResult r = residue_check(cls, cert);
        CHECK(r.verdict == ResidueVerdict::trivial);
        CHECK(r.method == "member");
        CHECK_FALSE(r.sampling.has_value());
    }
    CHECK(unramified_check(cls, certs));
}

TEST_CASE("a constant first argument kills every residue") {
    const QuaternionClass cls(FactoredFunction(1), F("-1 * (z) * (x)^-1"));
    auto certs = k3_certificates();
    for (auto& cert : certs) {
        cert.nu_a = 0;
        cert.witness = FactoredFunction(1);
    }
    CHECK(unramified_check(cls, certs));
}

TEST_CASE("a misconfigured class is rejected") {
    const QuaternionClass bad(F("1 * (x*y*z + x*w^2 + z^3) * (x)^-2 * (y)^-1"), F("-1 * (z) * (x)^-1"));
    const auto certs = k3_certificates();
    CHECK_THROWS_AS(residue_check(bad, certs[0]), CertificateError);
    const QuaternionClass flipped(F("-1 * (x*y*z + x*w^2 + z^3) * (x)^-3"), F("-1 * (z) * (x)^-1"));
    CHECK(residue_check(flipped, certs[1]).verdict != ResidueVerdict::trivial);
}

TEST_CASE("certificate claims are checked") {
    auto cert = k3_certificates()[3];
    cert.nu_a = 2;
    CHECK_THROWS_AS(residue_check(QuaternionClass::k3_class(), cert), CertificateError);
    auto undefined = k3_certificates()[3];
    undefined.witness = F("1 * (y) * (x)^-1");  // y vanishes on D4
    CHECK_THROWS_AS(residue_check(QuaternionClass::k3_class(), undefined), std::exception);
}

TEST_CASE("golden certificate file") {
    const auto builtin = k3_certificates();
    const auto loaded = load_certificates(std::string(K3BR_DATA_DIR) + "/certificates/k3.cert");
    CHECK(format_certificates(loaded) == format_certificates(builtin));
    for (const auto& cert : loaded) CHECK(residue_check(QuaternionClass::k3_class(), cert).verdict == ResidueVerdict::trivial);
    CHECK(format_certificates(parse_certificates(format_certificates(builtin))) == format_certificates(builtin));
    try {
        parse_certificates("certificate D9\ngen x\nnu_a one\nend\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("evaluation at the two 2-adic points") {
    const QuaternionClass cls = QuaternionClass::k3_class();
    const EvalRecord r1 = eval_at(cls, ModPoint{2, 20, {1, 0, 1, 0}});
    CHECK(r1.invariant.is_zero());
    CHECK(r1.a_value->unit() == 1);
    const EvalRecord r2 = eval_at(cls, p2(32));
    CHECK(r2.invariant == BrInvariant::half());
    CHECK(r2.a_value->valuation() == 0);
    CHECK(mod(r2.a_value->unit(), 8) == 7);
    // Frozen 2-adic digits of f(P2) for the lift solved in w.
    CHECK(mod(r2.a_value->unit(), BigInt(1) << 20) == 181927);
    const EvalRecord exact = eval_at_rational(cls, {1, 0, 1, 0}, Place::prime(2));
    CHECK(exact.invariant.is_zero());
    CHECK(*exact.a_exact == 1);
    CHECK(*exact.b_exact == -1);
}

TEST_CASE("evaluation is invariant under unit rescaling and square factors") {
    const QuaternionClass cls = QuaternionClass::k3_class();
    const ModPoint pt = p2(40);
    ModPoint scaled = pt;
    for (auto& c : scaled.coords) c = mod(BigInt(c * 3), pt.modulus());
    CHECK(eval_at(cls, scaled).invariant == eval_at(cls, pt).invariant);
    const QuaternionClass squared(cls.a() * F("1 * (y)^2 * (x)^-2"), cls.b());
    CHECK(eval_at(squared, pt).invariant == eval_at(cls, pt).invariant);
    // (a, b) = (a, -ab).
    const QuaternionClass twisted(cls.a(), cls.a() * cls.b() * FactoredFunction(-1));
    CHECK(eval_at(twisted, pt).invariant == eval_at(cls, pt).invariant);
    CHECK(eval_at(twisted, ModPoint{2, 20, {1, 0, 1, 0}}).invariant.is_zero());
}

TEST_CASE("vanishing arguments") {
    const QuaternionClass cls = QuaternionClass::k3_class();
    // (1:-1:0:1) lies on the surface with b = -z/x = 0.
    const ModPoint on_d{3, 12, {1, mod(BigInt(-1), BigInt(531441)), 0, 1}};
    REQUIRE(lies_on(Y(), on_d));
    CHECK_THROWS_AS(eval_at(cls, on_d), ArgumentVanishes);
    const EvalRecord near = eval_stabilized(cls, Y(), on_d.reduce(1), 17);
    CHECK(near.method == EvalMethod::stabilized);
    CHECK(near.stable_levels >= 5);
    CHECK(near.invariant.is_zero());
}

TEST_CASE("eval tables at 2") {
    const QuaternionClass cls = QuaternionClass::k3_class();
    const EvalTable mod4 = eval_table(cls, Y(), 2, 2, 10, 20, 1, 1);
    CHECK(mod4.rows.size() == 40);
    CHECK(mod4.all_singletons());
    CHECK(mod4.total_errors() == 0);
    const EvalTable mod2 = eval_table(cls, Y(), 2, 1, 40, 20, 1, 1);
    bool found = false;
    for (const auto& row : mod2.rows)
        if (row.cls == ModPoint{2, 1, {1, 0, 1, 0}}) {
            found = true;
            CHECK(row.invariants.size() == 2);
        }
    CHECK(found);
    CHECK_THROWS_AS(eval_table(cls, Y(), 2, 2, 10, 4, 1), std::invalid_argument);
}

TEST_CASE("odd primes and the real place give invariant 0") {
    const QuaternionClass cls = QuaternionClass::k3_class();
    for (unsigned long p : {3ul, 5ul, 7ul, 17ul}) {
        const SweepResult s = random_point_sweep(cls, Y(), p, 30, 24, 4);
        CHECK(s.errors == 0);
        CHECK(s.records.size() == 30);
        CHECK(s.invariants() == std::set{BrInvariant::zero()});
    }
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const EvalRecord r = eval_real_sample(cls, Y(), seed);
        CHECK(r.symbol == 1);
        if (r.b_sign < 0) CHECK(r.a_sign > 0);
    }
}

TEST_CASE("reciprocity at the rational point") {
    for (const QuaternionClass& cls :
         {QuaternionClass::k3_class(), QuaternionClass(F("-1 * (y + z)^2 * (x)^-2"), F("-1 * (z) * (x)^-1"))}) {
        BrInvariant sum = BrInvariant::zero();
        for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) sum = sum + eval_at_rational(cls, {1, 0, 1, 0}, Place::prime(p)).invariant;
        sum = sum + eval_at_rational(cls, {1, 0, 1, 0}, Place::infinity()).invariant;
        CHECK(sum.is_zero());
    }
}

TEST_CASE("obstruction report") {
    const QuaternionClass cls = QuaternionClass::k3_class();
    Evidence ev;
    ev.local.push_back(eval_at(cls, ModPoint{2, 20, {1, 0, 1, 0}}));
    CHECK_THROWS_AS(obstruction_report(cls, ev), InsufficientEvidence);
    ev.local.push_back(eval_at(cls, p2(20)));
    const auto sweep = random_point_sweep(cls, Y(), 3, 10, 16, 2);
    ev.local.insert(ev.local.end(), sweep.records.begin(), sweep.records.end());
    for (long p : {2L, 3L}) ev.rational_point.push_back(eval_at_rational(cls, {1, 0, 1, 0}, Place::prime(p)));
    ev.rational_point.push_back(eval_at_rational(cls, {1, 0, 1, 0}, Place::infinity()));
    const ObstructionReport rep = obstruction_report(cls, ev);
    CHECK(rep.verdict == ObstructionVerdict::obstructed);
    CHECK(rep.summary() == "obstructed at 2");
    CHECK(rep.reciprocity_ok());
    CHECK(rep.constant_places.at(Place::prime(3)).is_zero());
}

TEST_CASE("components cover the boundary sections") {
    const auto certs = k3_certificates();
    const auto gens = [&](int i) { return certs[i].divisor_gens; };
    const std::vector<unsigned long> qs{2, 4, 8};
    CHECK(component_cover_check(Y(), parse_poly("x"), {gens(0), gens(1)}, qs, 100, 1).ok());
    CHECK(component_cover_check(Y(), parse_poly("z"), {gens(0), gens(2)}, qs, 100, 1).ok());
    CHECK(component_cover_check(Y(), parse_poly("z^3 + w^2*x + x*y*z"), {gens(0), gens(3), gens(4)}, qs, 100, 1).ok());
    const CoverReport missing = component_cover_check(Y(), parse_poly("x"), {gens(0)}, qs, 100, 1);
    CHECK_FALSE(missing.ok());
}

}  // TEST_SUITE
