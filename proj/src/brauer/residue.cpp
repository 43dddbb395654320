#include "k3br/brauer/residue.hpp"
#include "k3br/algebra/factor.hpp"
#include "k3br/algebra/poly_text.hpp"
#include "k3br/algebra/sampling.hpp"

namespace k3br {

const char* to_string(ResidueVerdict v) {
    switch (v) {
        case ResidueVerdict::trivial: return "trivial";
        case ResidueVerdict::nontrivial: return "nontrivial";
        case ResidueVerdict::inconclusive: return "inconclusive";
    }
    return "?";
}

int certified_valuation(const ResidueCertificate& cert, const HomogPoly& factor) {
    const HomogPoly m = factor.monic();
    const std::span<const HomogPoly> gens(cert.divisor_gens);
    for (const auto& claim : cert.valuations) {
        if (!(claim.factor.monic() == m)) continue;
        if (claim.nu < 0)
            throw CertificateError(cert.name + ": negative valuation claimed for polynomial " + factor.to_string());
        if (claim.nu == 0) {
            if (normal_form(factor, gens).is_zero())
                throw CertificateError(cert.name + ": " + factor.to_string() + " is claimed nonvanishing but lies in I(D)");
        } else if (ideal_member(factor, gens) != Membership::member) {
            throw CertificateError(cert.name + ": " + factor.to_string() + " is claimed to vanish on D but is not in I(D)");
        }
        return claim.nu;
    }
    if (normal_form(factor, gens).is_zero())
        throw CertificateError(cert.name + ": " + factor.to_string() + " vanishes on D but has no valuation claim");
    return 0;
}

namespace {

int valuation_of(const ResidueCertificate& cert, const FactoredFunction& fn) {
    int v = 0;
    for (const auto& f : fn.factors()) v += f.exponent * certified_valuation(cert, f.poly);
    return v;
}

bool divides_constant(unsigned long p, const Rational& c) {
    const BigInt pb(p);
    return mpz_divisible_p(c.get_num_mpz_t(), pb.get_mpz_t()) || mpz_divisible_p(c.get_den_mpz_t(), pb.get_mpz_t());
}

SamplingEvidence sample_residue(const ResidueCertificate& cert, const FactoredFunction& residue,
                                const ResidueOptions& options) {
    SamplingEvidence ev;
    for (unsigned long q : options.sample_fields) {
        const auto [p, k] = prime_power(q);
        if (p == 0 || p == 2) continue;
        if (divides_constant(p, residue.constant()) || divides_constant(p, cert.delta)) continue;
        bool usable = true;
        for (const auto& g : cert.divisor_gens)
            for (const auto& [mono, c] : g.terms())
                if (divides_constant(p, c)) usable = false;
        for (const auto& f : residue.factors())
            for (const auto& [mono, c] : f.poly.terms())
                if (divides_constant(p, c)) usable = false;
        if (!usable) continue;
        const FiniteField& field = FiniteField::of_order(q);
        const auto pts = sample_variety_points(cert.divisor_gens, q, options.points_per_field, options.seed + q);
        bool used = false;
        for (const auto& pt : pts) {
            auto value = field.mul(field.from_rational(residue.constant()), field.inv(field.from_rational(cert.delta)));
            bool defined = true;
            for (const auto& f : residue.factors()) {
                const auto fv = evaluate_at(f.poly, pt);
                if (fv == 0) {
                    defined = false;
                    break;
                }
                const auto term = f.exponent > 0 ? field.pow(fv, f.exponent) : field.inv(field.pow(fv, -f.exponent));
                value = field.mul(value, term);
            }
            if (!defined) continue;
            used = true;
            ++ev.points;
            if (field.quadratic_character(value) == 1) ++ev.squares;
        }
        if (used) ev.fields.push_back(q);
    }
    return ev;
}

}  // namespace

ResidueResult residue_check(const QuaternionClass& cls, const ResidueCertificate& cert,
                            const ResidueOptions& options) {
    if (cert.divisor_gens.empty()) throw CertificateError(cert.name + ": no divisor generators");
    if (cert.delta == 0) throw CertificateError(cert.name + ": delta must be nonzero");
    if (cert.witness.degree() != 0) throw CertificateError(cert.name + ": witness must have degree 0");

    const int nu_a = valuation_of(cert, cls.a());
    const int nu_b = valuation_of(cert, cls.b());
    if (nu_a != cert.nu_a)
        throw CertificateError(cert.name + ": claimed v(a) = " + std::to_string(cert.nu_a) + " but the factor claims give " +
                               std::to_string(nu_a));
    if (nu_b != cert.nu_b)
        throw CertificateError(cert.name + ": claimed v(b) = " + std::to_string(cert.nu_b) + " but the factor claims give " +
                               std::to_string(nu_b));
    if (valuation_of(cert, cert.witness) != 0)
        throw WitnessUndefined(cert.name + ": witness " + cert.witness.to_string() + " has nonzero valuation on D");

    ResidueResult res;
    const Rational sign = (nu_a * nu_b) % 2 == 0 ? 1 : -1;
    res.residue = FactoredFunction(sign) * cls.a().pow(nu_b) * cls.b().pow(-nu_a);
    res.quotient = res.residue / (FactoredFunction(cert.delta) * cert.witness.pow(2));

    bool evaluable = true;
    for (const auto& f : res.quotient.factors())
        if (certified_valuation(cert, f.poly) != 0) {
            evaluable = false;
            res.detail = "factor " + f.poly.to_string() + " of the quotient vanishes on D";
        }

    if (evaluable) {
        const HomogPoly lhs = res.quotient.numerator() * res.quotient.constant();
        const HomogPoly rhs = res.quotient.denominator();
        if (ideal_member(lhs - rhs, cert.divisor_gens) == Membership::member) {
            res.method = "member";
            if (is_perfect_square(cert.delta)) {
                res.verdict = ResidueVerdict::trivial;
                res.delta = 1;
            } else {
                res.verdict = ResidueVerdict::nontrivial;
                res.delta = cert.delta;
            }
            return res;
        }
        res.detail = "remainder of kappa*N - D is nonzero";
    }
    res.verdict = ResidueVerdict::inconclusive;
    res.delta = cert.delta;
    res.sampling = sample_residue(cert, res.residue, options);
    return res;
}

bool unramified_check(const QuaternionClass& cls, const std::vector<ResidueCertificate>& certs,
                      const ResidueOptions& options) {
    for (const auto& c : certs)
        if (residue_check(cls, c, options).verdict != ResidueVerdict::trivial) return false;
    return true;
}

std::vector<ResidueCertificate> k3_certificates() {
    const auto P = [](const char* s) { return parse_poly(s); };
    const HomogPoly x = P("x"), y = P("y"), z = P("z"), w = P("w");
    const HomogPoly f = P("z^3 + w^2*x + x*y*z");
    const auto F = [](const HomogPoly& h, int e = 1) { return FactoredFunction::of(h, e); };
    std::vector<ResidueCertificate> out;
    out.push_back({"D1", {x, z}, -2, 0, {{x, 1}, {z, 1}, {f, 1}}, FactoredFunction(-1) * F(z) * F(x, -1), 1});
    out.push_back({"D2", {x, P("y^3 + z^2*w")}, -3, -1, {{x, 1}, {z, 0}, {f, 0}}, FactoredFunction(1), 1});
    out.push_back({"D3", {z, P("x^2*y + w^3")}, 0, 1, {{x, 0}, {z, 1}, {f, 0}, {w, 0}}, F(w) * F(x, -1), 1});
    out.push_back({"D4", {P("z^3 + x*w^2"), y}, 1, 0, {{x, 0}, {z, 0}, {f, 1}, {w, 0}}, F(z) * F(w, -1), 1});
    out.push_back({"D5", {P("y^3*z - x^2*z^2 + y^2*w^2"), P("x^3 + y^2*z"), P("x*y*z + z^3 + x*w^2")}, 1, 0,
                   {{x, 0}, {z, 0}, {f, 1}, {y, 0}}, F(y) * F(x, -1), 1});
    return out;
}

}  // namespace k3br
