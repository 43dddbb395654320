#include "k3br/family/family.hpp"
#include "k3br/algebra/factor.hpp"

#include <map>
#include <random>
#include <sstream>

namespace k3br {

namespace {

HomogPoly var(unsigned i) { return HomogPoly::variable(4, i); }
HomogPoly scaled(const HomogPoly& p, const BigInt& k) { return p * Rational(k); }

HomogPoly family_f(const FamilyParams& q) {
    const HomogPoly x = var(0), y = var(1), z = var(2), w = var(3);
    return scaled(z.pow(3), q.c) + scaled(w.pow(2) * x, q.d) + scaled(x * y * z, q.e);
}

}  // namespace

void FamilyParams::validate() const {
    const BigInt bound = 1'000'000;
    for (const BigInt* p : {&a, &b, &c, &d, &e}) {
        if (mpz_even_p(p->get_mpz_t())) throw std::invalid_argument("family parameter " + p->get_str() + " is even");
        if (abs(*p) > bound) throw std::invalid_argument("family parameter " + p->get_str() + " exceeds 10^6");
    }
}

std::pair<BigInt, BigInt> FamilyParams::delta_decomposition() const {
    // Factor each parameter separately; every factor is at most 10^6.
    BigInt kernel = sgn(delta()), m = 1;
    std::map<BigInt, unsigned long> exps;
    for (const BigInt* p : {&a, &b, &c, &d})
        if (abs(*p) > 1)
            for (const auto& pp : factor(*p)) exps[pp.prime] += pp.exponent;
    for (const auto& [prime, e] : exps) {
        if (e % 2) kernel *= prime;
        m *= pow(prime, e / 2);
    }
    return {kernel, m};
}

bool FamilyParams::delta_is_square() const { return delta_decomposition().first == 1; }

std::string FamilyParams::to_string() const {
    return a.get_str() + "," + b.get_str() + "," + c.get_str() + "," + d.get_str() + "," + e.get_str();
}

FamilyParams FamilyParams::parse(const std::string& text) {
    std::vector<BigInt> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t"), e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw std::invalid_argument("empty parameter in '" + text + "'");
        BigInt n;
        if (n.set_str(item.substr(b, e - b + 1), 10) != 0)
            throw std::invalid_argument("bad integer '" + item + "' in '" + text + "'");
        v.push_back(n);
    }
    if (v.size() != 5) throw std::invalid_argument("expected five parameters a,b,c,d,e in '" + text + "'");
    FamilyParams p{v[0], v[1], v[2], v[3], v[4]};
    p.validate();
    return p;
}

FamilyParams FamilyParams::random(std::uint64_t seed, bool square) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> pick(-15, 15);
    auto odd = [&] {
        long n = 0;
        while (n % 2 == 0) n = pick(rng);
        return BigInt(n);
    };
    FamilyParams p{odd(), odd(), odd(), odd(), odd()};
    if (square) {
        std::uniform_int_distribution<long> mpick(0, 2);
        p.d = p.a * p.b * p.c * pow(BigInt(2 * mpick(rng) + 1), 2);
    } else {
        while (p.delta_is_square()) p.d = odd();
    }
    p.validate();
    return p;
}

Hypersurface family_surface(const FamilyParams& q) {
    q.validate();
    const HomogPoly x = var(0), y = var(1), z = var(2), w = var(3);
    return Hypersurface(scaled(x.pow(3) * y, q.a) + scaled(y.pow(3) * z, q.b) + scaled(z.pow(3) * w, q.c) +
                        scaled(w.pow(3) * x, q.d) + scaled(x * y * z * w, q.e));
}

QuaternionClass family_class(const FamilyParams& q) {
    q.validate();
    const auto F = [](const HomogPoly& h, int e = 1) { return FactoredFunction::of(h, e); };
    return QuaternionClass(FactoredFunction(Rational(q.d)) * F(family_f(q)) * F(var(0), -3),
                           FactoredFunction(Rational(-q.c * q.d)) * F(var(2)) * F(var(0), -1));
}

std::vector<ResidueCertificate> family_certificates(const FamilyParams& q) {
    q.validate();
    const HomogPoly x = var(0), y = var(1), z = var(2), w = var(3);
    const HomogPoly f = family_f(q);
    const auto F = [](const HomogPoly& h, int e = 1) { return FactoredFunction::of(h, e); };
    const auto K = [](const BigInt& n) { return FactoredFunction(Rational(n)); };
    const auto [kernel, m] = q.delta_decomposition();

    std::vector<ResidueCertificate> out;
    out.push_back({"D1", {x, z}, -2, 0, {{x, 1}, {z, 1}, {f, 1}}, K(q.c * q.d) * F(z) * F(x, -1), 1});
    out.push_back({"D2", {x, scaled(y.pow(3), q.b) + scaled(z.pow(2) * w, q.c)}, -3, -1, {{x, 1}, {z, 0}, {f, 0}},
                   K(q.c * q.d), 1});
    out.push_back({"D3", {z, scaled(x.pow(2) * y, q.a) + scaled(w.pow(3), q.d)}, 0, 1,
                   {{x, 0}, {z, 1}, {f, 0}, {w, 0}}, K(q.d) * F(w) * F(x, -1), 1});
    out.push_back({"D4", {y, scaled(z.pow(3), q.c) + scaled(w.pow(2) * x, q.d)}, 1, 0,
                   {{x, 0}, {z, 0}, {f, 1}, {w, 0}, {y, 1}}, FactoredFunction(Rational(1) / Rational(q.d)) * F(z) * F(w, -1), 1});
    out.push_back({"D5",
                   {f, scaled(x.pow(3), q.a) + scaled(y.pow(2) * z, q.b),
                    scaled(y.pow(3) * z, q.b * q.e) - scaled(x.pow(2) * z.pow(2), q.a * q.c) +
                        scaled(y.pow(2) * w.pow(2), q.b * q.d)},
                   1,
                   0,
                   {{x, 0}, {z, 0}, {f, 1}, {y, 0}},
                   FactoredFunction(Rational(q.b) / Rational(kernel * m)) * F(y) * F(x, -1),
                   Rational(kernel)});
    return out;
}

FamilyPoints family_points(const FamilyParams& q, unsigned precision) {
    q.validate();
    if (precision < 3) throw std::invalid_argument("family points need precision >= 3");
    const Hypersurface surface = family_surface(q);
    const BigInt two = 2, modulus = pow(two, precision);
    FamilyPoints pts;
    pts.p1 = ModPoint{two, precision, {1, 0, 1, 0}};
    const BigInt cd = q.c * q.d;
    const BigInt w = rational_mod(Rational(-2 * q.a * q.c * q.d * q.e) / Rational(2 * q.c + cd), modulus);
    const ModPoint start{two, precision, {mod(cd, modulus), mod(BigInt(2 * q.d * q.e), modulus), 1, w}};
    const ModPoint lifted = hensel_lift(surface, start, precision, 1u);
    // Undo the normalization x = 1 so the coordinates read (cd : y : 1 : w).
    pts.p2 = ModPoint{two, precision, {}};
    for (unsigned i = 0; i < 4; ++i) pts.p2.coords[i] = mod(BigInt(lifted.coords[i] * cd), modulus);
    return pts;
}

bool FamilyReport::passed() const {
    for (const auto& [name, r] : residues) {
        const bool expect_trivial = delta_square || name != "D5";
        if (r.method != "member") return false;
        if (expect_trivial && r.verdict != ResidueVerdict::trivial) return false;
        if (!expect_trivial && (r.verdict != ResidueVerdict::nontrivial || r.delta != Rational(delta_kernel))) return false;
    }
    if (unramified != delta_square) return false;
    if (!delta_square) return !p1 && !p2;
    if (!p1 || !p2 || !f_p2_mod8 || !y_p2_mod8) return false;
    return p1->invariant.is_zero() && !p2->invariant.is_zero() && *f_p2_mod8 == mod(7 * params.c, 8) &&
           *y_p2_mod8 == mod(2 * params.d * params.e, 8);
}

FamilyReport family_check(const FamilyParams& q, unsigned precision) {
    q.validate();
    FamilyReport rep;
    rep.params = q;
    rep.delta = q.delta();
    rep.delta_kernel = q.delta_decomposition().first;
    rep.delta_square = rep.delta_kernel == 1;
    const QuaternionClass cls = family_class(q);
    rep.unramified = true;
    for (const auto& cert : family_certificates(q)) {
        ResidueResult r = residue_check(cls, cert);
        if (r.verdict != ResidueVerdict::trivial) rep.unramified = false;
        rep.residues.emplace_back(cert.name, std::move(r));
    }
    if (!rep.delta_square) {
        rep.verdict = "ramified at D5; defined only over Q(sqrt(" + rep.delta.get_str() + "))";
        return rep;
    }
    const FamilyPoints pts = family_points(q, precision);
    rep.p1 = eval_at(cls, pts.p1);
    rep.p2 = eval_at(cls, pts.p2);
    const HomogPoly f = family_f(q);
    rep.f_p2_mod8 = mod(evaluate_mod(f, pts.p2), 8);
    rep.y_p2_mod8 = mod(pts.p2.coords[1], 8);
    const bool obstructed = rep.unramified && rep.p1->invariant != rep.p2->invariant;
    rep.verdict = obstructed ? "obstructed" : "not obstructed";
    return rep;
}

}  // namespace k3br
