#include "k3br/geometry/hypersurface.hpp"
#include "k3br/algebra/poly_text.hpp"

#include <sstream>

namespace k3br {

Hypersurface::Hypersurface(HomogPoly equation) : g_(std::move(equation)) {
    if (g_.nvars() != 4) throw std::invalid_argument("hypersurface equation must be in 4 variables");
    if (g_.is_zero()) throw std::invalid_argument("hypersurface equation must be nonzero");
    for (unsigned v = 0; v < 4; ++v) partials_[v] = g_.partial(v);
}

Hypersurface Hypersurface::k3_quartic() { return Hypersurface(parse_poly("x^3*y + y^3*z + z^3*w + w^3*x + x*y*z*w")); }

BigInt ModPoint::modulus() const { return pow(p, precision); }

unsigned ModPoint::unit_index() const {
    for (unsigned i = 0; i < 4; ++i)
        if (!mpz_divisible_p(coords[i].get_mpz_t(), p.get_mpz_t())) return i;
    throw std::invalid_argument("point " + to_string() + " has no unit coordinate");
}

ModPoint ModPoint::reduce(unsigned m) const {
    if (m == 0 || m > precision) throw std::invalid_argument("reduce: bad precision");
    ModPoint r{p, m, coords};
    BigInt n = pow(p, m);
    for (auto& c : r.coords) c = mod(c, n);
    return r;
}

std::string ModPoint::to_string() const {
    std::ostringstream os;
    os << "(" << coords[0] << ":" << coords[1] << ":" << coords[2] << ":" << coords[3] << ") mod " << p << "^"
       << precision;
    return os.str();
}

ModPoint normalize(const BigInt& p, unsigned precision, std::array<BigInt, 4> coords) {
    ModPoint pt{p, precision, std::move(coords)};
    BigInt n = pt.modulus();
    for (auto& c : pt.coords) c = mod(c, n);
    unsigned i = pt.unit_index();
    BigInt scale = inverse_mod(pt.coords[i], n);
    for (auto& c : pt.coords) c = mod(c * scale, n);
    return pt;
}

BigInt evaluate_mod(const HomogPoly& poly, const ModPoint& pt) {
    ModRing ring(pt.modulus());
    return poly.evaluate(ring, std::span<const BigInt>(pt.coords));
}

bool lies_on(const Hypersurface& surface, const ModPoint& pt) { return evaluate_mod(surface.equation(), pt) == 0; }

RationalPoint RationalPoint::from(std::array<Rational, 4> coords) {
    BigInt lcm_den = 1;
    for (const auto& c : coords) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
    RationalPoint pt;
    BigInt g = 0;
    for (unsigned i = 0; i < 4; ++i) {
        Rational scaled = coords[i] * lcm_den;
        pt.coords[i] = scaled.get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), pt.coords[i].get_mpz_t());
    }
    if (g == 0) throw std::invalid_argument("zero vector is not a projective point");
    int sign = 0;
    for (const auto& c : pt.coords)
        if (c != 0) {
            sign = c > 0 ? 1 : -1;
            break;
        }
    for (auto& c : pt.coords) c = c / g * sign;
    return pt;
}

std::string RationalPoint::to_string() const {
    std::ostringstream os;
    os << "(" << coords[0] << ":" << coords[1] << ":" << coords[2] << ":" << coords[3] << ")";
    return os.str();
}

std::array<Rational, 4> parse_coords(const std::string& text) {
    std::array<Rational, 4> out;
    std::stringstream ss(text);
    std::string item;
    unsigned i = 0;
    while (std::getline(ss, item, ',')) {
        if (i >= 4) throw std::invalid_argument("expected 4 coordinates in '" + text + "'");
        auto b = item.find_first_not_of(" \t"), e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw std::invalid_argument("empty coordinate in '" + text + "'");
        out[i++] = parse_rational(item.substr(b, e - b + 1));
    }
    if (i != 4) throw std::invalid_argument("expected 4 coordinates in '" + text + "'");
    return out;
}

}  // namespace k3br
