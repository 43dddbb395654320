#pragma once

#include "k3br/algebra/homog_poly.hpp"

#include <array>
#include <string>

namespace k3br {

/// A hypersurface G = 0 in P^3 over Z. G is homogeneous with rational
/// coefficients; in practice integral. Partial derivatives are cached.
class Hypersurface {
public:
    explicit Hypersurface(HomogPoly equation);

    /// x^3*y + y^3*z + z^3*w + w^3*x + x*y*z*w.
    static Hypersurface k3_quartic();

    const HomogPoly& equation() const { return g_; }
    const HomogPoly& partial(unsigned var) const { return partials_.at(var); }
    unsigned degree() const { return g_.degree(); }

private:
    HomogPoly g_;
    std::array<HomogPoly, 4> partials_;
};

/// A point of P^3 over Z/p^k. Normalized points have their first p-adic unit
/// coordinate equal to 1; every coordinate lies in [0, p^k).
struct ModPoint {
    BigInt p;
    unsigned precision = 1;
    std::array<BigInt, 4> coords;

    BigInt modulus() const;
    /// Index of the first coordinate prime to p; throws if there is none.
    unsigned unit_index() const;
    /// Reduction to a lower precision m <= precision.
    ModPoint reduce(unsigned m) const;
    /// "(1:2:1:2) mod 2^3"
    std::string to_string() const;

    bool operator==(const ModPoint&) const = default;
};

/// Scales coordinates so the first unit coordinate is 1 and reduces mod p^k.
/// Throws std::invalid_argument when no coordinate is a unit.
ModPoint normalize(const BigInt& p, unsigned precision, std::array<BigInt, 4> coords);

/// G(point) reduced modulo p^precision.
BigInt evaluate_mod(const HomogPoly& poly, const ModPoint& pt);

bool lies_on(const Hypersurface& surface, const ModPoint& pt);

/// A point of P^3(Q) as coprime integers whose first nonzero entry is positive.
struct RationalPoint {
    std::array<BigInt, 4> coords;

    static RationalPoint from(std::array<Rational, 4> coords);
    std::string to_string() const;
    bool operator==(const RationalPoint&) const = default;
};

/// Parses "1,0,1,0" (integers or fractions).
std::array<Rational, 4> parse_coords(const std::string& text);

}  // namespace k3br
