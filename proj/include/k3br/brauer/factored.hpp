#pragma once

// Rational functions on P^3 kept in factored form c * prod f_i^{e_i}.
//
// Factors are stored monic (leading coefficient 1 in grlex) and merged, so
// two factors that differ by a scalar share one entry; the scalar moves into
// c. A FactoredFunction is a function on P^3 only when its total degree
// sum e_i * deg f_i is zero.

#include "k3br/algebra/homog_poly.hpp"
#include "k3br/geometry/hypersurface.hpp"
#include "k3br/localfield/padic.hpp"

#include <string>
#include <vector>

namespace k3br {

struct Factor {
    HomogPoly poly;  // monic, nonconstant
    int exponent = 0;
};

class FactoredFunction {
public:
    FactoredFunction(Rational constant = 1);
    static FactoredFunction of(const HomogPoly& poly, int exponent = 1);

    const Rational& constant() const { return c_; }
    const std::vector<Factor>& factors() const { return factors_; }
    /// sum e_i * deg f_i.
    long degree() const;

    FactoredFunction operator*(const FactoredFunction& o) const;
    FactoredFunction operator/(const FactoredFunction& o) const;
    FactoredFunction pow(int e) const;
    FactoredFunction inverse() const { return pow(-1); }
    bool operator==(const FactoredFunction& o) const;

    /// Products of the factors with positive / negative exponents; the
    /// constant is not included.
    HomogPoly numerator() const;
    HomogPoly denominator() const;

    /// Exact value at a rational point; throws std::domain_error when a factor
    /// with negative exponent vanishes and returns 0 when one with positive
    /// exponent does.
    Rational evaluate(const std::array<Rational, 4>& pt) const;

    /// Value at a point of P^3(Z/p^k) as an element of Q_p. Throws
    /// InsufficientPrecision when a factor is 0 mod p^k.
    PadicNum evaluate_padic(const ModPoint& pt) const;

    /// "-1 * (z) * (x)^-1"; the constant always comes first.
    std::string to_string() const;
    static FactoredFunction parse(const std::string& text);

private:
    void multiply_factor(const HomogPoly& poly, int exponent);

    Rational c_;
    std::vector<Factor> factors_;  // sorted by the polynomial's text
};

/// (a, b) in Br k(X)[2] for degree-zero rational functions a, b.
class QuaternionClass {
public:
    QuaternionClass(FactoredFunction a, FactoredFunction b);

    /// ((z^3 + w^2*x + x*y*z) / x^3, -z/x).
    static QuaternionClass k3_class();

    const FactoredFunction& a() const { return a_; }
    const FactoredFunction& b() const { return b_; }

    HomogPoly a_num() const;  // includes the constant
    HomogPoly a_den() const;
    HomogPoly b_num() const;
    HomogPoly b_den() const;

    std::string to_string() const;

private:
    FactoredFunction a_, b_;
};

}  // namespace k3br
