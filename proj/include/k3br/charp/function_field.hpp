#pragma once

// The function field of a surface G = 0 over F_2, in the affine chart x = 1:
// F = F_2(u, v)[s] / (g) with (u, v, s) = (y/x, z/x, w/x) and
// g(u, v, s) = G(1, u, v, s) made monic in s. Elements are polynomials in s
// of degree < deg_s g. Inverses use the extended Euclidean algorithm; hitting
// a zero divisor (g reducible) throws ZeroDivisor.

#include "k3br/algebra/homog_poly.hpp"
#include "k3br/charp/f2poly.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace k3br {

class ZeroDivisor : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class FnFieldElem;

class FunctionField {
public:
    /// G must have integral coefficients and G(1, u, v, s) positive degree in s.
    explicit FunctionField(const HomogPoly& G);
    FunctionField(const FunctionField&) = delete;
    FunctionField& operator=(const FunctionField&) = delete;

    /// The modulus g, coefficients in F_2(u, v) indexed by s-degree (monic).
    const std::vector<F2Rat>& modulus() const { return g_; }
    unsigned degree() const { return static_cast<unsigned>(g_.size() - 1); }

    FnFieldElem zero() const;
    FnFieldElem one() const;
    FnFieldElem u() const;
    FnFieldElem v() const;
    FnFieldElem s() const;
    FnFieldElem from_rat(const F2Rat& r) const;
    /// P(1, u, v, s) for a homogeneous P with integral coefficients.
    FnFieldElem from_poly(const HomogPoly& P) const;
    /// x_k / x_0 for k = 0..3, i.e. 1, u, v, s.
    FnFieldElem coordinate(unsigned k) const;

    /// ds = ds_du * du + ds_dv * dv, from dg = 0: ds/du = g_u/g_s, ds/dv = g_v/g_s.
    const FnFieldElem& ds_du() const;
    const FnFieldElem& ds_dv() const;
    /// g_s evaluated in F.
    const FnFieldElem& g_s() const;

private:
    std::vector<F2Rat> g_;
    std::shared_ptr<const FnFieldElem> ds_du_, ds_dv_, g_s_;
};

class FnFieldElem {
public:
    FnFieldElem(const FunctionField& field, std::vector<F2Rat> coeffs);

    const FunctionField& field() const { return *field_; }
    const std::vector<F2Rat>& coeffs() const { return c_; }
    bool is_zero() const;

    FnFieldElem operator+(const FnFieldElem& o) const;
    FnFieldElem operator-(const FnFieldElem& o) const { return *this + o; }
    FnFieldElem operator*(const FnFieldElem& o) const;
    FnFieldElem operator/(const FnFieldElem& o) const { return *this * o.inverse(); }
    FnFieldElem pow(unsigned e) const;
    /// Throws ZeroDivisor on zero or a zero divisor.
    FnFieldElem inverse() const;
    bool operator==(const FnFieldElem& o) const { return c_ == o.c_; }

    /// Partial derivatives as a function of the transcendence basis (u, v).
    FnFieldElem d_du() const;
    FnFieldElem d_dv() const;

    std::string to_string() const;

private:
    const FunctionField* field_;
    std::vector<F2Rat> c_;  // size = field degree
};

}  // namespace k3br
