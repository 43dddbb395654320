#pragma once

// Univariate polynomials over Q, Sturm sequences, and closed intervals with
// exact rational endpoints.

#include "k3br/algebra/numeric.hpp"

#include <string>
#include <vector>

namespace k3br {

class UniPoly {
public:
    UniPoly() = default;
    /// coeffs[i] is the coefficient of t^i.
    explicit UniPoly(std::vector<Rational> coeffs);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& leading() const { return c_.back(); }

    Rational operator()(const Rational& t) const;
    int sign_at(const Rational& t) const;

    UniPoly derivative() const;
    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator-() const;
    bool operator==(const UniPoly&) const = default;

    UniPoly monic() const;
    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Rational> c_;
};

struct QuotRem {
    UniPoly quot, rem;
};
QuotRem divmod(const UniPoly& a, const UniPoly& b);
UniPoly gcd(const UniPoly& a, const UniPoly& b);  // monic; gcd(0, 0) = 0
UniPoly squarefree_part(const UniPoly& p);

std::vector<UniPoly> sturm_chain(const UniPoly& p);
/// Sign variations of the chain at t (zeros skipped).
int sign_variations(const std::vector<UniPoly>& chain, const Rational& t);

struct Interval {
    Rational lo, hi;

    static Interval point(const Rational& x) { return {x, x}; }
    bool is_point() const { return lo == hi; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    /// +1 / -1 when the interval lies strictly on one side of 0, 0 for the
    /// point interval {0}, and 2 when the sign is ambiguous.
    int sign() const;
    Rational width() const { return hi - lo; }
    std::string to_string() const;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);

/// Enclosure of p over the interval by Horner evaluation.
Interval evaluate(const UniPoly& p, const Interval& x);

/// Isolating intervals for the distinct real roots of p (p nonzero), sorted.
/// Each interval is either a point (an exact rational root) or an open
/// interval (lo, hi) containing exactly one root with p(lo), p(hi) of
/// opposite signs for the squarefree part.
std::vector<Interval> isolate_real_roots(const UniPoly& p);

/// One bisection step on an isolating interval of the squarefree polynomial q.
Interval refine_root(const UniPoly& q, const Interval& iv);

}  // namespace k3br
