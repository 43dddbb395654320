#pragma once

// Sparse homogeneous polynomials with rational coefficients.
//
// Terms are kept in a map ordered by graded-lex with x0 > x1 > ... so the
// first entry is the leading term. Integer and F_q polynomials are the same
// type: an integral polynomial is one whose coefficients have denominator 1,
// and reduce_mod(p) brings coefficients into [0, p).

#include "k3br/algebra/numeric.hpp"

#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace k3br {

using Monomial = std::vector<unsigned>;

unsigned total_degree(const Monomial& m);

/// Graded-lex comparison: negative if a < b, zero if equal, positive if a > b.
int grlex_compare(const Monomial& a, const Monomial& b);

struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_compare(a, b) > 0; }
};

bool divides(const Monomial& a, const Monomial& b);

class HomogPoly {
public:
    using TermMap = std::map<Monomial, Rational, GrlexGreater>;

    /// The zero polynomial in nvars variables (degree 0, no terms).
    explicit HomogPoly(unsigned nvars = 4);

    static HomogPoly variable(unsigned nvars, unsigned index);
    static HomogPoly constant(unsigned nvars, const Rational& c);
    static HomogPoly monomial(const Rational& c, const Monomial& m);

    unsigned nvars() const { return nvars_; }
    unsigned degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Leading monomial / coefficient; throws std::logic_error on zero.
    const Monomial& leading_monomial() const;
    const Rational& leading_coefficient() const;

    /// Coefficient of m (zero if absent).
    Rational coefficient(const Monomial& m) const;

    bool is_integral() const;

    HomogPoly operator-() const;
    HomogPoly& operator+=(const HomogPoly& o);
    HomogPoly& operator-=(const HomogPoly& o);
    HomogPoly operator+(const HomogPoly& o) const;
    HomogPoly operator-(const HomogPoly& o) const;
    HomogPoly operator*(const HomogPoly& o) const;
    HomogPoly operator*(const Rational& c) const;
    HomogPoly pow(unsigned e) const;

    bool operator==(const HomogPoly& o) const;

    /// Formal partial derivative in variable var.
    HomogPoly partial(unsigned var) const;

    /// Coefficients reduced into [0, p); every denominator must be prime to p.
    HomogPoly reduce_mod(const BigInt& p) const;

    /// Scalar multiple with leading coefficient 1 (zero stays zero).
    HomogPoly monic() const;

    /// Exact evaluation over a coefficient ring (see concepts below).
    template <class Ring>
    typename Ring::value_type evaluate(const Ring& ring, std::span<const typename Ring::value_type> point) const;

    std::string to_string(std::span<const std::string> names = {}) const;

private:
    void add_term(const Monomial& m, const Rational& c);
    void check_compatible(const HomogPoly& o) const;

    unsigned nvars_;
    unsigned degree_ = 0;
    TermMap terms_;
};

HomogPoly operator*(const Rational& c, const HomogPoly& p);

/// Default variable names: x, y, z, w for four variables, x0, x1, ... otherwise.
std::vector<std::string> default_names(unsigned nvars);

// ---------------------------------------------------------------------------
// Coefficient rings for evaluation. A ring provides value_type, zero(), one(),
// add, mul and from_rational; FiniteField (finite_field.hpp) is one as well.

struct RationalField {
    using value_type = Rational;
    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type from_rational(const Rational& q) const { return q; }
};

/// Z/nZ with representatives in [0, n).
class ModRing {
public:
    using value_type = BigInt;
    explicit ModRing(BigInt modulus);
    const BigInt& modulus() const { return n_; }
    value_type zero() const { return 0; }
    value_type one() const { return n_ == 1 ? 0 : 1; }
    value_type add(const value_type& a, const value_type& b) const;
    value_type sub(const value_type& a, const value_type& b) const;
    value_type mul(const value_type& a, const value_type& b) const;
    value_type from_rational(const Rational& q) const { return rational_mod(q, n_); }

private:
    BigInt n_;
};

template <class Ring>
typename Ring::value_type HomogPoly::evaluate(const Ring& ring,
                                              std::span<const typename Ring::value_type> point) const {
    using V = typename Ring::value_type;
    if (point.size() != nvars_)
        throw std::invalid_argument("evaluation point has " + std::to_string(point.size()) +
                                    " coordinates, polynomial has " + std::to_string(nvars_) + " variables");
    // powers[v][e] = point[v]^e for e <= degree
    std::vector<std::vector<V>> powers(nvars_);
    for (unsigned v = 0; v < nvars_; ++v) {
        powers[v].reserve(degree_ + 1);
        powers[v].push_back(ring.one());
        for (unsigned e = 1; e <= degree_; ++e) powers[v].push_back(ring.mul(powers[v].back(), point[v]));
    }
    V acc = ring.zero();
    for (const auto& [m, c] : terms_) {
        V term = ring.from_rational(c);
        for (unsigned v = 0; v < nvars_; ++v)
            if (m[v] != 0) term = ring.mul(term, powers[v][m[v]]);
        acc = ring.add(acc, term);
    }
    return acc;
}

}  // namespace k3br
