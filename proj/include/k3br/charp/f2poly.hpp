#pragma once

// Polynomial arithmetic over F_2.
//
//   F2Poly    F_2[v], bit i of the word vector is the coefficient of v^i.
//   F2BiPoly  F_2[v][u], a vector of F2Poly coefficients indexed by u-degree.
//   F2Rat     F_2(u, v) as num/den with gcd(num, den) = 1. F_2 has no units
//             besides 1, so the reduced form is canonical and equality is
//             structural.

#include <cstdint>
#include <string>
#include <vector>

namespace k3br {

class F2Poly {
public:
    F2Poly() = default;
    static F2Poly one() { return monomial(0); }
    static F2Poly monomial(unsigned degree);
    static F2Poly from_bits(std::uint64_t bits);

    /// -1 for zero.
    int degree() const;
    bool is_zero() const { return w_.empty(); }
    bool is_one() const { return w_.size() == 1 && w_[0] == 1; }
    bool coeff(unsigned i) const;
    void flip(unsigned i);

    F2Poly operator+(const F2Poly& o) const;
    F2Poly& operator+=(const F2Poly& o);
    F2Poly operator*(const F2Poly& o) const;
    F2Poly shifted(unsigned k) const;  // * v^k
    F2Poly derivative() const;
    bool operator==(const F2Poly&) const = default;

    std::string to_string(const std::string& var = "v") const;

private:
    void trim();
    std::vector<std::uint64_t> w_;
};

struct F2PolyDivision {
    F2Poly quot, rem;
};
F2PolyDivision divmod(const F2Poly& a, const F2Poly& b);
F2Poly gcd(F2Poly a, F2Poly b);
/// a / b; throws std::logic_error unless b divides a.
F2Poly exact_div(const F2Poly& a, const F2Poly& b);

class F2BiPoly {
public:
    F2BiPoly() = default;
    explicit F2BiPoly(F2Poly c);  // constant in u
    static F2BiPoly one() { return F2BiPoly(F2Poly::one()); }
    /// u^i v^j
    static F2BiPoly monomial(unsigned i, unsigned j);

    int degree_u() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    const F2Poly& coeff(unsigned i) const;
    const F2Poly& leading() const { return c_.back(); }
    const std::vector<F2Poly>& coeffs() const { return c_; }

    F2BiPoly operator+(const F2BiPoly& o) const;
    F2BiPoly operator*(const F2BiPoly& o) const;
    F2BiPoly operator*(const F2Poly& k) const;
    F2BiPoly shifted_u(unsigned k) const;
    F2BiPoly derivative_u() const;
    F2BiPoly derivative_v() const;
    bool operator==(const F2BiPoly&) const = default;

    /// gcd of the coefficients in F_2[v].
    F2Poly content() const;
    std::string to_string() const;

private:
    void trim();
    std::vector<F2Poly> c_;
};

/// Canonical gcd (primitive in u) via content and primitive pseudo-remainder sequences.
F2BiPoly gcd(const F2BiPoly& a, const F2BiPoly& b);
/// a / b; throws std::logic_error unless b divides a.
F2BiPoly exact_div(const F2BiPoly& a, const F2BiPoly& b);
F2BiPoly exact_div(const F2BiPoly& a, const F2Poly& k);

class F2Rat {
public:
    F2Rat() : num_(), den_(F2BiPoly::one()) {}
    F2Rat(F2BiPoly num);
    /// Throws std::domain_error on a zero denominator.
    F2Rat(F2BiPoly num, F2BiPoly den);
    static F2Rat one() { return F2Rat(F2BiPoly::one()); }

    const F2BiPoly& num() const { return num_; }
    const F2BiPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    F2Rat operator+(const F2Rat& o) const;
    F2Rat operator-(const F2Rat& o) const { return *this + o; }
    F2Rat operator*(const F2Rat& o) const;
    F2Rat operator/(const F2Rat& o) const { return *this * o.inverse(); }
    /// Throws std::domain_error on zero.
    F2Rat inverse() const;
    F2Rat derivative_u() const;
    F2Rat derivative_v() const;
    bool operator==(const F2Rat&) const = default;

    std::string to_string() const;

private:
    F2BiPoly num_, den_;
};

}  // namespace k3br
