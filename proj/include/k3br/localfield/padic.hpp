#pragma once

// Elements of Q_p at finite precision.
//
// A nonzero element is p^v * u where u is a unit known modulo p^k; k is the
// relative precision. Exact zero has valuation +infinity and no unit part.
// Arithmetic never claims more precision than its inputs justify: products
// keep the smaller relative precision and sums keep the smaller absolute
// precision, failing with InsufficientPrecision when everything cancels.

#include "k3br/algebra/numeric.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace k3br {

class InsufficientPrecision : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class PadicNum {
public:
    /// Exact zero in Q_p.
    static PadicNum zero(const BigInt& p);

    /// A rational known to relative precision `precision` (exact zero maps to zero).
    static PadicNum from_rational(const Rational& q, const BigInt& p, unsigned precision);

    /// The class of an integer known modulo p^absolute_precision. Throws
    /// InsufficientPrecision when the residue is 0, i.e. the valuation is not
    /// determined at this precision.
    static PadicNum from_residue(const BigInt& residue, const BigInt& p, unsigned absolute_precision);

    /// p^valuation * unit with unit known modulo p^precision.
    PadicNum(BigInt p, long valuation, BigInt unit, unsigned precision);

    const BigInt& prime() const { return p_; }
    bool is_exact_zero() const { return !valuation_.has_value(); }
    /// Throws std::logic_error on exact zero.
    long valuation() const;
    /// Unit part reduced to [0, p^precision).
    const BigInt& unit() const;
    unsigned precision() const { return precision_; }
    /// valuation + precision; throws std::logic_error on exact zero.
    long absolute_precision() const;

    PadicNum operator*(const PadicNum& o) const;
    PadicNum operator/(const PadicNum& o) const;
    PadicNum operator+(const PadicNum& o) const;
    PadicNum operator-(const PadicNum& o) const;
    PadicNum operator-() const;

    /// Same element with relative precision lowered to k (k <= precision()).
    PadicNum truncate(unsigned k) const;

    /// "2^3 * 5 (mod 2^4)" style description.
    std::string to_string() const;

private:
    PadicNum(BigInt p) : p_(std::move(p)) {}
    void check_same_prime(const PadicNum& o) const;

    BigInt p_;
    std::optional<long> valuation_;
    BigInt unit_;
    unsigned precision_ = 0;
};

}  // namespace k3br
