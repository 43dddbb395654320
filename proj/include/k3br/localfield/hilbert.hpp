#pragma once

// Quadratic Hilbert symbols (a, b)_v at the places of Q and the local
// invariants of quaternion algebras, inv_v(a, b) in {0, 1/2} in Q/Z.

#include "k3br/algebra/numeric.hpp"
#include "k3br/localfield/padic.hpp"

#include <string>
#include <vector>

namespace k3br {

/// A place of Q: a prime p or the real place.
class Place {
public:
    static Place infinity() { return Place(); }
    static Place prime(BigInt p);

    bool is_infinite() const { return infinite_; }
    /// Throws std::logic_error for the real place.
    const BigInt& p() const;

    std::string to_string() const { return infinite_ ? "inf" : p_.get_str(); }

    bool operator==(const Place& o) const { return infinite_ == o.infinite_ && p_ == o.p_; }
    bool operator<(const Place& o) const;

    /// Parses "inf", "oo", "infinity" or a prime.
    static Place parse(const std::string& text);

private:
    Place() : infinite_(true), p_(0) {}
    bool infinite_;
    BigInt p_;
};

/// Element of Br(Q_v)[2] viewed in Q/Z.
class BrInvariant {
public:
    static BrInvariant zero() { return BrInvariant(false); }
    static BrInvariant half() { return BrInvariant(true); }

    bool is_zero() const { return !half_; }
    BrInvariant operator+(const BrInvariant& o) const { return BrInvariant(half_ != o.half_); }
    bool operator==(const BrInvariant&) const = default;
    auto operator<=>(const BrInvariant&) const = default;

    std::string to_string() const { return half_ ? "1/2" : "0"; }

private:
    explicit BrInvariant(bool half) : half_(half) {}
    bool half_;
};

/// (a, b)_v for nonzero rationals. Throws std::invalid_argument on zero.
int hilbert_symbol(const Rational& a, const Rational& b, const Place& v);

/// (a, b)_p from p-adic approximations. Needs relative precision >= 3 on both
/// arguments when p = 2 and >= 1 otherwise; throws InsufficientPrecision below
/// that and std::invalid_argument on exact zero.
int hilbert_symbol_padic(const PadicNum& a, const PadicNum& b);

/// +1 -> 0, -1 -> 1/2.
BrInvariant invariant(int symbol);

/// The places where (a, b) can be ramified: infinity, 2, and the odd primes
/// dividing a numerator or denominator.
std::vector<Place> relevant_places(const Rational& a, const Rational& b);

/// Product of (a, b)_v over relevant_places(a, b) equals +1.
bool product_formula_check(const Rational& a, const Rational& b);

}  // namespace k3br
