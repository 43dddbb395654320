#pragma once

// Exact integer and rational scalars. Both are GMP-backed; mpq_class keeps
// every value canonical (gcd(num, den) = 1, den > 0) after arithmetic.

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace k3br {

using BigInt = mpz_class;
using Rational = mpq_class;

/// num/den in lowest terms. Throws std::domain_error on a zero denominator.
Rational make_rational(const BigInt& num, const BigInt& den);

/// Parses "n" or "n/d" (optional sign). Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

std::string to_string(const BigInt& n);
std::string to_string(const Rational& q);

BigInt pow(const BigInt& base, unsigned long exp);

/// Non-negative residue of n modulo m (m > 0).
BigInt mod(const BigInt& n, const BigInt& m);

/// Inverse of a modulo m; throws std::domain_error when gcd(a, m) != 1.
BigInt inverse_mod(const BigInt& a, const BigInt& m);

/// Residue of a rational modulo m; the denominator must be invertible.
BigInt rational_mod(const Rational& q, const BigInt& m);

/// Largest v with p^v | n (n != 0).
unsigned long valuation(const BigInt& n, const BigInt& p);

bool is_perfect_square(const Rational& q);

}  // namespace k3br
