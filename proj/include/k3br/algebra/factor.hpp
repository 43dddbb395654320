#pragma once

#include "k3br/algebra/numeric.hpp"

#include <utility>
#include <vector>

namespace k3br {

struct PrimePower {
    BigInt prime;
    unsigned long exponent = 0;

    bool operator==(const PrimePower&) const = default;
};

/// Factorization of |n| (n != 0) by trial division, with a probable-prime
/// test on the cofactor. Throws std::domain_error when a composite cofactor
/// above the trial bound remains.
std::vector<PrimePower> factor(const BigInt& n, unsigned long trial_bound = 1000000);

bool is_prime(const BigInt& n);

/// If q = p^k for a prime p, returns {p, k}; otherwise {0, 0}.
std::pair<unsigned long, unsigned> prime_power(unsigned long q);

/// Signed squarefree kernel s and m > 0 with n = s * m^2.
std::pair<BigInt, BigInt> squarefree_decomposition(const BigInt& n);

}  // namespace k3br
