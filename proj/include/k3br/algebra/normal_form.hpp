#pragma once

// Multivariate division with remainder (graded-lex, x > y > z > w).
//
// This is plain division by the given generators, not a Groebner basis
// reduction: a zero remainder proves ideal membership, a nonzero remainder
// proves nothing.

#include "k3br/algebra/homog_poly.hpp"

#include <span>
#include <vector>

namespace k3br {

struct Division {
    std::vector<HomogPoly> quotients;  // one per generator
    HomogPoly remainder;
};

/// p = sum quotients[i] * gens[i] + remainder, and no term of the remainder
/// is divisible by the leading monomial of any nonzero generator.
Division divide(const HomogPoly& p, std::span<const HomogPoly> gens);

HomogPoly normal_form(const HomogPoly& p, std::span<const HomogPoly> gens);

enum class Membership { member, inconclusive };

Membership ideal_member(const HomogPoly& p, std::span<const HomogPoly> gens);

const char* to_string(Membership m);

}  // namespace k3br
