#pragma once

// Text format for polynomials: a sum of terms coeff*x^a*y^b*z^c*w^d with
// exact integer or fraction coefficients, e.g. "x^3*y + y^3*z - 1/2*x*y*z*w".
// Factors may appear in any order and repeat; a missing coefficient is 1.

#include "k3br/algebra/homog_poly.hpp"

#include <span>
#include <string>
#include <string_view>

namespace k3br {

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Parses text over the given variable names (default x, y, z, w).
/// Throws ParseError on malformed input or a non-homogeneous sum.
HomogPoly parse_poly(std::string_view text, std::span<const std::string> names = {});

}  // namespace k3br
