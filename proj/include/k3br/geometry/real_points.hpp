#pragma once

// Real points of a hypersurface with certified signs of auxiliary forms.
//
// (x, y, z) are rational and w is a real root of G(x, y, z, w), held as an
// isolating interval with rational endpoints. Signs of the auxiliary forms
// are certified by interval evaluation; the interval is bisected until every
// sign is determined or the refinement budget runs out.

#include "k3br/geometry/hypersurface.hpp"
#include "k3br/geometry/univariate.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace k3br {

class Unresolved : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RealSample {
    Rational x, y, z;
    Interval w;
    /// Certified sign (-1, 0, +1) of each requested form, in request order.
    std::vector<int> signs;
    /// Samples discarded before this one (no real root or unresolved signs).
    unsigned skipped = 0;

    std::string to_string() const;
};

/// poly(x, y, z, t) as a polynomial in t, with t substituted for coordinate var.
UniPoly restrict_to_line(const HomogPoly& poly, const std::array<Rational, 4>& at, unsigned var);

/// Isolating intervals for the real w with G(x, y, z, w) = 0. Empty when the
/// restriction has no real roots; throws std::invalid_argument when G vanishes
/// identically on the line.
std::vector<Interval> real_fiber(const Hypersurface& surface, const Rational& x, const Rational& y,
                                 const Rational& z);

/// Certifies the signs of the forms at (x, y, z, w) for the root of G in
/// root_interval; nullopt if the budget is exhausted first.
std::optional<RealSample> certify_signs(const Hypersurface& surface, const Rational& x, const Rational& y,
                                        const Rational& z, const Interval& root_interval,
                                        const std::vector<HomogPoly>& forms, unsigned max_refinements = 200);

/// Draws rational x > 0 and y, z, picks a real root w at random and certifies
/// the signs of the forms. Retries up to max_attempts times, then throws
/// Unresolved.
RealSample real_point_sample(const Hypersurface& surface, const std::vector<HomogPoly>& forms, std::uint64_t seed,
                             unsigned max_attempts = 64, unsigned max_refinements = 200);

}  // namespace k3br
