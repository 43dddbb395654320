#pragma once

#include "k3br/algebra/fq_point.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace k3br {

/// Up to n distinct F_q-points of P^{nvars-1} on which every generator vanishes.
///
/// All of P^{nvars-1}(F_q) is scanned, so q^{nvars-1} must be small. When more
/// than n points qualify, a seeded shuffle picks which ones are returned; the
/// result is sorted so it depends only on (gens, q, n, seed).
std::vector<FqPoint> sample_variety_points(std::span<const HomogPoly> gens, unsigned long q, std::size_t n,
                                           std::uint64_t seed);

}  // namespace k3br
