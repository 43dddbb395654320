#pragma once

// Point enumeration on hypersurface fibers over F_q.
//
// Normalized representatives are visited chart by chart (leading 1 in
// position 0, then 1, ...), so a full scan touches q^3 + q^2 + q + 1
// candidates. Work is split into blocks by the first free coordinate and
// merged in block order; results never depend on the thread count.

#include "k3br/algebra/fq_point.hpp"
#include "k3br/geometry/hypersurface.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace k3br {

class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct EnumerationLimits {
    /// Maximum number of candidates in a single affine chart, i.e. q^3.
    std::uint64_t max_chart_candidates = 10'000'000;
    /// Worker threads; 0 means std::thread::hardware_concurrency().
    unsigned threads = 0;
};

std::uint64_t count_points(const Hypersurface& surface, unsigned long q, const EnumerationLimits& limits = {});

/// Same points count_points counts, in projective_point_at order.
std::vector<FqPoint> enumerate_points(const Hypersurface& surface, unsigned long q,
                                      const EnumerationLimits& limits = {});

/// Throws std::invalid_argument when pt is not on the fiber.
bool is_smooth_point(const Hypersurface& surface, const FqPoint& pt);

std::vector<FqPoint> singular_points(const Hypersurface& surface, unsigned long q,
                                     const EnumerationLimits& limits = {});

struct ScanLevel {
    unsigned degree = 1;
    unsigned long q = 0;
    std::uint64_t points = 0;
    std::vector<FqPoint> singular;
};

/// Singular points over F_{p^k} for k = 1..max_degree. F_p-rational
/// singularities reappear at every level. An empty scan is bounded
/// evidence of good reduction, not a proof.
struct SmoothnessReport {
    unsigned long p = 0;
    std::vector<ScanLevel> levels;

    bool no_singular_points() const;
};

SmoothnessReport smoothness_scan(const Hypersurface& surface, unsigned long p, unsigned max_degree,
                                 const EnumerationLimits& limits = {});

/// Number of Z/p^2-points reducing to the F_p-point pt, counted in the chart
/// where pt's leading coordinate is 1 (p^3 candidates).
std::uint64_t lifts_mod_p2(const Hypersurface& surface, const FqPoint& pt);

}  // namespace k3br
