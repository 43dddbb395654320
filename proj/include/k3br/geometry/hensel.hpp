#pragma once

// Hensel lifting of points on a hypersurface over Z/p^m.
//
// A point is lifted by fixing every coordinate except one free variable t and
// solving g(t) = G(..., t, ...) = 0 by Newton iteration. With v = val g'(t0)
// and e = val g(t0) (capped at the known precision m), the lift exists when
// e > 2v; the root is congruent to t0 modulo p^(e-v), so the lift reduces to
// the input mod p^m whenever v = 0.

#include "k3br/algebra/fq_point.hpp"
#include "k3br/geometry/hypersurface.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace k3br {

class HenselFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Random tails are drawn to this precision, so lifts of one sample at
/// different precisions are reductions of the same p-adic point.
inline constexpr unsigned kMaxLiftPrecision = 256;

/// Lifts pt (on the surface mod p^m) to precision k. Without free_var the
/// variable with the smallest derivative valuation is used, ties broken
/// x < y < z < w. The result is normalized.
ModPoint hensel_lift(const Hypersurface& surface, const ModPoint& pt, unsigned target_precision,
                     std::optional<unsigned> free_var = std::nullopt);

/// The free variable hensel_lift would choose, or nullopt if none satisfies e > 2v.
std::optional<unsigned> choose_free_variable(const Hypersurface& surface, const ModPoint& pt);

/// Random points of the residue disk of a smooth point mod p^m: coordinates
/// other than the unit and free ones get random p-adic tails, the free one is
/// solved by Newton. Sample i is reproducible from (class, seed, i).
class LiftSampler {
public:
    LiftSampler(const Hypersurface& surface, const ModPoint& cls, std::uint64_t seed);

    /// A fresh sample; the returned object lifts it to any precision.
    class Sample {
    public:
        ModPoint at(unsigned precision) const;
        const std::array<BigInt, 4>& tails() const { return tails_; }

    private:
        friend class LiftSampler;
        const LiftSampler* owner_ = nullptr;
        std::array<BigInt, 4> tails_;
    };

    Sample draw();
    /// Shorthand for draw().at(precision).
    ModPoint lift(unsigned precision) { return draw().at(precision); }
    unsigned free_variable() const { return free_; }
    const ModPoint& class_point() const { return cls_; }

private:
    const Hypersurface* surface_;
    ModPoint cls_;
    unsigned free_;
    std::uint64_t state_;
};

/// A smooth F_p-point chosen uniformly with a seeded generator and lifted to
/// precision k.
ModPoint random_Zp_point(const Hypersurface& surface, unsigned long p, unsigned precision, std::uint64_t seed);

/// All points mod p^m reducing to smooth F_p-points, as normalized ModPoints,
/// ordered by F_p-point and then by the digits of the non-free coordinates.
std::vector<ModPoint> smooth_points_mod(const Hypersurface& surface, unsigned long p, unsigned m);

/// The smooth F_p-points of the fiber, in enumeration order.
std::vector<FqPoint> smooth_points(const Hypersurface& surface, unsigned long p);

ModPoint to_mod_point(const FqPoint& pt);

}  // namespace k3br
