#pragma once

// Local evaluation of a quaternion class: P -> (a(P), b(P))_v in Br(Q_v)[2].
//
// Points of X(Z_p) are handled through approximations mod p^k. An argument
// whose value is 0 mod p^k has unknown valuation; eval_at then throws
// ArgumentVanishes and the retrying wrappers relift the same p-adic point at
// higher precision. eval_stabilized handles points where an argument really
// vanishes, using local constancy: it samples nearby points in shrinking
// residue disks until the invariant agrees on consecutive levels.

#include "k3br/brauer/factored.hpp"
#include "k3br/geometry/hensel.hpp"
#include "k3br/geometry/real_points.hpp"
#include "k3br/localfield/hilbert.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace k3br {

class ArgumentVanishes : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class EvalMethod { direct, stabilized };
const char* to_string(EvalMethod m);

struct EvalRecord {
    Place place = Place::infinity();
    std::string point;
    /// Precision k of the p-adic approximation; 0 for exact and real points.
    unsigned precision = 0;
    std::optional<PadicNum> a_value, b_value;  // p-adic places
    std::optional<Rational> a_exact, b_exact;  // rational points
    int a_sign = 0, b_sign = 0;                // real place
    int symbol = 1;
    BrInvariant invariant = BrInvariant::zero();
    EvalMethod method = EvalMethod::direct;
    /// Disk levels that agreed, for stabilized records.
    unsigned stable_levels = 0;

    /// Human-readable argument values.
    std::string a_text() const;
    std::string b_text() const;
};

EvalRecord eval_at(const QuaternionClass& cls, const ModPoint& pt);

/// Exact evaluation at a rational point, at any place.
EvalRecord eval_at_rational(const QuaternionClass& cls, const std::array<Rational, 4>& pt, const Place& place);

/// Distinct factors of a and b, the forms whose real signs decide the symbol.
std::vector<HomogPoly> sign_forms(const QuaternionClass& cls);

/// Evaluation at a certified real sample whose signs were computed for sign_forms(cls).
EvalRecord eval_at_real(const QuaternionClass& cls, const RealSample& sample);

/// real_point_sample + eval_at_real, resampling when an argument vanishes.
EvalRecord eval_real_sample(const QuaternionClass& cls, const Hypersurface& surface, std::uint64_t seed);

/// eval_at on sample.at(k), doubling k up to kMaxLiftPrecision while an
/// argument is 0 at the current precision.
EvalRecord eval_with_retry(const QuaternionClass& cls, const LiftSampler::Sample& sample, unsigned precision);

/// Invariant near pt (a point mod p^m on the surface, smooth mod p): for
/// disk levels j = m, m+1, ..., a random point congruent to pt mod p^j is
/// evaluated; stops when `agree` consecutive levels give the same invariant.
/// Throws ArgumentVanishes if that does not happen by level m + max_levels.
EvalRecord eval_stabilized(const QuaternionClass& cls, const Hypersurface& surface, const ModPoint& pt,
                           std::uint64_t seed, unsigned agree = 5, unsigned max_levels = 60);

struct EvalTableRow {
    ModPoint cls;
    std::set<BrInvariant> invariants;
    unsigned evaluations = 0;
    unsigned errors = 0;
};

struct EvalTable {
    unsigned long p = 0;
    unsigned class_precision = 0;
    unsigned lifts_per_class = 0;
    unsigned precision = 0;
    std::vector<EvalTableRow> rows;

    bool all_singletons() const;
    std::size_t total_errors() const;
};

/// For every smooth point mod p^m, n random lifts evaluated at precision k
/// (k >= m + 3). Errors are counted per class; rows follow smooth_points_mod order.
EvalTable eval_table(const QuaternionClass& cls, const Hypersurface& surface, unsigned long p, unsigned m,
                     unsigned n, unsigned k, std::uint64_t seed, unsigned threads = 0);

struct SweepResult {
    unsigned long p = 0;
    std::vector<EvalRecord> records;
    unsigned errors = 0;

    std::set<BrInvariant> invariants() const;
};

/// n random points of X(Z_p): a smooth F_p-point drawn uniformly, then a
/// random lift evaluated at precision k (raised on vanishing arguments).
SweepResult random_point_sweep(const QuaternionClass& cls, const Hypersurface& surface, unsigned long p, unsigned n,
                               unsigned k, std::uint64_t seed);

}  // namespace k3br
