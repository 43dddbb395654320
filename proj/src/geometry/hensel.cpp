#include "k3br/geometry/hensel.hpp"
#include "k3br/geometry/enumeration.hpp"

#include <random>

namespace k3br {

namespace {

// min(val_p(r), cap) for a residue r known modulo p^cap.
unsigned capped_valuation(const BigInt& r, const BigInt& p, unsigned cap) {
    if (r == 0) return cap;
    return static_cast<unsigned>(std::min<unsigned long>(valuation(r, p), cap));
}

BigInt eval_int(const HomogPoly& poly, const std::array<BigInt, 4>& c, const BigInt& modulus) {
    ModRing ring(modulus);
    return poly.evaluate(ring, std::span<const BigInt>(c));
}

struct Condition {
    unsigned e;  // val g(t0), capped at m
    unsigned v;  // val g'(t0), capped at m
    bool ok() const { return e > 2 * v; }
};

Condition condition(const Hypersurface& s, const ModPoint& pt, unsigned var) {
    const BigInt n = pt.modulus();
    return {capped_valuation(eval_int(s.equation(), pt.coords, n), pt.p, pt.precision),
            capped_valuation(eval_int(s.partial(var), pt.coords, n), pt.p, pt.precision)};
}

// Newton in the free coordinate. Fixed coordinates are exact integers; v is
// val g'(t0). Returns t with val g(t) >= target + v, reduced mod p^target.
BigInt newton(const Hypersurface& s, std::array<BigInt, 4> c, unsigned var, const BigInt& p, unsigned v,
              unsigned target) {
    const unsigned K = target + 2 * v + 2;
    const BigInt pK = pow(p, K), pv = pow(p, v);
    for (int iter = 0; iter < 400; ++iter) {
        const BigInt g = eval_int(s.equation(), c, pK);
        if (g == 0 || valuation(g, p) >= target + v) {
            const BigInt pt = pow(p, target);
            return mod(c[var], pt);
        }
        const BigInt d = eval_int(s.partial(var), c, pK);
        if (d == 0 || valuation(d, p) != v) throw HenselFailure("derivative valuation changed during Newton iteration");
        const BigInt unit = d / pv;
        const BigInt corr = mod((g / pv) * inverse_mod(unit, pK), pK);
        c[var] = mod(c[var] - corr, pK);
    }
    throw HenselFailure("Newton iteration did not converge");
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

BigInt random_below(std::mt19937_64& rng, const BigInt& bound) {
    const std::size_t words = mpz_sizeinbase(bound.get_mpz_t(), 2) / 64 + 2;
    BigInt r = 0;
    for (std::size_t i = 0; i < words; ++i) {
        r <<= 64;
        r += static_cast<unsigned long>(rng());
    }
    return mod(r, bound);
}

}  // namespace

std::optional<unsigned> choose_free_variable(const Hypersurface& surface, const ModPoint& input) {
    const ModPoint pt = normalize(input.p, input.precision, input.coords);
    const unsigned u = pt.unit_index();
    std::optional<unsigned> best;
    unsigned best_v = 0;
    for (unsigned j = 0; j < 4; ++j) {
        if (j == u) continue;
        const Condition c = condition(surface, pt, j);
        if (!c.ok()) continue;
        if (!best || c.v < best_v) {
            best = j;
            best_v = c.v;
        }
    }
    return best;
}

ModPoint hensel_lift(const Hypersurface& surface, const ModPoint& input, unsigned target_precision,
                     std::optional<unsigned> free_var) {
    if (target_precision == 0) throw std::invalid_argument("target precision must be positive");
    const ModPoint pt = normalize(input.p, input.precision, input.coords);
    const unsigned u = pt.unit_index();
    unsigned var;
    if (free_var) {
        if (*free_var > 3) throw std::invalid_argument("free variable index out of range");
        if (*free_var == u)
            throw std::invalid_argument("free variable is the normalized coordinate of " + pt.to_string());
        var = *free_var;
    } else {
        auto chosen = choose_free_variable(surface, pt);
        if (!chosen) throw HenselFailure("no coordinate of " + pt.to_string() + " satisfies val g > 2 val g'");
        var = *chosen;
    }
    const Condition cond = condition(surface, pt, var);
    if (!cond.ok())
        throw HenselFailure("Hensel condition fails at " + pt.to_string() + " in variable " + std::to_string(var) +
                            ": val g = " + std::to_string(cond.e) + ", val g' = " + std::to_string(cond.v));
    const BigInt t = newton(surface, pt.coords, var, pt.p, cond.v, target_precision);
    ModPoint out{pt.p, target_precision, pt.coords};
    out.coords[var] = t;
    const BigInt n = out.modulus();
    for (auto& c : out.coords) c = mod(c, n);
    if (!lies_on(surface, out)) throw std::logic_error("Hensel lift failed its own check at " + out.to_string());
    return out;
}

LiftSampler::LiftSampler(const Hypersurface& surface, const ModPoint& cls, std::uint64_t seed)
    : surface_(&surface), cls_(normalize(cls.p, cls.precision, cls.coords)), free_(0), state_(splitmix64(seed)) {
    if (!lies_on(surface, cls_)) throw std::invalid_argument(cls_.to_string() + " is not on the surface");
    const unsigned u = cls_.unit_index();
    bool found = false;
    for (unsigned j = 0; j < 4 && !found; ++j) {
        if (j == u) continue;
        if (condition(surface, cls_, j).v == 0) {
            free_ = j;
            found = true;
        }
    }
    if (!found) throw HenselFailure(cls_.to_string() + " reduces to a singular point");
}

LiftSampler::Sample LiftSampler::draw() {
    Sample s;
    s.owner_ = this;
    std::mt19937_64 rng(splitmix64(state_++));
    const BigInt bound = pow(cls_.p, kMaxLiftPrecision - cls_.precision);
    const unsigned u = cls_.unit_index();
    for (unsigned j = 0; j < 4; ++j) s.tails_[j] = (j == u || j == free_) ? BigInt(0) : random_below(rng, bound);
    return s;
}

ModPoint LiftSampler::Sample::at(unsigned precision) const {
    const LiftSampler& o = *owner_;
    if (precision == 0 || precision > kMaxLiftPrecision)
        throw std::invalid_argument("lift precision must lie in [1, " + std::to_string(kMaxLiftPrecision) + "]");
    std::array<BigInt, 4> c;
    const BigInt pm = o.cls_.modulus();
    for (unsigned j = 0; j < 4; ++j) c[j] = o.cls_.coords[j] + pm * tails_[j];
    const BigInt t = newton(*o.surface_, c, o.free_, o.cls_.p, 0, precision);
    c[o.free_] = t;
    ModPoint out{o.cls_.p, precision, c};
    const BigInt n = out.modulus();
    for (auto& x : out.coords) x = mod(x, n);
    return out;
}

std::vector<FqPoint> smooth_points(const Hypersurface& surface, unsigned long p) {
    std::vector<FqPoint> out;
    for (auto& pt : enumerate_points(surface, p))
        if (is_smooth_point(surface, pt)) out.push_back(std::move(pt));
    return out;
}

ModPoint to_mod_point(const FqPoint& pt) {
    if (pt.field == nullptr || pt.field->degree() != 1 || pt.coords.size() != 4)
        throw std::invalid_argument("expected a point of P^3(F_p)");
    ModPoint out{BigInt(pt.field->characteristic()), 1, {}};
    for (unsigned j = 0; j < 4; ++j) out.coords[j] = pt.coords[j];
    return normalize(out.p, 1, out.coords);
}

ModPoint random_Zp_point(const Hypersurface& surface, unsigned long p, unsigned precision, std::uint64_t seed) {
    const auto pts = smooth_points(surface, p);
    if (pts.empty()) throw std::invalid_argument("fiber at p = " + std::to_string(p) + " has no smooth F_p-point");
    std::mt19937_64 rng(splitmix64(seed));
    std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
    const std::size_t i = pick(rng);
    LiftSampler sampler(surface, to_mod_point(pts[i]), rng());
    return sampler.lift(precision);
}

std::vector<ModPoint> smooth_points_mod(const Hypersurface& surface, unsigned long p, unsigned m) {
    if (m == 0) throw std::invalid_argument("precision must be positive");
    const BigInt pb(p), tail_bound = pow(pb, m - 1);
    if (tail_bound * tail_bound > BigInt(10'000'000)) throw CapExceeded("too many residue classes per point");
    std::vector<ModPoint> out;
    for (const auto& fp : smooth_points(surface, p)) {
        const ModPoint base = to_mod_point(fp);
        const unsigned u = base.unit_index();
        unsigned var = 4;
        for (unsigned j = 0; j < 4 && var == 4; ++j)
            if (j != u && condition(surface, base, j).v == 0) var = j;
        std::array<unsigned, 2> others{};
        for (unsigned j = 0, k = 0; j < 4; ++j)
            if (j != u && j != var) others[k++] = j;
        for (BigInt a = 0; a < tail_bound; ++a)
            for (BigInt b = 0; b < tail_bound; ++b) {
                std::array<BigInt, 4> c = base.coords;
                c[others[0]] += pb * a;
                c[others[1]] += pb * b;
                c[var] = newton(surface, c, var, pb, 0, m);
                out.push_back(ModPoint{pb, m, c});
            }
    }
    return out;
}

}  // namespace k3br
