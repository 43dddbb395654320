#include "k3br/geometry/enumeration.hpp"
#include "k3br/algebra/factor.hpp"
#include "k3br/algebra/parallel.hpp"

#include <algorithm>
#include <array>

namespace k3br {

namespace {

// G with coefficients mapped into F_q, evaluated through per-point power tables.
class CompiledPoly {
public:
    CompiledPoly(const HomogPoly& poly, const FiniteField& field) : field_(&field), degree_(poly.degree()) {
        for (const auto& [m, c] : poly.terms()) {
            auto code = field.from_rational(c);
            if (code == 0) continue;
            terms_.push_back({code, {m[0], m[1], m[2], m[3]}});
        }
    }

    unsigned degree() const { return degree_; }

    // pw[v][e] = coord_v^e for e <= degree.
    FiniteField::value_type eval(const std::vector<std::array<FiniteField::value_type, 8>>& pw) const {
        FiniteField::value_type acc = 0;
        for (const auto& t : terms_) {
            auto term = t.coeff;
            for (unsigned v = 0; v < 4 && term != 0; ++v)
                if (t.exps[v]) term = field_->mul(term, pw[v][t.exps[v]]);
            acc = field_->add(acc, term);
        }
        return acc;
    }

private:
    struct Term {
        FiniteField::value_type coeff;
        std::array<unsigned, 4> exps;
    };
    const FiniteField* field_;
    unsigned degree_;
    std::vector<Term> terms_;
};

struct Kernel {
    const FiniteField& field;
    CompiledPoly g;
    std::array<CompiledPoly, 4> partials;

    Kernel(const Hypersurface& s, const FiniteField& f)
        : field(f),
          g(s.equation(), f),
          partials{CompiledPoly(s.partial(0), f), CompiledPoly(s.partial(1), f), CompiledPoly(s.partial(2), f),
                   CompiledPoly(s.partial(3), f)} {
        if (g.degree() > 7) throw std::invalid_argument("enumeration supports degree <= 7");
    }

    void powers(const std::array<FiniteField::value_type, 4>& c,
                std::vector<std::array<FiniteField::value_type, 8>>& pw) const {
        for (unsigned v = 0; v < 4; ++v) {
            pw[v][0] = 1;
            for (unsigned e = 1; e <= g.degree(); ++e) pw[v][e] = field.mul(pw[v][e - 1], c[v]);
        }
    }

    bool singular(const std::vector<std::array<FiniteField::value_type, 8>>& pw) const {
        for (const auto& d : partials)
            if (d.eval(pw) != 0) return false;
        return true;
    }
};

enum class Mode { count, collect, singular };

struct BlockResult {
    std::uint64_t count = 0;
    std::vector<std::array<FiniteField::value_type, 4>> points;
};

const FiniteField& field_for(unsigned long q) {
    auto [p, k] = prime_power(q);
    if (p == 0) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
    return FiniteField::of_order(q);
}

void check_cap(unsigned long q, const EnumerationLimits& limits) {
    const std::uint64_t q3 = std::uint64_t(q) * q * q;
    if (q3 > limits.max_chart_candidates)
        throw CapExceeded("q^3 = " + std::to_string(q3) + " exceeds the enumeration cap " +
                          std::to_string(limits.max_chart_candidates));
}

// Blocks: chart i (leading 1 at position i) and, if it has free coordinates,
// the value of the first free coordinate. Block order equals
// projective_point_at order.
std::vector<BlockResult> scan(const Hypersurface& surface, unsigned long q, const EnumerationLimits& limits,
                              Mode mode) {
    check_cap(q, limits);
    const FiniteField& field = field_for(q);
    const Kernel kernel(surface, field);
    struct Block {
        unsigned chart;
        FiniteField::value_type first;
    };
    std::vector<Block> blocks;
    for (unsigned i = 0; i < 4; ++i) {
        if (i == 3)
            blocks.push_back({3, 0});
        else
            for (FiniteField::value_type a = 0; a < q; ++a) blocks.push_back({i, a});
    }
    std::vector<BlockResult> results(blocks.size());
    parallel_for(blocks.size(), limits.threads, [&](std::size_t b) {
        const Block blk = blocks[b];
        BlockResult& out = results[b];
        std::vector<std::array<FiniteField::value_type, 8>> pw(4);
        std::array<FiniteField::value_type, 4> c{0, 0, 0, 0};
        c[blk.chart] = 1;
        const unsigned nfree = 3 - blk.chart;
        std::uint64_t inner = 1;
        for (unsigned j = 1; j < nfree; ++j) inner *= q;
        if (nfree > 0) c[blk.chart + 1] = blk.first;
        for (std::uint64_t idx = 0; idx < inner; ++idx) {
            std::uint64_t r = idx;
            for (unsigned pos = 3; pos > blk.chart + 1; --pos) {
                c[pos] = static_cast<FiniteField::value_type>(r % q);
                r /= q;
            }
            kernel.powers(c, pw);
            if (kernel.g.eval(pw) != 0) continue;
            if (mode == Mode::singular && !kernel.singular(pw)) continue;
            ++out.count;
            if (mode != Mode::count) out.points.push_back(c);
        }
    });
    return results;
}

std::vector<FqPoint> flatten(const std::vector<BlockResult>& results, unsigned long q) {
    const FiniteField& field = FiniteField::of_order(q);
    std::vector<FqPoint> out;
    for (const auto& r : results)
        for (const auto& c : r.points) out.push_back(FqPoint{&field, {c.begin(), c.end()}});
    return out;
}

}  // namespace

std::uint64_t count_points(const Hypersurface& surface, unsigned long q, const EnumerationLimits& limits) {
    std::uint64_t total = 0;
    for (const auto& r : scan(surface, q, limits, Mode::count)) total += r.count;
    return total;
}

std::vector<FqPoint> enumerate_points(const Hypersurface& surface, unsigned long q,
                                      const EnumerationLimits& limits) {
    return flatten(scan(surface, q, limits, Mode::collect), q);
}

bool is_smooth_point(const Hypersurface& surface, const FqPoint& pt) {
    if (pt.field == nullptr || pt.coords.size() != 4) throw std::invalid_argument("expected a point of P^3(F_q)");
    if (evaluate_at(surface.equation(), pt) != 0)
        throw std::invalid_argument("point " + pt.to_string() + " is not on the surface");
    for (unsigned v = 0; v < 4; ++v)
        if (evaluate_at(surface.partial(v), pt) != 0) return true;
    return false;
}

std::vector<FqPoint> singular_points(const Hypersurface& surface, unsigned long q,
                                     const EnumerationLimits& limits) {
    return flatten(scan(surface, q, limits, Mode::singular), q);
}

bool SmoothnessReport::no_singular_points() const {
    return std::all_of(levels.begin(), levels.end(), [](const ScanLevel& l) { return l.singular.empty(); });
}

SmoothnessReport smoothness_scan(const Hypersurface& surface, unsigned long p, unsigned max_degree,
                                 const EnumerationLimits& limits) {
    if (!is_prime(BigInt(p))) throw std::invalid_argument(std::to_string(p) + " is not prime");
    if (max_degree == 0) throw std::invalid_argument("max_degree must be positive");
    unsigned long q_max = 1;
    for (unsigned k = 0; k < max_degree; ++k) q_max *= p;
    check_cap(q_max, limits);
    SmoothnessReport report;
    report.p = p;
    unsigned long q = 1;
    for (unsigned k = 1; k <= max_degree; ++k) {
        q *= p;
        ScanLevel level;
        level.degree = k;
        level.q = q;
        level.points = count_points(surface, q, limits);
        level.singular = singular_points(surface, q, limits);
        report.levels.push_back(std::move(level));
    }
    return report;
}

std::uint64_t lifts_mod_p2(const Hypersurface& surface, const FqPoint& pt) {
    if (pt.field == nullptr || pt.field->degree() != 1 || pt.coords.size() != 4)
        throw std::invalid_argument("lifts_mod_p2 expects a point of P^3(F_p)");
    const unsigned long p = pt.field->characteristic();
    if (evaluate_at(surface.equation(), pt) != 0)
        throw std::invalid_argument("point " + pt.to_string() + " is not on the surface");
    unsigned lead = 0;
    while (pt.coords[lead] == 0) ++lead;
    const BigInt pb(p);
    ModRing ring(pb * pb);
    std::array<unsigned, 3> others{};
    for (unsigned v = 0, j = 0; v < 4; ++v)
        if (v != lead) others[j++] = v;
    std::uint64_t count = 0;
    std::array<BigInt, 4> c;
    for (unsigned long t = 0; t < p * p * p; ++t) {
        unsigned long r = t;
        c[lead] = 1;
        for (unsigned j = 0; j < 3; ++j) {
            c[others[j]] = BigInt(pt.coords[others[j]]) + pb * BigInt(r % p);
            r /= p;
        }
        if (surface.equation().evaluate(ring, std::span<const BigInt>(c)) == 0) ++count;
    }
    return count;
}

}  // namespace k3br
