#include "k3br/geometry/real_points.hpp"

#include <random>

namespace k3br {

std::string RealSample::to_string() const {
    return "(" + x.get_str() + ", " + y.get_str() + ", " + z.get_str() + ", " + w.to_string() + ")";
}

UniPoly restrict_to_line(const HomogPoly& poly, const std::array<Rational, 4>& at, unsigned var) {
    if (poly.nvars() != 4 || var > 3) throw std::invalid_argument("restrict_to_line expects 4 variables");
    std::vector<Rational> c(poly.degree() + 1);
    for (const auto& [m, coeff] : poly.terms()) {
        Rational term = coeff;
        for (unsigned v = 0; v < 4; ++v)
            if (v != var)
                for (unsigned e = 0; e < m[v]; ++e) term *= at[v];
        c[m[var]] += term;
    }
    return UniPoly(std::move(c));
}

std::vector<Interval> real_fiber(const Hypersurface& surface, const Rational& x, const Rational& y,
                                 const Rational& z) {
    const UniPoly h = restrict_to_line(surface.equation(), {x, y, z, 0}, 3);
    if (h.is_zero()) throw std::invalid_argument("equation vanishes on the whole line");
    return isolate_real_roots(h);
}

std::optional<RealSample> certify_signs(const Hypersurface& surface, const Rational& x, const Rational& y,
                                        const Rational& z, const Interval& root_interval,
                                        const std::vector<HomogPoly>& forms, unsigned max_refinements) {
    const UniPoly h = squarefree_part(restrict_to_line(surface.equation(), {x, y, z, 0}, 3));
    std::vector<UniPoly> restricted;
    for (const auto& f : forms) restricted.push_back(restrict_to_line(f, {x, y, z, 0}, 3));
    Interval w = root_interval;
    for (unsigned step = 0; step <= max_refinements; ++step) {
        RealSample s{x, y, z, w, {}, 0};
        bool ok = true;
        for (const auto& r : restricted) {
            const int sg = evaluate(r, w).sign();
            if (sg == 2) {
                ok = false;
                break;
            }
            s.signs.push_back(sg);
        }
        if (ok) return s;
        w = refine_root(h, w);
    }
    return std::nullopt;
}

RealSample real_point_sample(const Hypersurface& surface, const std::vector<HomogPoly>& forms, std::uint64_t seed,
                             unsigned max_attempts, unsigned max_refinements) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> pos(1, 20), any(-20, 20), den(1, 10);
    for (unsigned attempt = 0; attempt < max_attempts; ++attempt) {
        const Rational x = make_rational(pos(rng), den(rng));
        const Rational y = make_rational(any(rng), den(rng));
        const Rational z = make_rational(any(rng), den(rng));
        const auto roots = real_fiber(surface, x, y, z);
        if (roots.empty()) continue;
        std::uniform_int_distribution<std::size_t> pick(0, roots.size() - 1);
        auto s = certify_signs(surface, x, y, z, roots[pick(rng)], forms, max_refinements);
        if (!s) continue;
        s->skipped = attempt;
        return *s;
    }
    throw Unresolved("no certified real sample after " + std::to_string(max_attempts) + " attempts");
}

}  // namespace k3br
