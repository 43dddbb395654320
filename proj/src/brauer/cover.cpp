#include "k3br/brauer/cover.hpp"
#include "k3br/algebra/sampling.hpp"

#include <algorithm>

namespace k3br {

bool CoverReport::ok() const {
    return std::all_of(fields.begin(), fields.end(), [](const PerField& f) { return f.violations.empty(); });
}

std::size_t CoverReport::sampled() const {
    std::size_t n = 0;
    for (const auto& f : fields) n += f.sampled;
    return n;
}

CoverReport component_cover_check(const Hypersurface& surface, const HomogPoly& cut,
                                  const std::vector<std::vector<HomogPoly>>& components,
                                  const std::vector<unsigned long>& q_list, std::size_t n, std::uint64_t seed) {
    CoverReport report;
    const std::vector<HomogPoly> section{surface.equation(), cut};
    for (unsigned long q : q_list) {
        CoverReport::PerField pf;
        pf.q = q;
        const auto pts = sample_variety_points(section, q, n, seed + q);
        pf.sampled = pts.size();
        for (const auto& pt : pts) {
            const bool covered = std::any_of(components.begin(), components.end(), [&](const auto& gens) {
                return std::all_of(gens.begin(), gens.end(), [&](const HomogPoly& g) { return evaluate_at(g, pt) == 0; });
            });
            if (!covered) pf.violations.push_back(pt);
        }
        report.fields.push_back(std::move(pf));
    }
    return report;
}

}  // namespace k3br
