#pragma once

// Evidence that listed components cover a hyperplane or hypersurface section
// {G = 0, h = 0}: sampled F_q-points of the section must each lie on one of
// the components.

#include "k3br/algebra/fq_point.hpp"
#include "k3br/geometry/hypersurface.hpp"

#include <cstdint>
#include <vector>

namespace k3br {

struct CoverReport {
    struct PerField {
        unsigned long q = 0;
        std::size_t sampled = 0;
        std::vector<FqPoint> violations;
    };
    std::vector<PerField> fields;

    bool ok() const;
    std::size_t sampled() const;
};

CoverReport component_cover_check(const Hypersurface& surface, const HomogPoly& cut,
                                  const std::vector<std::vector<HomogPoly>>& components,
                                  const std::vector<unsigned long>& q_list, std::size_t n, std::uint64_t seed);

}  // namespace k3br
