#include "k3br/algebra/sampling.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace k3br {

std::string FqPoint::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) out += ":";
        out += field->format(coords[i]);
    }
    return out + ")";
}

std::uint64_t projective_space_size(std::uint32_t q, unsigned n) {
    std::uint64_t total = 0, power = 1;
    for (unsigned i = 0; i < n; ++i) {
        total += power;
        power *= q;
    }
    return total;
}

FqPoint projective_point_at(const FiniteField& field, unsigned n, std::uint64_t index) {
    const std::uint64_t q = field.order();
    FqPoint pt{&field, std::vector<FiniteField::value_type>(n, 0)};
    // Block j holds points whose leading 1 sits at position j; it has q^(n-1-j) entries.
    for (unsigned lead = 0; lead < n; ++lead) {
        std::uint64_t block = 1;
        for (unsigned i = lead + 1; i < n; ++i) block *= q;
        if (index < block) {
            pt.coords[lead] = 1;
            for (unsigned i = n; i-- > lead + 1;) {
                pt.coords[i] = static_cast<FiniteField::value_type>(index % q);
                index /= q;
            }
            return pt;
        }
        index -= block;
    }
    throw std::out_of_range("projective point index out of range");
}

FqPoint normalize(const FiniteField& field, std::vector<FiniteField::value_type> coords) {
    auto lead = std::find_if(coords.begin(), coords.end(), [](auto c) { return c != 0; });
    if (lead == coords.end()) throw std::invalid_argument("zero vector is not a projective point");
    auto scale = field.inv(*lead);
    for (auto& c : coords) c = field.mul(c, scale);
    return {&field, std::move(coords)};
}

FiniteField::value_type evaluate_at(const HomogPoly& p, const FqPoint& pt) {
    return p.evaluate(*pt.field, std::span<const FiniteField::value_type>(pt.coords));
}

std::vector<FqPoint> sample_variety_points(std::span<const HomogPoly> gens, unsigned long q, std::size_t n,
                                           std::uint64_t seed) {
    if (gens.empty()) throw std::invalid_argument("sample_variety_points: no generators");
    const FiniteField& field = FiniteField::of_order(q);
    const unsigned nvars = gens.front().nvars();
    std::vector<FqPoint> hits;
    for_each_projective_point(field, nvars, [&](const FqPoint& pt) {
        for (const auto& g : gens)
            if (evaluate_at(g, pt) != 0) return;
        hits.push_back(pt);
    });
    if (hits.size() > n) {
        std::mt19937_64 rng(seed);
        std::shuffle(hits.begin(), hits.end(), rng);
        hits.resize(n);
        std::sort(hits.begin(), hits.end());
    }
    return hits;
}

}  // namespace k3br
