#pragma once

#include "k3br/algebra/finite_field.hpp"
#include "k3br/algebra/homog_poly.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace k3br {

/// A point of P^{n-1}(F_q), normalized so its first nonzero coordinate is 1.
struct FqPoint {
    const FiniteField* field = nullptr;
    std::vector<FiniteField::value_type> coords;

    bool operator==(const FqPoint& o) const { return field == o.field && coords == o.coords; }
    bool operator<(const FqPoint& o) const { return coords < o.coords; }

    /// "(1:0:1:0)" with coordinates in the field's display format.
    std::string to_string() const;
};

/// Number of points of P^{n-1}(F_q): (q^n - 1) / (q - 1).
std::uint64_t projective_space_size(std::uint32_t q, unsigned n);

/// The index-th normalized point in the fixed enumeration order: first by the
/// position of the leading 1, then lexicographically in the trailing
/// coordinates (codes read as base-q digits, last coordinate fastest).
FqPoint projective_point_at(const FiniteField& field, unsigned n, std::uint64_t index);

/// Scales coordinates so the first nonzero one is 1; throws on the zero vector.
FqPoint normalize(const FiniteField& field, std::vector<FiniteField::value_type> coords);

template <class Fn>
void for_each_projective_point(const FiniteField& field, unsigned n, Fn&& fn) {
    const std::uint64_t total = projective_space_size(field.order(), n);
    for (std::uint64_t i = 0; i < total; ++i) fn(projective_point_at(field, n, i));
}

/// Evaluates p at an F_q point (coefficients mapped through from_rational).
FiniteField::value_type evaluate_at(const HomogPoly& p, const FqPoint& pt);

}  // namespace k3br
