#pragma once

// The surfaces a x^3y + b y^3z + c z^3w + d w^3x + e xyzw = 0 for odd a..e,
// all with the same reduction mod 2, and their classes
//
//     A = (d (c z^3 + d w^2 x + e xyz) / x^3, -cd z/x),
//
// unramified exactly when Delta = abcd is a square.

#include "k3br/brauer/evaluation.hpp"
#include "k3br/brauer/residue.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace k3br {

struct FamilyParams {
    BigInt a = 1, b = 1, c = 1, d = 1, e = 1;

    /// Throws std::invalid_argument unless every parameter is odd with |.| <= 10^6.
    void validate() const;
    BigInt delta() const { return a * b * c * d; }
    /// Delta = kernel * m^2 with kernel squarefree (sign included).
    std::pair<BigInt, BigInt> delta_decomposition() const;
    bool delta_is_square() const;
    std::string to_string() const;  // "1,1,1,1,1"

    /// Parses "a,b,c,d,e" and validates.
    static FamilyParams parse(const std::string& text);
    /// Random odd parameters with |.| small; Delta square when square = true.
    static FamilyParams random(std::uint64_t seed, bool square);
};

Hypersurface family_surface(const FamilyParams& params);
QuaternionClass family_class(const FamilyParams& params);
/// D1..D5; D5 claims the class delta = squarefree kernel of Delta.
std::vector<ResidueCertificate> family_certificates(const FamilyParams& params);

struct FamilyPoints {
    ModPoint p1;  // (1:0:1:0)
    /// (cd : y : 1 : -2acde/(2c + cd)) with y solved 2-adically; not normalized.
    ModPoint p2;
};

FamilyPoints family_points(const FamilyParams& params, unsigned precision);

struct FamilyReport {
    FamilyParams params;
    BigInt delta, delta_kernel;
    bool delta_square = false;
    std::vector<std::pair<std::string, ResidueResult>> residues;
    bool unramified = false;
    std::optional<EvalRecord> p1, p2;
    std::optional<BigInt> f_p2_mod8, y_p2_mod8;
    /// "obstructed", "not obstructed" or "ramified at D5; defined only over Q(sqrt(Delta))".
    std::string verdict;

    /// The full list of expected properties for this parameter vector.
    bool passed() const;
};

FamilyReport family_check(const FamilyParams& params, unsigned precision = 32);

}  // namespace k3br
