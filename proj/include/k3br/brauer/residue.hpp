#pragma once

// Residues of a quaternion class (a, b) along a prime divisor D:
//
//     d_D(a, b) = (-1)^{v(a) v(b)} a^{v(b)} / b^{v(a)}  in  k(D)^* / k(D)^{*2}.
//
// A certificate supplies generators of I(D), the valuations of every factor
// that appears in a, b and the witness s, and a witness s with the claim
// residue = delta * s^2. The check verifies the claims that division can
// decide and then proves t = residue / (delta s^2) equals 1 on D by an
// ideal-membership test kappa*N - D in I(D), where t = kappa*N/D.

#include "k3br/algebra/normal_form.hpp"
#include "k3br/brauer/factored.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace k3br {

class CertificateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The witness has a factor that vanishes on D without cancelling.
class WitnessUndefined : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ValuationClaim {
    HomogPoly factor;
    int nu = 0;
};

struct ResidueCertificate {
    std::string name;
    std::vector<HomogPoly> divisor_gens;
    int nu_a = 0;
    int nu_b = 0;
    /// Valuations along D of the factors of a, b and the witness. Factors
    /// without a claim are taken to have valuation 0.
    std::vector<ValuationClaim> valuations;
    FactoredFunction witness;
    Rational delta = 1;
};

enum class ResidueVerdict { trivial, nontrivial, inconclusive };
const char* to_string(ResidueVerdict v);

struct SamplingEvidence {
    std::vector<unsigned long> fields;  // q values actually used
    std::size_t points = 0;
    std::size_t squares = 0;            // points where residue/delta is a square
    bool consistent() const { return points > 0 && points == squares; }
};

struct ResidueResult {
    ResidueVerdict verdict = ResidueVerdict::inconclusive;
    /// Constant class when the verdict is nontrivial (delta), 1 otherwise.
    Rational delta = 1;
    /// "member" when ideal membership proved the claim, "none" otherwise.
    std::string method = "none";
    FactoredFunction residue;  // (-1)^{v(a)v(b)} a^{v(b)} b^{-v(a)}
    FactoredFunction quotient;  // residue / (delta * s^2)
    std::optional<SamplingEvidence> sampling;
    std::string detail;
};

struct ResidueOptions {
    /// Fields for the sampling fallback. Odd prime fields come first: over
    /// F_{p^2} every rational constant is a square, so delta is invisible there.
    std::vector<unsigned long> sample_fields{7, 11, 13, 9, 25, 49};
    std::size_t points_per_field = 40;
    std::uint64_t seed = 1;
};

/// Valuation of a factor along D according to the certificate; throws
/// CertificateError when a claim fails its check.
int certified_valuation(const ResidueCertificate& cert, const HomogPoly& factor);

ResidueResult residue_check(const QuaternionClass& cls, const ResidueCertificate& cert,
                            const ResidueOptions& options = {});

/// True iff every certificate yields a trivial residue.
bool unramified_check(const QuaternionClass& cls, const std::vector<ResidueCertificate>& certs,
                      const ResidueOptions& options = {});

/// The certificates for ((z^3 + w^2*x + x*y*z)/x^3, -z/x) along D1..D5.
std::vector<ResidueCertificate> k3_certificates();

}  // namespace k3br
