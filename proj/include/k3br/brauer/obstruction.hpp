#pragma once

// Verdicts from local evaluation evidence. A class whose invariant takes two
// values on X(Q_v) cuts out a proper subset X(A)^A of the adeles (given a
// rational point, so X(A) is nonempty): an obstruction to weak approximation.

#include "k3br/brauer/evaluation.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace k3br {

class InsufficientEvidence : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Evidence {
    /// Evaluations at local points, any places.
    std::vector<EvalRecord> local;
    /// Evaluations at one rational point, one record per place.
    std::vector<EvalRecord> rational_point;
};

enum class ObstructionVerdict { obstructed, no_nonconstancy };

struct ObstructionReport {
    ObstructionVerdict verdict = ObstructionVerdict::no_nonconstancy;
    std::vector<Place> nonconstant_places;
    /// Places whose sampled invariants all agree, with the common value.
    std::map<Place, BrInvariant> constant_places;
    /// Two records with different invariants at the first nonconstant place.
    std::optional<std::pair<EvalRecord, EvalRecord>> witnesses;
    std::optional<BrInvariant> reciprocity_sum;

    bool reciprocity_ok() const { return !reciprocity_sum || reciprocity_sum->is_zero(); }
    /// "obstructed at 2" or "no non-constancy found".
    std::string summary() const;
};

/// Requires at least two local records at `focus`; throws InsufficientEvidence otherwise.
ObstructionReport obstruction_report(const QuaternionClass& cls, const Evidence& evidence,
                                     const Place& focus = Place::prime(2));

}  // namespace k3br
