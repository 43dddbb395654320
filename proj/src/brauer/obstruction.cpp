#include "k3br/brauer/obstruction.hpp"

namespace k3br {

std::string ObstructionReport::summary() const {
    if (verdict == ObstructionVerdict::no_nonconstancy) return "no non-constancy found";
    std::string out = "obstructed at ";
    for (std::size_t i = 0; i < nonconstant_places.size(); ++i)
        out += (i ? ", " : "") + nonconstant_places[i].to_string();
    return out;
}

ObstructionReport obstruction_report(const QuaternionClass&, const Evidence& evidence, const Place& focus) {
    std::size_t at_focus = 0;
    for (const auto& r : evidence.local)
        if (r.place == focus) ++at_focus;
    if (at_focus < 2)
        throw InsufficientEvidence("need at least two local points at " + focus.to_string() + ", got " +
                                   std::to_string(at_focus));

    std::map<Place, std::vector<const EvalRecord*>> by_place;
    for (const auto& r : evidence.local) by_place[r.place].push_back(&r);

    ObstructionReport rep;
    for (const auto& [place, recs] : by_place) {
        const EvalRecord* other = nullptr;
        for (const auto* r : recs)
            if (r->invariant != recs.front()->invariant) {
                other = r;
                break;
            }
        if (other) {
            rep.nonconstant_places.push_back(place);
            if (!rep.witnesses) rep.witnesses = std::make_pair(*recs.front(), *other);
        } else {
            rep.constant_places.emplace(place, recs.front()->invariant);
        }
    }
    rep.verdict = rep.nonconstant_places.empty() ? ObstructionVerdict::no_nonconstancy : ObstructionVerdict::obstructed;
    if (!evidence.rational_point.empty()) {
        BrInvariant sum = BrInvariant::zero();
        for (const auto& r : evidence.rational_point) sum = sum + r.invariant;
        rep.reciprocity_sum = sum;
    }
    return rep;
}

}  // namespace k3br
