#include "k3br/algebra/normal_form.hpp"

namespace k3br {

Division divide(const HomogPoly& p, std::span<const HomogPoly> gens) {
    const unsigned n = p.nvars();
    for (const auto& g : gens)
        if (g.nvars() != n) throw std::invalid_argument("divide: generators in a different variable set");

    Division out{std::vector<HomogPoly>(gens.size(), HomogPoly(n)), HomogPoly(n)};
    HomogPoly rest = p;
    Monomial shift(n);
    while (!rest.is_zero()) {
        const Monomial lead = rest.leading_monomial();
        const Rational lc = rest.leading_coefficient();
        bool reduced = false;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            const HomogPoly& g = gens[i];
            if (g.is_zero() || !divides(g.leading_monomial(), lead)) continue;
            for (unsigned v = 0; v < n; ++v) shift[v] = lead[v] - g.leading_monomial()[v];
            HomogPoly q = HomogPoly::monomial(lc / g.leading_coefficient(), shift);
            out.quotients[i] += q;
            rest -= q * g;
            reduced = true;
            break;
        }
        if (!reduced) {
            HomogPoly lt = HomogPoly::monomial(lc, lead);
            out.remainder += lt;
            rest -= lt;
        }
    }
    return out;
}

HomogPoly normal_form(const HomogPoly& p, std::span<const HomogPoly> gens) { return divide(p, gens).remainder; }

Membership ideal_member(const HomogPoly& p, std::span<const HomogPoly> gens) {
    return normal_form(p, gens).is_zero() ? Membership::member : Membership::inconclusive;
}

const char* to_string(Membership m) { return m == Membership::member ? "member" : "inconclusive"; }

}  // namespace k3br
