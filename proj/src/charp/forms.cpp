#include "k3br/charp/forms.hpp"
#include "k3br/algebra/poly_text.hpp"
#include "k3br/geometry/enumeration.hpp"

namespace k3br {

OneForm operator*(const FnFieldElem& e, const OneForm& w) { return {e * w.A, e * w.B}; }
TwoForm operator*(const FnFieldElem& e, const TwoForm& w) { return {e * w.C}; }

OneForm differential(const FnFieldElem& e) { return {e.d_du(), e.d_dv()}; }

TwoForm wedge(const OneForm& a, const OneForm& b) { return {a.A * b.B + a.B * b.A}; }

TwoForm exterior_derivative(const OneForm& w) { return {w.B.d_du() + w.A.d_dv()}; }

OneForm dlog(const FnFieldElem& e) { return e.inverse() * differential(e); }

const FunctionField& k3_function_field() {
    static const FunctionField F(Hypersurface::k3_quartic().equation());
    return F;
}

std::pair<FnFieldElem, FnFieldElem> log_form_functions(const FunctionField& F, const HomogPoly& G) {
    return {F.from_poly(G.partial(3)), F.v()};
}

LogFormSides log_form_sides(const FunctionField& F, const HomogPoly& G, const FnFieldElem& eta1,
                         const FnFieldElem& eta2) {
    const FnFieldElem gw = F.from_poly(G.partial(3));
    const TwoForm du_dv{F.one()};
    LogFormSides s{wedge(dlog(eta1), dlog(eta2)), gw.inverse() * du_dv, wedge(differential(eta1), differential(eta2)),
                  eta2 * du_dv};
    return s;
}

bool lemma3_check() {
    const FunctionField& F = k3_function_field();
    const HomogPoly G = Hypersurface::k3_quartic().equation();
    const auto [eta1, eta2] = log_form_functions(F, G);
    const LogFormSides s = log_form_sides(F, G, eta1, eta2);
    return s.dlog_wedge == s.omega && s.d_wedge == s.eta2_du_dv;
}

std::optional<TwoForm> chart_omega(const FunctionField& F, const HomogPoly& G, unsigned p, unsigned q) {
    if (p > 3 || q > 3 || p == q) throw std::invalid_argument("chart indices must be distinct and in 0..3");
    unsigned ij[2], n = 0;
    for (unsigned k = 0; k < 4; ++k)
        if (k != p && k != q) ij[n++] = k;
    const FnFieldElem xp = F.coordinate(p);
    const FnFieldElem inv_xp = xp.inverse();
    const FnFieldElem denom = F.from_poly(G.partial(q)) * inv_xp.pow(3);
    if (denom.is_zero()) return std::nullopt;
    const TwoForm top =
        wedge(differential(F.coordinate(ij[0]) * inv_xp), differential(F.coordinate(ij[1]) * inv_xp));
    return denom.inverse() * top;
}

GlueResult chart_glue_check(const FunctionField& F, const HomogPoly& G, std::pair<unsigned, unsigned> pq,
                            std::pair<unsigned, unsigned> pq2) {
    GlueResult r;
    const auto a = chart_omega(F, G, pq.first, pq.second);
    const auto b = chart_omega(F, G, pq2.first, pq2.second);
    if (!a || !b) {
        r.reason = "partial derivative vanishes in the function field";
        return r;
    }
    r.checked = true;
    r.equal = *a == *b;
    return r;
}

GlueResult chart_glue_check(std::pair<unsigned, unsigned> pq, std::pair<unsigned, unsigned> pq2) {
    return chart_glue_check(k3_function_field(), Hypersurface::k3_quartic().equation(), pq, pq2);
}

bool is_ordinary(const Hypersurface& surface) { return count_points(surface, 2) % 2 == 0; }

}  // namespace k3br
