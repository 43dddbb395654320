#pragma once

// Kaehler differentials of F/F_2 in the basis du, dv (ds is eliminated
// through dg = 0), 2-forms as multiples of du ^ dv, and the identities for
// the global 2-form of the characteristic-2 fiber.

#include "k3br/charp/function_field.hpp"
#include "k3br/geometry/hypersurface.hpp"

#include <optional>
#include <string>
#include <utility>

namespace k3br {

/// A du + B dv.
struct OneForm {
    FnFieldElem A, B;

    OneForm operator+(const OneForm& o) const { return {A + o.A, B + o.B}; }
    bool operator==(const OneForm& o) const { return A == o.A && B == o.B; }
    bool is_zero() const { return A.is_zero() && B.is_zero(); }
};
OneForm operator*(const FnFieldElem& e, const OneForm& w);

/// C du ^ dv.
struct TwoForm {
    FnFieldElem C;

    bool operator==(const TwoForm& o) const { return C == o.C; }
    bool is_zero() const { return C.is_zero(); }
};
TwoForm operator*(const FnFieldElem& e, const TwoForm& w);

OneForm differential(const FnFieldElem& e);
/// A1 B2 - A2 B1, which is A1 B2 + A2 B1 in characteristic 2.
TwoForm wedge(const OneForm& a, const OneForm& b);
/// d(A du + B dv) = (dB/du - dA/dv) du ^ dv.
TwoForm exterior_derivative(const OneForm& w);
/// de / e.
OneForm dlog(const FnFieldElem& e);

/// The K3 reduction mod 2 and its function field.
const FunctionField& k3_function_field();

/// eta1 = G_w / x^3, eta2 = z / x in F.
std::pair<FnFieldElem, FnFieldElem> log_form_functions(const FunctionField& F, const HomogPoly& G);

struct LogFormSides {
    TwoForm dlog_wedge;    // d(eta1)/eta1 ^ d(eta2)/eta2
    TwoForm omega;         // du ^ dv / (G_w / x^3)
    TwoForm d_wedge;       // d(eta1) ^ d(eta2)
    TwoForm eta2_du_dv;    // eta2 du ^ dv
};

LogFormSides log_form_sides(const FunctionField& F, const HomogPoly& G, const FnFieldElem& eta1,
                         const FnFieldElem& eta2);

/// dlog(eta1) ^ dlog(eta2) = du ^ dv / g_s and d(eta1) ^ dv = v du ^ dv, exactly in F.
bool lemma3_check();

/// omega_{p,q} = d(x_i/x_p) ^ d(x_j/x_p) / (x_p^-3 dG/dx_q) with {i, j} the
/// complement of {p, q}, as a 2-form in F. nullopt when dG/dx_q is zero in F.
std::optional<TwoForm> chart_omega(const FunctionField& F, const HomogPoly& G, unsigned p, unsigned q);

struct GlueResult {
    bool checked = false;
    bool equal = false;
    std::string reason;
};

GlueResult chart_glue_check(const FunctionField& F, const HomogPoly& G, std::pair<unsigned, unsigned> pq,
                            std::pair<unsigned, unsigned> pq2);
/// On the K3 reduction.
GlueResult chart_glue_check(std::pair<unsigned, unsigned> pq, std::pair<unsigned, unsigned> pq2);

/// #X(F_2) even.
bool is_ordinary(const Hypersurface& surface);

}  // namespace k3br
