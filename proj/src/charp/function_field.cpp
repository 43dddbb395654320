#include "k3br/charp/function_field.hpp"

namespace k3br {

namespace {

using SPoly = std::vector<F2Rat>;  // polynomial in s over F_2(u, v)

void trim(SPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

SPoly add(const SPoly& a, const SPoly& b) {
    SPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = r[i] + a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] + b[i];
    trim(r);
    return r;
}

SPoly mul(const SPoly& a, const SPoly& b) {
    if (a.empty() || b.empty()) return {};
    SPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) r[i + j] = r[i + j] + a[i] * b[j];
    }
    trim(r);
    return r;
}

// a = q*b + r with deg r < deg b; b nonzero.
std::pair<SPoly, SPoly> divmod(SPoly a, const SPoly& b) {
    trim(a);
    const std::size_t db = b.size() - 1;
    const F2Rat inv_lc = b.back().inverse();
    SPoly q(a.size() > db ? a.size() - db : 0);
    while (!a.empty() && a.size() - 1 >= db) {
        const std::size_t k = a.size() - 1 - db;
        const F2Rat f = a.back() * inv_lc;
        q[k] = f;
        for (std::size_t j = 0; j <= db; ++j)
            if (!b[j].is_zero()) a[k + j] = a[k + j] + f * b[j];
        trim(a);
    }
    trim(q);
    return {q, a};
}

F2BiPoly integral_coeff(const Rational& c) {
    if (c.get_den() != 1) throw std::invalid_argument("function field needs integral coefficients");
    return mpz_odd_p(c.get_num_mpz_t()) ? F2BiPoly::one() : F2BiPoly();
}

// P(1, u, v, s) as an s-polynomial.
SPoly dehomogenize(const HomogPoly& P) {
    if (P.nvars() != 4) throw std::invalid_argument("expected a polynomial in x, y, z, w");
    SPoly r;
    for (const auto& [m, c] : P.terms()) {
        if (integral_coeff(c).is_zero()) continue;
        if (r.size() <= m[3]) r.resize(m[3] + 1);
        r[m[3]] = r[m[3]] + F2Rat(F2BiPoly::monomial(m[1], m[2]));
    }
    trim(r);
    return r;
}

SPoly derivative_s(const SPoly& p) {
    SPoly r;
    for (std::size_t i = 1; i < p.size(); ++i) r.push_back(i % 2 ? p[i] : F2Rat());
    trim(r);
    return r;
}

}  // namespace

FunctionField::FunctionField(const HomogPoly& G) {
    SPoly g = dehomogenize(G);
    if (g.size() < 2) throw std::invalid_argument("G(1, u, v, s) has no positive degree in s over F_2");
    const F2Rat inv_lc = g.back().inverse();
    for (auto& c : g) c = c * inv_lc;
    g_ = std::move(g);

    SPoly gu, gv;
    for (const auto& c : g_) {
        gu.push_back(c.derivative_u());
        gv.push_back(c.derivative_v());
    }
    trim(gu);
    trim(gv);
    auto gs = std::make_shared<FnFieldElem>(*this, derivative_s(g_));
    if (gs->is_zero()) throw std::invalid_argument("g_s vanishes in F: the extension is inseparable");
    const FnFieldElem inv = gs->inverse();
    ds_du_ = std::make_shared<FnFieldElem>(FnFieldElem(*this, gu) * inv);
    ds_dv_ = std::make_shared<FnFieldElem>(FnFieldElem(*this, gv) * inv);
    g_s_ = gs;
}

FnFieldElem FunctionField::zero() const { return FnFieldElem(*this, {}); }
FnFieldElem FunctionField::one() const { return FnFieldElem(*this, {F2Rat::one()}); }
FnFieldElem FunctionField::u() const { return FnFieldElem(*this, {F2Rat(F2BiPoly::monomial(1, 0))}); }
FnFieldElem FunctionField::v() const { return FnFieldElem(*this, {F2Rat(F2BiPoly::monomial(0, 1))}); }
FnFieldElem FunctionField::s() const { return FnFieldElem(*this, {F2Rat(), F2Rat::one()}); }
FnFieldElem FunctionField::from_rat(const F2Rat& r) const { return FnFieldElem(*this, {r}); }
FnFieldElem FunctionField::from_poly(const HomogPoly& P) const { return FnFieldElem(*this, dehomogenize(P)); }

FnFieldElem FunctionField::coordinate(unsigned k) const {
    switch (k) {
        case 0: return one();
        case 1: return u();
        case 2: return v();
        case 3: return s();
    }
    throw std::invalid_argument("coordinate index out of range");
}

const FnFieldElem& FunctionField::ds_du() const { return *ds_du_; }
const FnFieldElem& FunctionField::ds_dv() const { return *ds_dv_; }
const FnFieldElem& FunctionField::g_s() const { return *g_s_; }

FnFieldElem::FnFieldElem(const FunctionField& field, std::vector<F2Rat> coeffs) : field_(&field) {
    trim(coeffs);
    const SPoly& g = field.modulus();
    if (coeffs.size() >= g.size()) coeffs = divmod(coeffs, g).second;
    coeffs.resize(field.degree());
    c_ = std::move(coeffs);
}

bool FnFieldElem::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

FnFieldElem FnFieldElem::operator+(const FnFieldElem& o) const { return FnFieldElem(*field_, add(c_, o.c_)); }

FnFieldElem FnFieldElem::operator*(const FnFieldElem& o) const {
    SPoly a = c_, b = o.c_;
    trim(a);
    trim(b);
    return FnFieldElem(*field_, mul(a, b));
}

FnFieldElem FnFieldElem::pow(unsigned e) const {
    FnFieldElem r = field_->one(), base = *this;
    for (; e; e >>= 1) {
        if (e & 1) r = r * base;
        if (e > 1) base = base * base;
    }
    return r;
}

FnFieldElem FnFieldElem::inverse() const {
    // Extended Euclid: track t with t * self = r (mod g).
    SPoly r0 = field_->modulus(), r1 = c_;
    trim(r1);
    if (r1.empty()) throw ZeroDivisor("inverse of zero in the function field");
    SPoly t0, t1{F2Rat::one()};
    while (r1.size() > 1) {
        auto [q, r] = divmod(r0, r1);
        SPoly t = add(t0, mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        t0 = std::move(t1);
        t1 = std::move(t);
        if (r1.empty()) throw ZeroDivisor("element shares a factor with the modulus; g is reducible");
    }
    const F2Rat inv = r1[0].inverse();
    for (auto& c : t1) c = c * inv;
    return FnFieldElem(*field_, t1);
}

FnFieldElem FnFieldElem::d_du() const {
    SPoly partial;
    for (const auto& c : c_) partial.push_back(c.derivative_u());
    FnFieldElem r(*field_, partial);
    return r + FnFieldElem(*field_, derivative_s(c_)) * field_->ds_du();
}

FnFieldElem FnFieldElem::d_dv() const {
    SPoly partial;
    for (const auto& c : c_) partial.push_back(c.derivative_v());
    FnFieldElem r(*field_, partial);
    return r + FnFieldElem(*field_, derivative_s(c_)) * field_->ds_dv();
}

std::string FnFieldElem::to_string() const {
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        const std::string spow = i == 0 ? "" : (i == 1 ? "s" : "s^" + std::to_string(i));
        if (spow.empty())
            out += c_[i].to_string();
        else if (c_[i].is_one())
            out += spow;
        else
            out += "(" + c_[i].to_string() + ")*" + spow;
    }
    return out.empty() ? "0" : out;
}

}  // namespace k3br
