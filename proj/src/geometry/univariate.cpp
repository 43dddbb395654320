#include "k3br/geometry/univariate.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace k3br {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UniPoly::operator()(const Rational& t) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

int UniPoly::sign_at(const Rational& t) const { return sgn((*this)(t)); }

UniPoly UniPoly::derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
    return UniPoly(std::move(d));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-() const {
    std::vector<Rational> r(c_);
    for (auto& x : r) x = -x;
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rational> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return {};
    std::vector<Rational> r(c_);
    const Rational lc = leading();
    for (auto& x : r) x /= lc;
    return UniPoly(std::move(r));
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& a = c_[i];
        if (a == 0) continue;
        if (!first) os << (a < 0 ? " - " : " + ");
        else if (a < 0) os << "-";
        first = false;
        const Rational m = abs(a);
        if (i == 0 || m != 1) os << m.get_str() << (i > 0 ? "*" : "");
        if (i > 0) os << var << (i > 1 ? "^" + std::to_string(i) : "");
    }
    return os.str();
}

QuotRem divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> r = a.coeffs();
    std::vector<Rational> q(std::max(0, a.degree() - b.degree() + 1));
    const int db = b.degree();
    for (int i = a.degree(); i >= db; --i) {
        if (r[i] == 0) continue;
        const Rational f = r[i] / b.leading();
        q[i - db] = f;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.coeffs()[j];
    }
    return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = divmod(x, y).rem;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

UniPoly squarefree_part(const UniPoly& p) {
    if (p.degree() <= 0) return p.monic();
    return divmod(p, gcd(p, p.derivative())).quot.monic();
}

std::vector<UniPoly> sturm_chain(const UniPoly& p) {
    std::vector<UniPoly> chain{p};
    if (p.is_zero()) return chain;
    UniPoly d = p.derivative();
    while (!d.is_zero()) {
        chain.push_back(d);
        const std::size_t n = chain.size();
        d = -divmod(chain[n - 2], chain[n - 1]).rem;
    }
    return chain;
}

int sign_variations(const std::vector<UniPoly>& chain, const Rational& t) {
    int count = 0, last = 0;
    for (const auto& q : chain) {
        const int s = q.sign_at(t);
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

int Interval::sign() const {
    if (lo > 0) return 1;
    if (hi < 0) return -1;
    if (lo == 0 && hi == 0) return 0;
    return 2;
}

std::string Interval::to_string() const {
    if (is_point()) return lo.get_str();
    return "[" + lo.get_str() + ", " + hi.get_str() + "]";
}

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }

Interval operator*(const Interval& a, const Interval& b) {
    const Rational c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
}

Interval evaluate(const UniPoly& p, const Interval& x) {
    Interval acc = Interval::point(0);
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + Interval::point(*it);
    return acc;
}

namespace {

// Cauchy bound: every root satisfies |t| < 1 + max |a_i / a_n|.
Rational root_bound(const UniPoly& p) {
    Rational m = 0;
    for (int i = 0; i < p.degree(); ++i) m = std::max<Rational>(m, abs(p.coeffs()[i] / p.leading()));
    return m + 1;
}

void isolate(const std::vector<UniPoly>& chain, const Rational& lo, const Rational& hi, int vlo, int vhi,
             std::vector<Interval>& out) {
    // Roots in (lo, hi]: vlo - vhi; endpoints are never roots here.
    const int n = vlo - vhi;
    if (n == 0) return;
    if (n == 1) {
        out.push_back({lo, hi});
        return;
    }
    const Rational mid = (lo + hi) / 2;
    const int vmid = sign_variations(chain, mid);
    if (chain.front().sign_at(mid) == 0) {
        // Split around the exact root at mid, keeping endpoints root-free.
        Rational eps = (hi - lo) / 4;
        while (true) {
            const Rational a = mid - eps, b = mid + eps;
            if (chain.front().sign_at(a) != 0 && chain.front().sign_at(b) != 0) {
                const int va = sign_variations(chain, a), vb = sign_variations(chain, b);
                if (va - vb == 1) {
                    isolate(chain, lo, a, vlo, va, out);
                    out.push_back(Interval::point(mid));
                    isolate(chain, b, hi, vb, vhi, out);
                    return;
                }
            }
            eps /= 2;
        }
    }
    isolate(chain, lo, mid, vlo, vmid, out);
    isolate(chain, mid, hi, vmid, vhi, out);
}

}  // namespace

std::vector<Interval> isolate_real_roots(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("the zero polynomial has no isolated roots");
    const UniPoly q = squarefree_part(p);
    if (q.degree() <= 0) return {};
    const auto chain = sturm_chain(q);
    const Rational b = root_bound(q);
    std::vector<Interval> out;
    isolate(chain, -b, b, sign_variations(chain, -b), sign_variations(chain, b), out);
    return out;
}

Interval refine_root(const UniPoly& q, const Interval& iv) {
    if (iv.is_point()) return iv;
    const Rational mid = (iv.lo + iv.hi) / 2;
    const int sm = q.sign_at(mid);
    if (sm == 0) return Interval::point(mid);
    if (sm == q.sign_at(iv.lo)) return {mid, iv.hi};
    return {iv.lo, mid};
}

}  // namespace k3br
