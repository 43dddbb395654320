#include "k3br/charp/f2poly.hpp"

#include <stdexcept>

namespace k3br {

// ---------------------------------------------------------------- F2Poly

F2Poly F2Poly::monomial(unsigned degree) {
    F2Poly p;
    p.flip(degree);
    return p;
}

F2Poly F2Poly::from_bits(std::uint64_t bits) {
    F2Poly p;
    if (bits) p.w_.push_back(bits);
    return p;
}

void F2Poly::trim() {
    while (!w_.empty() && w_.back() == 0) w_.pop_back();
}

int F2Poly::degree() const {
    if (w_.empty()) return -1;
    return static_cast<int>(64 * (w_.size() - 1) + 63 - __builtin_clzll(w_.back()));
}

bool F2Poly::coeff(unsigned i) const {
    const unsigned k = i / 64;
    return k < w_.size() && ((w_[k] >> (i % 64)) & 1);
}

void F2Poly::flip(unsigned i) {
    const unsigned k = i / 64;
    if (k >= w_.size()) w_.resize(k + 1, 0);
    w_[k] ^= std::uint64_t(1) << (i % 64);
    trim();
}

F2Poly& F2Poly::operator+=(const F2Poly& o) {
    if (o.w_.size() > w_.size()) w_.resize(o.w_.size(), 0);
    for (std::size_t i = 0; i < o.w_.size(); ++i) w_[i] ^= o.w_[i];
    trim();
    return *this;
}

F2Poly F2Poly::operator+(const F2Poly& o) const {
    F2Poly r = *this;
    r += o;
    return r;
}

F2Poly F2Poly::shifted(unsigned k) const {
    if (is_zero()) return {};
    F2Poly r;
    const unsigned words = k / 64, bits = k % 64;
    r.w_.assign(w_.size() + words + 1, 0);
    for (std::size_t i = 0; i < w_.size(); ++i) {
        r.w_[i + words] ^= w_[i] << bits;
        if (bits) r.w_[i + words + 1] ^= w_[i] >> (64 - bits);
    }
    r.trim();
    return r;
}

F2Poly F2Poly::operator*(const F2Poly& o) const {
    if (is_zero() || o.is_zero()) return {};
    F2Poly r;
    r.w_.assign(w_.size() + o.w_.size() + 1, 0);
    for (std::size_t i = 0; i < w_.size(); ++i)
        for (unsigned b = 0; b < 64; ++b) {
            if (!((w_[i] >> b) & 1)) continue;
            const std::size_t shift = 64 * i + b, words = shift / 64, bits = shift % 64;
            for (std::size_t j = 0; j < o.w_.size(); ++j) {
                r.w_[j + words] ^= o.w_[j] << bits;
                if (bits) r.w_[j + words + 1] ^= o.w_[j] >> (64 - bits);
            }
        }
    r.trim();
    return r;
}

F2Poly F2Poly::derivative() const {
    // d(v^i) = i v^(i-1): keep odd powers, shift down by one.
    F2Poly r;
    for (int i = 1; i <= degree(); i += 2)
        if (coeff(i)) r.flip(i - 1);
    return r;
}

std::string F2Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        if (!coeff(i)) continue;
        if (!out.empty()) out += " + ";
        if (i == 0)
            out += "1";
        else
            out += var + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return out;
}

F2PolyDivision divmod(const F2Poly& a, const F2Poly& b) {
    if (b.is_zero()) throw std::domain_error("F2Poly division by zero");
    F2Poly q, r = a;
    const int db = b.degree();
    while (r.degree() >= db) {
        const unsigned k = r.degree() - db;
        q.flip(k);
        r += b.shifted(k);
    }
    return {q, r};
}

F2Poly gcd(F2Poly a, F2Poly b) {
    while (!b.is_zero()) {
        F2Poly r = divmod(a, b).rem;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

F2Poly exact_div(const F2Poly& a, const F2Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::logic_error("F2Poly exact division has a remainder");
    return q;
}

// -------------------------------------------------------------- F2BiPoly

F2BiPoly::F2BiPoly(F2Poly c) {
    if (!c.is_zero()) c_.push_back(std::move(c));
}

F2BiPoly F2BiPoly::monomial(unsigned i, unsigned j) {
    F2BiPoly p;
    p.c_.resize(i + 1);
    p.c_[i] = F2Poly::monomial(j);
    return p;
}

void F2BiPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const F2Poly& F2BiPoly::coeff(unsigned i) const {
    static const F2Poly zero;
    return i < c_.size() ? c_[i] : zero;
}

F2BiPoly F2BiPoly::operator+(const F2BiPoly& o) const {
    F2BiPoly r = *this;
    if (o.c_.size() > r.c_.size()) r.c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
    r.trim();
    return r;
}

F2BiPoly F2BiPoly::operator*(const F2BiPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    F2BiPoly r;
    r.c_.resize(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    }
    r.trim();
    return r;
}

F2BiPoly F2BiPoly::operator*(const F2Poly& k) const {
    F2BiPoly r = *this;
    for (auto& c : r.c_) c = c * k;
    r.trim();
    return r;
}

F2BiPoly F2BiPoly::shifted_u(unsigned k) const {
    if (is_zero()) return {};
    F2BiPoly r;
    r.c_.assign(k, F2Poly());
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

F2BiPoly F2BiPoly::derivative_u() const {
    F2BiPoly r;
    for (std::size_t i = 1; i < c_.size(); ++i) r.c_.push_back(i % 2 ? c_[i] : F2Poly());
    r.trim();
    return r;
}

F2BiPoly F2BiPoly::derivative_v() const {
    F2BiPoly r = *this;
    for (auto& c : r.c_) c = c.derivative();
    r.trim();
    return r;
}

F2Poly F2BiPoly::content() const {
    F2Poly g;
    for (const auto& c : c_) {
        g = gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

std::string F2BiPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree_u(); i >= 0; --i) {
        const F2Poly& c = c_[i];
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        const std::string upow = i == 0 ? "" : (i == 1 ? "u" : "u^" + std::to_string(i));
        if (upow.empty())
            out += c.to_string();
        else if (c.is_one())
            out += upow;
        else
            out += "(" + c.to_string() + ")*" + upow;
    }
    return out;
}

namespace {

F2BiPoly primitive_part(const F2BiPoly& a) {
    if (a.is_zero()) return a;
    return exact_div(a, a.content());
}

F2BiPoly pseudo_remainder(F2BiPoly a, const F2BiPoly& b) {
    const int db = b.degree_u();
    const F2Poly& lb = b.leading();
    while (!a.is_zero() && a.degree_u() >= db) {
        const unsigned k = a.degree_u() - db;
        const F2Poly la = a.leading();
        a = a * lb + b.shifted_u(k) * la;
    }
    return a;
}

}  // namespace

F2BiPoly gcd(const F2BiPoly& a, const F2BiPoly& b) {
    if (a.is_zero()) return b.is_zero() ? b : primitive_part(b) * b.content();
    if (b.is_zero()) return primitive_part(a) * a.content();
    const F2Poly cont = gcd(a.content(), b.content());
    F2BiPoly x = primitive_part(a), y = primitive_part(b);
    if (x.degree_u() < y.degree_u()) std::swap(x, y);
    while (!y.is_zero()) {
        F2BiPoly r = primitive_part(pseudo_remainder(x, y));
        x = std::move(y);
        y = std::move(r);
    }
    return x * cont;
}

F2BiPoly exact_div(const F2BiPoly& a, const F2Poly& k) {
    std::vector<F2Poly> c;
    for (const auto& x : a.coeffs()) c.push_back(exact_div(x, k));
    F2BiPoly r;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!c[i].is_zero()) r = r + F2BiPoly(c[i]).shifted_u(static_cast<unsigned>(i));
    return r;
}

F2BiPoly exact_div(const F2BiPoly& a, const F2BiPoly& b) {
    if (b.is_zero()) throw std::domain_error("F2BiPoly division by zero");
    F2BiPoly q, r = a;
    const int db = b.degree_u();
    while (!r.is_zero()) {
        if (r.degree_u() < db) throw std::logic_error("F2BiPoly exact division has a remainder");
        const unsigned k = r.degree_u() - db;
        const F2BiPoly t = F2BiPoly(exact_div(r.leading(), b.leading())).shifted_u(k);
        q = q + t;
        r = r + t * b;
    }
    return q;
}

// ----------------------------------------------------------------- F2Rat

F2Rat::F2Rat(F2BiPoly num) : num_(std::move(num)), den_(F2BiPoly::one()) {}

F2Rat::F2Rat(F2BiPoly num, F2BiPoly den) {
    if (den.is_zero()) throw std::domain_error("F2Rat with zero denominator");
    if (num.is_zero()) {
        den_ = F2BiPoly::one();
        return;
    }
    const F2BiPoly g = gcd(num, den);
    num_ = g.is_one() ? std::move(num) : exact_div(num, g);
    den_ = g.is_one() ? std::move(den) : exact_div(den, g);
}

F2Rat F2Rat::operator+(const F2Rat& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return F2Rat(num_ + o.num_, den_);
    return F2Rat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

F2Rat F2Rat::operator*(const F2Rat& o) const {
    if (is_zero() || o.is_zero()) return {};
    // Cross-cancel first to keep intermediate sizes down.
    const F2BiPoly g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
    const F2BiPoly n = exact_div(num_, g1) * exact_div(o.num_, g2);
    const F2BiPoly d = exact_div(den_, g2) * exact_div(o.den_, g1);
    F2Rat r;
    r.num_ = n;
    r.den_ = d;
    return r;
}

F2Rat F2Rat::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero in F_2(u, v)");
    F2Rat r;
    r.num_ = den_;
    r.den_ = num_;
    return r;
}

F2Rat F2Rat::derivative_u() const {
    // (n/d)' = (n'd + nd') / d^2 in characteristic 2.
    return F2Rat(num_.derivative_u() * den_ + num_ * den_.derivative_u(), den_ * den_);
}

F2Rat F2Rat::derivative_v() const {
    return F2Rat(num_.derivative_v() * den_ + num_ * den_.derivative_v(), den_ * den_);
}

std::string F2Rat::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace k3br
