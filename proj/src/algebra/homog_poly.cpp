#include "k3br/algebra/homog_poly.hpp"

#include <numeric>

namespace k3br {

unsigned total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0u); }

int grlex_compare(const Monomial& a, const Monomial& b) {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

bool divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

HomogPoly::HomogPoly(unsigned nvars) : nvars_(nvars) {}

HomogPoly HomogPoly::variable(unsigned nvars, unsigned index) {
    if (index >= nvars) throw std::out_of_range("variable index out of range");
    Monomial m(nvars, 0);
    m[index] = 1;
    return monomial(1, m);
}

HomogPoly HomogPoly::constant(unsigned nvars, const Rational& c) { return monomial(c, Monomial(nvars, 0)); }

HomogPoly HomogPoly::monomial(const Rational& c, const Monomial& m) {
    HomogPoly p(static_cast<unsigned>(m.size()));
    p.add_term(m, c);
    return p;
}

const Monomial& HomogPoly::leading_monomial() const {
    if (terms_.empty()) throw std::logic_error("leading monomial of the zero polynomial");
    return terms_.begin()->first;
}

const Rational& HomogPoly::leading_coefficient() const {
    if (terms_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
    return terms_.begin()->second;
}

Rational HomogPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool HomogPoly::is_integral() const {
    for (const auto& [m, c] : terms_)
        if (c.get_den() != 1) return false;
    return true;
}

void HomogPoly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    if (m.size() != nvars_) throw std::invalid_argument("monomial arity mismatch");
    unsigned d = total_degree(m);
    if (terms_.empty()) {
        degree_ = d;
    } else if (d != degree_) {
        throw std::invalid_argument("term of degree " + std::to_string(d) + " added to a homogeneous polynomial of degree " +
                                    std::to_string(degree_));
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
    if (terms_.empty()) degree_ = 0;
}

void HomogPoly::check_compatible(const HomogPoly& o) const {
    if (o.nvars_ != nvars_) throw std::invalid_argument("polynomials in different variable sets");
}

HomogPoly HomogPoly::operator-() const {
    HomogPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

HomogPoly& HomogPoly::operator+=(const HomogPoly& o) {
    check_compatible(o);
    if (!o.is_zero() && !is_zero() && o.degree_ != degree_)
        throw std::invalid_argument("sum of homogeneous polynomials of degrees " + std::to_string(degree_) + " and " +
                                    std::to_string(o.degree_));
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

HomogPoly& HomogPoly::operator-=(const HomogPoly& o) { return *this += -o; }

HomogPoly HomogPoly::operator+(const HomogPoly& o) const {
    HomogPoly r = *this;
    r += o;
    return r;
}

HomogPoly HomogPoly::operator-(const HomogPoly& o) const {
    HomogPoly r = *this;
    r -= o;
    return r;
}

HomogPoly HomogPoly::operator*(const HomogPoly& o) const {
    check_compatible(o);
    HomogPoly r(nvars_);
    Monomial prod(nvars_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            for (unsigned i = 0; i < nvars_; ++i) prod[i] = ma[i] + mb[i];
            r.add_term(prod, ca * cb);
        }
    }
    return r;
}

HomogPoly HomogPoly::operator*(const Rational& c) const {
    if (c == 0) return HomogPoly(nvars_);
    HomogPoly r = *this;
    for (auto& [m, coeff] : r.terms_) coeff *= c;
    return r;
}

HomogPoly operator*(const Rational& c, const HomogPoly& p) { return p * c; }

HomogPoly HomogPoly::pow(unsigned e) const {
    HomogPoly r = constant(nvars_, 1);
    HomogPoly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

bool HomogPoly::operator==(const HomogPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

HomogPoly HomogPoly::partial(unsigned var) const {
    if (var >= nvars_) throw std::out_of_range("partial: variable index out of range");
    HomogPoly r(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Monomial d = m;
        --d[var];
        r.add_term(d, c * m[var]);
    }
    return r;
}

HomogPoly HomogPoly::reduce_mod(const BigInt& p) const {
    HomogPoly r(nvars_);
    for (const auto& [m, c] : terms_) r.add_term(m, Rational(rational_mod(c, p)));
    return r;
}

HomogPoly HomogPoly::monic() const {
    if (is_zero()) return *this;
    return *this * (1 / leading_coefficient());
}

std::vector<std::string> default_names(unsigned nvars) {
    if (nvars == 4) return {"x", "y", "z", "w"};
    std::vector<std::string> names;
    for (unsigned i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

std::string HomogPoly::to_string(std::span<const std::string> names) const {
    std::vector<std::string> fallback;
    if (names.empty()) {
        fallback = default_names(nvars_);
        names = fallback;
    }
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational mag = abs(c);
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        std::string mono;
        for (unsigned v = 0; v < nvars_; ++v) {
            if (m[v] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[v];
            if (m[v] > 1) mono += "^" + std::to_string(m[v]);
        }
        if (mono.empty()) {
            out += k3br::to_string(mag);
        } else if (mag == 1) {
            out += mono;
        } else {
            out += k3br::to_string(mag) + "*" + mono;
        }
    }
    return out;
}

ModRing::ModRing(BigInt modulus) : n_(std::move(modulus)) {
    if (n_ < 1) throw std::invalid_argument("modulus must be positive");
}

ModRing::value_type ModRing::add(const value_type& a, const value_type& b) const {
    BigInt s = a + b;
    if (s >= n_) s -= n_;
    return s;
}

ModRing::value_type ModRing::sub(const value_type& a, const value_type& b) const { return mod(a - b, n_); }

ModRing::value_type ModRing::mul(const value_type& a, const value_type& b) const { return mod(a * b, n_); }

}  // namespace k3br
