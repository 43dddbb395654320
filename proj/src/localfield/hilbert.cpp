#include "k3br/localfield/hilbert.hpp"
#include "k3br/algebra/factor.hpp"

#include <algorithm>
#include <stdexcept>

namespace k3br {

Place Place::prime(BigInt p) {
    if (!is_prime(p)) throw std::invalid_argument(p.get_str() + " is not prime");
    Place v;
    v.infinite_ = false;
    v.p_ = std::move(p);
    return v;
}

const BigInt& Place::p() const {
    if (infinite_) throw std::logic_error("the real place has no prime");
    return p_;
}

bool Place::operator<(const Place& o) const {
    if (infinite_ != o.infinite_) return !infinite_;
    return p_ < o.p_;
}

Place Place::parse(const std::string& text) {
    if (text == "inf" || text == "oo" || text == "infinity" || text == "Infinity") return infinity();
    try {
        return prime(BigInt(text));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a place of Q: '" + text + "'");
    }
}

namespace {

int legendre(const BigInt& u, const BigInt& p) {
    return mpz_legendre(mod(u, p).get_mpz_t(), p.get_mpz_t());
}

// (-1)^(e) as +-1.
int sign_of(unsigned long e) { return e % 2 == 0 ? 1 : -1; }

// Local formula with a = p^alpha u, b = p^beta v; u, v given by residues
// modulo p (odd p) or modulo 8 (p = 2).
int symbol_from_units(const BigInt& p, long alpha, const BigInt& u, long beta, const BigInt& v) {
    if (p == 2) {
        unsigned long ur = mod(u, 8).get_ui(), vr = mod(v, 8).get_ui();
        unsigned long eps_u = ((ur - 1) / 2) % 2, eps_v = ((vr - 1) / 2) % 2;
        unsigned long om_u = ((ur * ur - 1) / 8) % 2, om_v = ((vr * vr - 1) / 8) % 2;
        unsigned long a_mod = static_cast<unsigned long>(((alpha % 2) + 2) % 2);
        unsigned long b_mod = static_cast<unsigned long>(((beta % 2) + 2) % 2);
        return sign_of(eps_u * eps_v + a_mod * om_v + b_mod * om_u);
    }
    unsigned long eps_p = mod((p - 1) / 2, 2).get_ui();
    unsigned long a_mod = static_cast<unsigned long>(((alpha % 2) + 2) % 2);
    unsigned long b_mod = static_cast<unsigned long>(((beta % 2) + 2) % 2);
    int s = sign_of(a_mod * b_mod * eps_p);
    if (b_mod) s *= legendre(u, p);
    if (a_mod) s *= legendre(v, p);
    return s;
}

}  // namespace

int hilbert_symbol(const Rational& a, const Rational& b, const Place& v) {
    if (a == 0 || b == 0) throw std::invalid_argument("Hilbert symbol of zero");
    if (v.is_infinite()) return (a < 0 && b < 0) ? -1 : 1;
    const BigInt& p = v.p();
    unsigned prec = p == 2 ? 3 : 1;
    return hilbert_symbol_padic(PadicNum::from_rational(a, p, prec), PadicNum::from_rational(b, p, prec));
}

int hilbert_symbol_padic(const PadicNum& a, const PadicNum& b) {
    if (a.prime() != b.prime()) throw std::invalid_argument("Hilbert symbol over different primes");
    if (a.is_exact_zero() || b.is_exact_zero()) throw std::invalid_argument("Hilbert symbol of zero");
    const BigInt& p = a.prime();
    unsigned need = p == 2 ? 3 : 1;
    if (a.precision() < need || b.precision() < need)
        throw InsufficientPrecision("Hilbert symbol at " + p.get_str() + " needs unit parts modulo " + p.get_str() +
                                    "^" + std::to_string(need));
    return symbol_from_units(p, a.valuation(), a.unit(), b.valuation(), b.unit());
}

BrInvariant invariant(int symbol) {
    if (symbol != 1 && symbol != -1) throw std::invalid_argument("Hilbert symbol must be +1 or -1");
    return symbol == 1 ? BrInvariant::zero() : BrInvariant::half();
}

std::vector<Place> relevant_places(const Rational& a, const Rational& b) {
    std::vector<BigInt> primes{2};
    for (const BigInt* n : {&a.get_num(), &a.get_den(), &b.get_num(), &b.get_den()}) {
        if (*n == 0) throw std::invalid_argument("relevant_places of zero");
        for (const auto& pp : factor(*n)) primes.push_back(pp.prime);
    }
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    std::vector<Place> places{Place::infinity()};
    for (auto& p : primes) places.push_back(Place::prime(p));
    return places;
}

bool product_formula_check(const Rational& a, const Rational& b) {
    int prod = 1;
    for (const auto& v : relevant_places(a, b)) prod *= hilbert_symbol(a, b, v);
    return prod == 1;
}

}  // namespace k3br
