#include "k3br/algebra/numeric.hpp"

#include <stdexcept>

namespace k3br {

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        return make_rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a rational number: '" + text + "'");
    }
}

std::string to_string(const BigInt& n) { return n.get_str(); }

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

BigInt pow(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

BigInt mod(const BigInt& n, const BigInt& m) {
    BigInt r;
    mpz_mod(r.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
    return r;
}

BigInt inverse_mod(const BigInt& a, const BigInt& m) {
    BigInt r;
    if (m == 1) return 0;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("not invertible modulo " + m.get_str());
    return r;
}

BigInt rational_mod(const Rational& q, const BigInt& m) {
    return mod(q.get_num() * inverse_mod(q.get_den(), m), m);
}

unsigned long valuation(const BigInt& n, const BigInt& p) {
    if (n == 0) throw std::domain_error("valuation of zero");
    BigInt rest;
    return mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

bool is_perfect_square(const Rational& q) {
    if (q < 0) return false;
    return mpz_perfect_square_p(q.get_num_mpz_t()) && mpz_perfect_square_p(q.get_den_mpz_t());
}

}  // namespace k3br
