#include "k3br/localfield/padic.hpp"

#include <algorithm>

namespace k3br {

PadicNum PadicNum::zero(const BigInt& p) { return PadicNum(p); }

PadicNum::PadicNum(BigInt p, long valuation, BigInt unit, unsigned precision)
    : p_(std::move(p)), valuation_(valuation), precision_(precision) {
    if (precision_ == 0) throw std::invalid_argument("p-adic precision must be at least 1");
    unit_ = mod(unit, pow(p_, precision_));
    if (mpz_divisible_p(unit_.get_mpz_t(), p_.get_mpz_t()))
        throw std::invalid_argument("unit part " + unit.get_str() + " is divisible by " + p_.get_str());
}

PadicNum PadicNum::from_rational(const Rational& q, const BigInt& p, unsigned precision) {
    if (q == 0) return zero(p);
    BigInt num = q.get_num(), den = q.get_den();
    long v = 0;
    BigInt rest;
    v += static_cast<long>(mpz_remove(rest.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t()));
    num = rest;
    v -= static_cast<long>(mpz_remove(rest.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()));
    den = rest;
    BigInt modulus = pow(p, precision);
    return PadicNum(p, v, num * inverse_mod(den, modulus), precision);
}

PadicNum PadicNum::from_residue(const BigInt& residue, const BigInt& p, unsigned absolute_precision) {
    if (absolute_precision == 0) throw InsufficientPrecision("no p-adic digits known");
    BigInt r = mod(residue, pow(p, absolute_precision));
    if (r == 0)
        throw InsufficientPrecision("value vanishes modulo " + p.get_str() + "^" + std::to_string(absolute_precision));
    BigInt unit;
    long v = static_cast<long>(mpz_remove(unit.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t()));
    return PadicNum(p, v, unit, absolute_precision - static_cast<unsigned>(v));
}

long PadicNum::valuation() const {
    if (!valuation_) throw std::logic_error("valuation of exact zero");
    return *valuation_;
}

const BigInt& PadicNum::unit() const {
    if (!valuation_) throw std::logic_error("unit part of exact zero");
    return unit_;
}

long PadicNum::absolute_precision() const { return valuation() + static_cast<long>(precision_); }

void PadicNum::check_same_prime(const PadicNum& o) const {
    if (p_ != o.p_) throw std::invalid_argument("p-adic numbers over different primes");
}

PadicNum PadicNum::operator*(const PadicNum& o) const {
    check_same_prime(o);
    if (is_exact_zero() || o.is_exact_zero()) return zero(p_);
    unsigned k = std::min(precision_, o.precision_);
    return PadicNum(p_, *valuation_ + *o.valuation_, unit_ * o.unit_, k);
}

PadicNum PadicNum::operator/(const PadicNum& o) const {
    check_same_prime(o);
    if (o.is_exact_zero()) throw std::domain_error("p-adic division by zero");
    if (is_exact_zero()) return zero(p_);
    unsigned k = std::min(precision_, o.precision_);
    return PadicNum(p_, *valuation_ - *o.valuation_, unit_ * inverse_mod(o.unit_, pow(p_, k)), k);
}

PadicNum PadicNum::operator-() const {
    if (is_exact_zero()) return *this;
    return PadicNum(p_, *valuation_, -unit_, precision_);
}

PadicNum PadicNum::operator+(const PadicNum& o) const {
    check_same_prime(o);
    if (is_exact_zero()) return o;
    if (o.is_exact_zero()) return *this;
    long v = std::min(*valuation_, *o.valuation_);
    long abs_prec = std::min(absolute_precision(), o.absolute_precision());
    BigInt sum = unit_ * pow(p_, static_cast<unsigned long>(*valuation_ - v)) +
                 o.unit_ * pow(p_, static_cast<unsigned long>(*o.valuation_ - v));
    unsigned digits = static_cast<unsigned>(abs_prec - v);
    sum = mod(sum, pow(p_, digits));
    if (sum == 0)
        throw InsufficientPrecision("cancellation: sum is zero modulo " + p_.get_str() + "^" + std::to_string(abs_prec));
    BigInt unit;
    long extra = static_cast<long>(mpz_remove(unit.get_mpz_t(), sum.get_mpz_t(), p_.get_mpz_t()));
    return PadicNum(p_, v + extra, unit, digits - static_cast<unsigned>(extra));
}

PadicNum PadicNum::operator-(const PadicNum& o) const { return *this + (-o); }

PadicNum PadicNum::truncate(unsigned k) const {
    if (is_exact_zero()) return *this;
    if (k == 0 || k > precision_) throw std::invalid_argument("truncate: bad precision");
    return PadicNum(p_, *valuation_, unit_, k);
}

std::string PadicNum::to_string() const {
    if (is_exact_zero()) return "0";
    std::string out;
    if (*valuation_ != 0) out = p_.get_str() + "^" + std::to_string(*valuation_) + " * ";
    return out + unit_.get_str() + " (mod " + p_.get_str() + "^" + std::to_string(precision_) + ")";
}

}  // namespace k3br
