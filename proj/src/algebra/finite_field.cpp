#include "k3br/algebra/finite_field.hpp"
#include "k3br/algebra/factor.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace k3br {

namespace {

// Conway polynomials C_{p,k}, constant term first, leading 1 implied.
struct ConwayEntry {
    unsigned p;
    std::array<unsigned, 2> quadratic;
    std::array<unsigned, 3> cubic;
};

constexpr ConwayEntry kConway[] = {
    {2, {1, 1}, {1, 1, 0}},    {3, {2, 2}, {1, 2, 0}},    {5, {2, 4}, {3, 3, 0}},
    {7, {3, 6}, {4, 0, 6}},    {11, {2, 7}, {9, 2, 0}},   {13, {2, 12}, {11, 2, 0}},
    {17, {3, 16}, {14, 1, 0}}, {19, {2, 18}, {17, 4, 0}}, {23, {5, 21}, {18, 2, 0}},
    {29, {2, 24}, {27, 2, 0}}, {31, {3, 29}, {28, 1, 0}},
};

std::vector<unsigned> conway_modulus(unsigned p, unsigned k) {
    if (k == 1) {
        if (p < 2 || p > 65521 || !is_prime(BigInt(p)))
            throw std::invalid_argument("unsupported prime field F_" + std::to_string(p));
        return {0, 1};
    }
    for (const auto& e : kConway) {
        if (e.p != p) continue;
        switch (k) {
        case 2: return {e.quadratic[0], e.quadratic[1], 1};
        case 3: return {e.cubic[0], e.cubic[1], e.cubic[2], 1};
        default: break;
        }
    }
    throw std::invalid_argument("no fixed modulus for F_" + std::to_string(p) + "^" + std::to_string(k));
}

}  // namespace

const FiniteField& FiniteField::get(unsigned p, unsigned k) {
    static std::mutex mutex;
    static std::map<std::pair<unsigned, unsigned>, std::unique_ptr<FiniteField>> registry;
    std::lock_guard lock(mutex);
    auto& slot = registry[{p, k}];
    if (!slot) slot.reset(new FiniteField(p, k));
    return *slot;
}

const FiniteField& FiniteField::of_order(unsigned long q) {
    auto [p, k] = prime_power(q);
    if (p == 0) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    return get(static_cast<unsigned>(p), k);
}

FiniteField::FiniteField(unsigned p, unsigned k) : p_(p), k_(k), modulus_(conway_modulus(p, k)) {
    q_ = 1;
    for (unsigned i = 0; i < k; ++i) q_ *= p;

    // Find the smallest generator of F_q^* by code, then tabulate powers.
    log_.assign(q_, 0);
    exp_.assign(q_, 0);
    for (value_type g = (q_ == 2 ? 1 : 2); g < q_; ++g) {
        value_type acc = 1;
        std::uint32_t n = 0;
        bool primitive = true;
        for (; n < q_ - 1; ++n) {
            exp_[n] = acc;
            acc = mul_slow(acc, g);
            if (acc == 1 && n + 1 < q_ - 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) break;
    }
    for (std::uint32_t n = 0; n < q_ - 1; ++n) log_[exp_[n]] = n;
}

FiniteField::value_type FiniteField::times_t(value_type a) const {
    // a * t reduced modulo the monic modulus.
    auto d = digits(a);
    unsigned top = d[k_ - 1];
    value_type out = 0;
    value_type place = 1;
    for (unsigned i = 0; i < k_; ++i) {
        unsigned lower = i == 0 ? 0 : d[i - 1];
        unsigned c = (lower + (p_ - (top * modulus_[i]) % p_)) % p_;
        out += c * place;
        place *= p_;
    }
    return out;
}

FiniteField::value_type FiniteField::mul_slow(value_type a, value_type b) const {
    if (k_ == 1) return static_cast<value_type>((std::uint64_t{a} * b) % p_);
    // Horner over the digits of b, most significant first.
    auto db = digits(b);
    value_type acc = 0;
    for (unsigned i = k_; i-- > 0;) {
        acc = times_t(acc);
        for (unsigned r = 0; r < db[i]; ++r) acc = add(acc, a);
    }
    return acc;
}

std::array<unsigned, 3> FiniteField::digits(value_type a) const {
    std::array<unsigned, 3> d{0, 0, 0};
    for (unsigned i = 0; i < k_; ++i) {
        d[i] = a % p_;
        a /= p_;
    }
    return d;
}

FiniteField::value_type FiniteField::add(value_type a, value_type b) const {
    if (k_ == 1) {
        value_type s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    value_type out = 0, place = 1;
    for (unsigned i = 0; i < k_; ++i) {
        unsigned s = a % p_ + b % p_;
        if (s >= p_) s -= p_;
        out += s * place;
        place *= p_;
        a /= p_;
        b /= p_;
    }
    return out;
}

FiniteField::value_type FiniteField::neg(value_type a) const {
    value_type out = 0, place = 1;
    for (unsigned i = 0; i < k_; ++i) {
        unsigned c = a % p_;
        out += (c == 0 ? 0 : p_ - c) * place;
        place *= p_;
        a /= p_;
    }
    return out;
}

FiniteField::value_type FiniteField::sub(value_type a, value_type b) const { return add(a, neg(b)); }

FiniteField::value_type FiniteField::mul(value_type a, value_type b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t e = log_[a] + log_[b];
    if (e >= q_ - 1) e -= q_ - 1;
    return exp_[e];
}

FiniteField::value_type FiniteField::inv(value_type a) const {
    if (a == 0) throw std::domain_error("inverse of zero in F_q");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FiniteField::value_type FiniteField::pow(value_type a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    return exp_[(std::uint64_t{log_[a]} * (e % (q_ - 1))) % (q_ - 1)];
}

FiniteField::value_type FiniteField::from_int(long long n) const {
    long long r = n % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<value_type>(r);
}

FiniteField::value_type FiniteField::from_bigint(const BigInt& n) const {
    return static_cast<value_type>(mod(n, BigInt(p_)).get_ui());
}

FiniteField::value_type FiniteField::from_rational(const Rational& q) const {
    value_type den = from_bigint(q.get_den());
    if (den == 0) throw std::domain_error("denominator " + q.get_den().get_str() + " vanishes in F_" + std::to_string(q_));
    return mul(from_bigint(q.get_num()), inv(den));
}

int FiniteField::quadratic_character(value_type a) const {
    if (a == 0) return 0;
    if (p_ == 2) return 1;
    return log_[a] % 2 == 0 ? 1 : -1;
}

std::string FiniteField::format(value_type a) const {
    if (k_ == 1) return std::to_string(a);
    auto d = digits(a);
    std::string out;
    for (unsigned i = k_; i-- > 0;) {
        if (d[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0 || d[i] != 1) out += std::to_string(d[i]);
        if (i >= 1) out += (d[i] != 1 ? "*t" : "t");
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

}  // namespace k3br
