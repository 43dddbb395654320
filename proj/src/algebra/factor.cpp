#include "k3br/algebra/factor.hpp"

#include <stdexcept>

namespace k3br {

bool is_prime(const BigInt& n) {
    return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::vector<PrimePower> factor(const BigInt& n, unsigned long trial_bound) {
    if (n == 0) throw std::domain_error("factor of zero");
    BigInt m = abs(n);
    std::vector<PrimePower> out;
    auto strip = [&](unsigned long d) {
        if (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
            PrimePower pp{BigInt(d), 0};
            while (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
                mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), d);
                ++pp.exponent;
            }
            out.push_back(pp);
        }
    };
    strip(2);
    for (unsigned long d = 3; d <= trial_bound; d += 2) {
        if (BigInt(d) * d > m) break;
        strip(d);
    }
    if (m > 1) {
        BigInt bound(trial_bound);
        if (m > bound * bound && !is_prime(m))
            throw std::domain_error("cannot fully factor " + n.get_str() + " within the trial bound");
        out.push_back({m, 1});
    }
    return out;
}

std::pair<unsigned long, unsigned> prime_power(unsigned long q) {
    if (q < 2) return {0, 0};
    auto fs = factor(BigInt(q));
    if (fs.size() != 1) return {0, 0};
    return {fs[0].prime.get_ui(), static_cast<unsigned>(fs[0].exponent)};
}

std::pair<BigInt, BigInt> squarefree_decomposition(const BigInt& n) {
    if (n == 0) throw std::domain_error("squarefree kernel of zero");
    BigInt kernel = n < 0 ? -1 : 1;
    BigInt root = 1;
    for (const auto& [p, e] : factor(n)) {
        if (e % 2 == 1) kernel *= p;
        root *= pow(p, e / 2);
    }
    return {kernel, root};
}

}  // namespace k3br
