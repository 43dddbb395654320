#pragma once

// Small finite fields F_q, q = p^k with p <= 31 and k <= 3.
//
// F_{p^k} = F_p[t] / (m(t)) where m is the Conway polynomial for (p, k).
// The table is fixed for the process lifetime; every modulus is irreducible
// and primitive. Elements are encoded as integers in [0, q): the code
// sum c_i p^i stands for sum c_i t^i. Multiplication goes through discrete
// log tables built once per field.

#include "k3br/algebra/numeric.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace k3br {

class FiniteField {
public:
    using value_type = std::uint32_t;

    /// Shared, immutable instance for (p, k). Throws std::invalid_argument
    /// outside the supported table.
    static const FiniteField& get(unsigned p, unsigned k);

    /// Same, from the order q.
    static const FiniteField& of_order(unsigned long q);

    unsigned characteristic() const { return p_; }
    unsigned degree() const { return k_; }
    std::uint32_t order() const { return q_; }

    /// Monic modulus coefficients, constant term first (size k + 1).
    const std::vector<unsigned>& modulus() const { return modulus_; }

    value_type zero() const { return 0; }
    value_type one() const { return 1; }

    value_type add(value_type a, value_type b) const;
    value_type sub(value_type a, value_type b) const;
    value_type neg(value_type a) const;
    value_type mul(value_type a, value_type b) const;
    value_type inv(value_type a) const;  // throws std::domain_error on 0
    value_type pow(value_type a, std::uint64_t e) const;

    value_type from_int(long long n) const;
    value_type from_bigint(const BigInt& n) const;
    /// Image of a rational; throws std::domain_error if p divides the denominator.
    value_type from_rational(const Rational& q) const;

    /// +1 for nonzero squares, -1 for non-squares, 0 for zero.
    int quadratic_character(value_type a) const;

    /// Coefficients (constant first) of the polynomial represented by a.
    std::array<unsigned, 3> digits(value_type a) const;

    std::string format(value_type a) const;

    FiniteField(const FiniteField&) = delete;
    FiniteField& operator=(const FiniteField&) = delete;

private:
    FiniteField(unsigned p, unsigned k);

    value_type times_t(value_type a) const;
    value_type mul_slow(value_type a, value_type b) const;

    unsigned p_;
    unsigned k_;
    std::uint32_t q_;
    std::vector<unsigned> modulus_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> exp_;
};

/// Value type bundling an element with its field.
class FqElem {
public:
    FqElem(const FiniteField& field, FiniteField::value_type code) : field_(&field), code_(code) {}

    const FiniteField& field() const { return *field_; }
    FiniteField::value_type code() const { return code_; }

    FqElem operator+(const FqElem& o) const { return {*field_, field_->add(code_, o.code_)}; }
    FqElem operator-(const FqElem& o) const { return {*field_, field_->sub(code_, o.code_)}; }
    FqElem operator*(const FqElem& o) const { return {*field_, field_->mul(code_, o.code_)}; }
    FqElem operator-() const { return {*field_, field_->neg(code_)}; }
    FqElem inverse() const { return {*field_, field_->inv(code_)}; }

    bool is_zero() const { return code_ == 0; }
    bool operator==(const FqElem& o) const { return field_ == o.field_ && code_ == o.code_; }

private:
    const FiniteField* field_;
    FiniteField::value_type code_;
};

}  // namespace k3br
