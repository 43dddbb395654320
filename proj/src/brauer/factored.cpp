#include "k3br/brauer/factored.hpp"
#include "k3br/algebra/poly_text.hpp"

#include <algorithm>

namespace k3br {

FactoredFunction::FactoredFunction(Rational constant) : c_(std::move(constant)) {
    if (c_ == 0) throw std::invalid_argument("factored function with zero constant");
}

FactoredFunction FactoredFunction::of(const HomogPoly& poly, int exponent) {
    FactoredFunction f;
    f.multiply_factor(poly, exponent);
    return f;
}

void FactoredFunction::multiply_factor(const HomogPoly& poly, int exponent) {
    if (poly.is_zero()) throw std::invalid_argument("zero factor");
    if (exponent == 0) return;
    const Rational lc = poly.leading_coefficient();
    Rational scale = 1;
    for (int i = 0; i < std::abs(exponent); ++i) scale *= lc;
    if (exponent > 0)
        c_ *= scale;
    else
        c_ /= scale;
    if (poly.degree() == 0) return;
    HomogPoly m = poly.monic();
    const std::string key = m.to_string();
    auto it = std::lower_bound(factors_.begin(), factors_.end(), key,
                               [](const Factor& f, const std::string& k) { return f.poly.to_string() < k; });
    if (it != factors_.end() && it->poly == m) {
        it->exponent += exponent;
        if (it->exponent == 0) factors_.erase(it);
    } else {
        factors_.insert(it, Factor{std::move(m), exponent});
    }
}

long FactoredFunction::degree() const {
    long d = 0;
    for (const auto& f : factors_) d += static_cast<long>(f.poly.degree()) * f.exponent;
    return d;
}

FactoredFunction FactoredFunction::operator*(const FactoredFunction& o) const {
    FactoredFunction r = *this;
    r.c_ *= o.c_;
    for (const auto& f : o.factors_) r.multiply_factor(f.poly, f.exponent);
    return r;
}

FactoredFunction FactoredFunction::pow(int e) const {
    FactoredFunction r;
    Rational c = 1;
    for (int i = 0; i < std::abs(e); ++i) c *= c_;
    r.c_ = e >= 0 ? c : Rational(1 / c);
    for (const auto& f : factors_) r.multiply_factor(f.poly, f.exponent * e);
    return r;
}

FactoredFunction FactoredFunction::operator/(const FactoredFunction& o) const { return *this * o.inverse(); }

bool FactoredFunction::operator==(const FactoredFunction& o) const {
    if (c_ != o.c_ || factors_.size() != o.factors_.size()) return false;
    for (std::size_t i = 0; i < factors_.size(); ++i)
        if (factors_[i].exponent != o.factors_[i].exponent || !(factors_[i].poly == o.factors_[i].poly)) return false;
    return true;
}

HomogPoly FactoredFunction::numerator() const {
    HomogPoly r = HomogPoly::constant(4, 1);
    for (const auto& f : factors_)
        if (f.exponent > 0) r = r * f.poly.pow(f.exponent);
    return r;
}

HomogPoly FactoredFunction::denominator() const {
    HomogPoly r = HomogPoly::constant(4, 1);
    for (const auto& f : factors_)
        if (f.exponent < 0) r = r * f.poly.pow(-f.exponent);
    return r;
}

Rational FactoredFunction::evaluate(const std::array<Rational, 4>& pt) const {
    Rational acc = c_;
    bool zero = false;
    for (const auto& f : factors_) {
        const Rational v = f.poly.evaluate(RationalField{}, std::span<const Rational>(pt));
        if (v == 0) {
            if (f.exponent < 0) throw std::domain_error("factor " + f.poly.to_string() + " of a denominator vanishes");
            zero = true;
            continue;
        }
        for (int i = 0; i < std::abs(f.exponent); ++i) {
            if (f.exponent > 0)
                acc *= v;
            else
                acc /= v;
        }
    }
    return zero ? Rational(0) : acc;
}

PadicNum FactoredFunction::evaluate_padic(const ModPoint& pt) const {
    PadicNum acc = PadicNum::from_rational(c_, pt.p, pt.precision);
    for (const auto& f : factors_) {
        const PadicNum v = PadicNum::from_residue(evaluate_mod(f.poly, pt), pt.p, pt.precision);
        for (int i = 0; i < std::abs(f.exponent); ++i) acc = f.exponent > 0 ? acc * v : acc / v;
    }
    return acc;
}

std::string FactoredFunction::to_string() const {
    std::string out = c_.get_str();
    for (const auto& f : factors_) {
        out += " * (" + f.poly.to_string() + ")";
        if (f.exponent != 1) out += "^" + std::to_string(f.exponent);
    }
    return out;
}

FactoredFunction FactoredFunction::parse(const std::string& text) {
    // Split on '*' at parenthesis depth 0.
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char ch : text) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (depth < 0) throw ParseError("unbalanced parentheses in '" + text + "'");
        if (ch == '*' && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (depth != 0) throw ParseError("unbalanced parentheses in '" + text + "'");
    parts.push_back(cur);
    FactoredFunction f;
    for (auto part : parts) {
        const auto b = part.find_first_not_of(" \t"), e = part.find_last_not_of(" \t");
        if (b == std::string::npos) throw ParseError("empty factor in '" + text + "'");
        part = part.substr(b, e - b + 1);
        if (part.front() != '(') {
            try {
                f.c_ *= parse_rational(part);
            } catch (const std::exception&) {
                throw ParseError("bad constant '" + part + "' in '" + text + "'");
            }
            if (f.c_ == 0) throw ParseError("zero constant in '" + text + "'");
            continue;
        }
        const auto close = part.rfind(')');
        int exponent = 1;
        const std::string tail = part.substr(close + 1);
        if (!tail.empty()) {
            if (tail.front() != '^') throw ParseError("expected '^' after factor in '" + text + "'");
            try {
                std::size_t used = 0;
                exponent = std::stoi(tail.substr(1), &used);
                if (used != tail.size() - 1) throw ParseError("");
            } catch (const std::exception&) {
                throw ParseError("bad exponent '" + tail + "' in '" + text + "'");
            }
        }
        f.multiply_factor(parse_poly(part.substr(1, close - 1)), exponent);
    }
    return f;
}

QuaternionClass::QuaternionClass(FactoredFunction a, FactoredFunction b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_.degree() != 0 || b_.degree() != 0)
        throw std::invalid_argument("class arguments must be rational functions of degree 0");
}

QuaternionClass QuaternionClass::k3_class() {
    const HomogPoly x = parse_poly("x"), z = parse_poly("z");
    const HomogPoly f = parse_poly("z^3 + w^2*x + x*y*z");
    return QuaternionClass(FactoredFunction::of(f) * FactoredFunction::of(x, -3),
                           FactoredFunction(-1) * FactoredFunction::of(z) * FactoredFunction::of(x, -1));
}

HomogPoly QuaternionClass::a_num() const { return a_.numerator() * a_.constant(); }
HomogPoly QuaternionClass::a_den() const { return a_.denominator(); }
HomogPoly QuaternionClass::b_num() const { return b_.numerator() * b_.constant(); }
HomogPoly QuaternionClass::b_den() const { return b_.denominator(); }

std::string QuaternionClass::to_string() const { return "(" + a_.to_string() + ", " + b_.to_string() + ")"; }

}  // namespace k3br
