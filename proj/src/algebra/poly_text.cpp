#include "k3br/algebra/poly_text.hpp"

#include <cctype>

namespace k3br {

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, std::span<const std::string> names) : text_(text), names_(names) {}

    HomogPoly parse() {
        HomogPoly sum(static_cast<unsigned>(names_.size()));
        skip_space();
        if (at_end()) fail("empty polynomial");
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_space();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            HomogPoly term = parse_term();
            try {
                sum += sign > 0 ? term : -term;
            } catch (const std::invalid_argument& e) {
                fail(e.what());
            }
            skip_space();
        }
        return sum;
    }

private:
    HomogPoly parse_term() {
        Rational coeff = 1;
        Monomial m(names_.size(), 0);
        bool any = false;
        while (true) {
            skip_space();
            if (at_end()) break;
            char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coeff *= parse_number();
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                unsigned var = parse_variable();
                unsigned e = 1;
                skip_space();
                if (!at_end() && peek() == '^') {
                    ++pos_;
                    skip_space();
                    e = parse_exponent();
                }
                m[var] += e;
            } else {
                fail(std::string("unexpected character '") + c + "'");
            }
            any = true;
            skip_space();
            if (!at_end() && peek() == '*') {
                ++pos_;
                continue;
            }
            break;
        }
        if (!any) fail("empty term");
        return HomogPoly::monomial(coeff, m);
    }

    Rational parse_number() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        BigInt num(std::string(text_.substr(start, pos_ - start)));
        if (!at_end() && peek() == '/') {
            ++pos_;
            std::size_t ds = pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            if (ds == pos_) fail("missing denominator");
            BigInt den(std::string(text_.substr(ds, pos_ - ds)));
            if (den == 0) fail("zero denominator");
            return make_rational(num, den);
        }
        return Rational(num);
    }

    unsigned parse_variable() {
        std::size_t start = pos_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
        std::string_view name = text_.substr(start, pos_ - start);
        for (unsigned i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return i;
        fail("unknown variable '" + std::string(name) + "'");
    }

    unsigned parse_exponent() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("missing exponent");
        return static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("polynomial '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + what);
    }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    std::string_view text_;
    std::span<const std::string> names_;
    std::size_t pos_ = 0;
};

}  // namespace

HomogPoly parse_poly(std::string_view text, std::span<const std::string> names) {
    std::vector<std::string> fallback;
    if (names.empty()) {
        fallback = default_names(4);
        names = fallback;
    }
    return PolyParser(text, names).parse();
}

}  // namespace k3br
