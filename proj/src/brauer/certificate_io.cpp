#include "k3br/brauer/certificate_io.hpp"
#include "k3br/algebra/poly_text.hpp"

#include <fstream>
#include <optional>
#include <sstream>

namespace k3br {

std::string format_certificate(const ResidueCertificate& cert) {
    std::ostringstream os;
    os << "certificate " << cert.name << "\n";
    for (const auto& g : cert.divisor_gens) os << "gen " << g.to_string() << "\n";
    os << "nu_a " << cert.nu_a << "\n";
    os << "nu_b " << cert.nu_b << "\n";
    for (const auto& v : cert.valuations) os << "val " << v.nu << " " << v.factor.to_string() << "\n";
    os << "witness " << cert.witness.to_string() << "\n";
    os << "delta " << cert.delta.get_str() << "\n";
    os << "end\n";
    return os.str();
}

std::string format_certificates(const std::vector<ResidueCertificate>& certs) {
    std::string out;
    for (std::size_t i = 0; i < certs.size(); ++i) out += (i ? "\n" : "") + format_certificate(certs[i]);
    return out;
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r"), e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

int parse_int(const std::string& s, const std::string& where) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        throw ParseError(where + ": expected an integer, got '" + s + "'");
    }
    if (used != s.size()) throw ParseError(where + ": expected an integer, got '" + s + "'");
    return v;
}

}  // namespace

std::vector<ResidueCertificate> parse_certificates(const std::string& text) {
    std::vector<ResidueCertificate> out;
    std::optional<ResidueCertificate> cur;
    bool have_nu_a = false, have_nu_b = false, have_witness = false;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::string line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        const auto sp = line.find_first_of(" \t");
        const std::string key = line.substr(0, sp);
        const std::string rest = sp == std::string::npos ? "" : trim(line.substr(sp));
        const std::string where = "line " + std::to_string(lineno);
        try {
            if (key == "certificate") {
                if (cur) throw ParseError("missing 'end' before new certificate");
                if (rest.empty()) throw ParseError("certificate needs a name");
                cur = ResidueCertificate{};
                cur->name = rest;
                have_nu_a = have_nu_b = have_witness = false;
                continue;
            }
            if (!cur) throw ParseError("'" + key + "' outside a certificate block");
            if (key == "gen") {
                cur->divisor_gens.push_back(parse_poly(rest));
            } else if (key == "nu_a") {
                cur->nu_a = parse_int(rest, where);
                have_nu_a = true;
            } else if (key == "nu_b") {
                cur->nu_b = parse_int(rest, where);
                have_nu_b = true;
            } else if (key == "val") {
                const auto sp2 = rest.find_first_of(" \t");
                if (sp2 == std::string::npos) throw ParseError("val needs a valuation and a polynomial");
                cur->valuations.push_back({parse_poly(trim(rest.substr(sp2))), parse_int(rest.substr(0, sp2), where)});
            } else if (key == "witness") {
                cur->witness = FactoredFunction::parse(rest);
                have_witness = true;
            } else if (key == "delta") {
                cur->delta = parse_rational(rest);
            } else if (key == "end") {
                if (cur->divisor_gens.empty()) throw ParseError("certificate has no generators");
                if (!have_nu_a || !have_nu_b) throw ParseError("certificate lacks nu_a or nu_b");
                if (!have_witness) throw ParseError("certificate lacks a witness");
                out.push_back(std::move(*cur));
                cur.reset();
            } else {
                throw ParseError("unknown key '" + key + "'");
            }
        } catch (const ParseError& e) {
            throw ParseError(where + ": " + e.what());
        } catch (const std::invalid_argument& e) {
            throw ParseError(where + ": " + e.what());
        }
    }
    if (cur) throw ParseError("unterminated certificate '" + cur->name + "'");
    return out;
}

std::vector<ResidueCertificate> load_certificates(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return parse_certificates(os.str());
}

}  // namespace k3br
