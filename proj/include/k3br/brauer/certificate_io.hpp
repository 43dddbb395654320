#pragma once

// Plain-text residue certificates, one block per divisor:
//
//   certificate D4
//   gen z^3 + x*w^2
//   gen y
//   nu_a 1
//   nu_b 0
//   val 1 z^3 + w^2*x + x*y*z
//   val 0 x
//   witness 1 * (z) * (w)^-1
//   delta 1
//   end
//
// Blank lines and lines starting with '#' are ignored. delta defaults to 1.

#include "k3br/brauer/residue.hpp"

#include <string>
#include <vector>

namespace k3br {

std::string format_certificate(const ResidueCertificate& cert);
std::string format_certificates(const std::vector<ResidueCertificate>& certs);

/// Throws ParseError with the offending line number.
std::vector<ResidueCertificate> parse_certificates(const std::string& text);
std::vector<ResidueCertificate> load_certificates(const std::string& path);

}  // namespace k3br
