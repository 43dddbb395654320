#include "k3br/cli/report.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>

namespace k3br::cli {

const char* to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::evidence_only: return "evidence-only";
        case Status::skipped: return "skipped";
    }
    return "?";
}

const char* to_string(ClaimKind k) { return k == ClaimKind::proof ? "proof" : "evidence"; }

void Report::set_outcome(bool ok) {
    if (!ok)
        status = Status::fail;
    else
        status = kind == ClaimKind::proof ? Status::pass : Status::evidence_only;
}

nlohmann::json to_json(const Report& r, bool with_timing) {
    nlohmann::json j;
    j["schema"] = kSchemaVersion;
    j["claim"] = r.claim;
    j["kind"] = to_string(r.kind);
    j["status"] = to_string(r.status);
    j["data"] = r.data;
    j["seed"] = r.seed;
    if (!r.error.empty()) j["error"] = r.error;
    if (with_timing) j["timing_ms"] = r.timing_ms;
    return j;
}

std::string to_text(const Report& r) {
    std::string status = to_string(r.status);
    for (auto& ch : status) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.1f ms", r.timing_ms);
    std::string out = status;
    out.resize(std::max<std::size_t>(out.size() + 1, 15), ' ');
    out += r.claim + "  " + (r.data.is_null() ? std::string("-") : r.data.dump()) + "  (" + timing + ")";
    if (!r.error.empty()) out += "  error: " + r.error;
    return out;
}

int exit_code(const std::vector<Report>& reports) {
    bool evidence_failed = false;
    for (const auto& r : reports) {
        if (r.status != Status::fail) continue;
        if (r.kind == ClaimKind::proof) return kExitProofFailure;
        evidence_failed = true;
    }
    return evidence_failed ? kExitEvidenceFailure : kExitOk;
}

std::uint64_t claim_seed(const std::string& claim, std::uint64_t run_seed) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : claim) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h ^ (run_seed * 0x9e3779b97f4a7c15ULL);
}

}  // namespace k3br::cli
