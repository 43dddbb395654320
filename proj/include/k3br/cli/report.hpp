#pragma once

// One report object per claim. Statuses: "pass" and "fail" for exact checks,
// "evidence-only" for sampled checks that found nothing wrong, "skipped" for
// claims filtered out of a run. A failed sampled check is reported as "fail"
// with kind "evidence" and maps to exit code 2; failed exact checks exit 1.

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace k3br::cli {

inline constexpr int kSchemaVersion = 1;

inline constexpr int kExitOk = 0;
inline constexpr int kExitProofFailure = 1;
inline constexpr int kExitEvidenceFailure = 2;
inline constexpr int kExitUsage = 64;

enum class Status { pass, fail, evidence_only, skipped };
enum class ClaimKind { proof, evidence };

const char* to_string(Status s);
const char* to_string(ClaimKind k);

struct Report {
    std::string claim;
    ClaimKind kind = ClaimKind::proof;
    Status status = Status::skipped;
    nlohmann::json data;
    std::string error;
    std::uint64_t seed = 0;
    double timing_ms = 0;

    /// Sets status from an outcome: pass / evidence-only on success, fail otherwise.
    void set_outcome(bool ok);
};

nlohmann::json to_json(const Report& r, bool with_timing = true);
/// "PASS      lemma2.count  10  (0.4 ms)"
std::string to_text(const Report& r);

int exit_code(const std::vector<Report>& reports);

/// FNV-1a of the claim id mixed with the run seed.
std::uint64_t claim_seed(const std::string& claim, std::uint64_t run_seed);

}  // namespace k3br::cli
