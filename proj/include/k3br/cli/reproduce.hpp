#pragma once

// The claim driver behind reproduce-all. Every claim id is reported exactly
// once per run, in claim_ids() order; claims outside the --claims glob are
// reported as skipped. Randomized claims draw their seed from
// claim_seed(id, run seed), so a run is reproducible from the run seed alone.

#include "k3br/brauer/residue.hpp"
#include "k3br/cli/config.hpp"
#include "k3br/cli/report.hpp"
#include "k3br/geometry/hypersurface.hpp"

#include <string>
#include <vector>

namespace k3br::cli {

struct RunContext {
    Config config;
    Hypersurface surface;
    QuaternionClass cls;
    std::vector<ResidueCertificate> certs;
    /// Threads for work inside a single claim; 1 when claims run concurrently.
    unsigned inner_threads = 0;

    /// Applies class_a / class_b / certs overrides. Throws UsageError on bad input.
    static RunContext from(const Config& config);
};

const std::vector<std::string>& claim_ids();

/// Throws std::invalid_argument for an unknown id.
Report run_claim(const std::string& id, const RunContext& ctx);

std::vector<Report> reproduce_all(const RunContext& ctx);

}  // namespace k3br::cli
