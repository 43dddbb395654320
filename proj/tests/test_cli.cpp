#include "k3br/cli/commands.hpp"
#include "k3br/cli/config.hpp"
#include "k3br/cli/report.hpp"
#include "k3br/cli/reproduce.hpp"

#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

using namespace k3br::cli;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "k3br");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<json> lines(const std::string& text) {
    std::vector<json> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) out.push_back(json::parse(line));
    return out;
}

std::string golden(const std::string& name) {
    std::ifstream in(std::string(K3BR_TEST_DIR) + "/golden/" + name);
    REQUIRE(in);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("golden reports") {
    const std::pair<std::vector<std::string>, const char*> cases[] = {
        {{"count-points", "--q", "2"}, "count_points_q2.jsonl"},
        {{"symbol", "7", "-1", "2"}, "symbol.jsonl"},
        {{"eval", "--point", "1,0,1,0", "--p", "2"}, "eval_p1.jsonl"},
        {{"eval", "--point", "1,2,1,2", "--p", "2", "--mod", "3", "--free", "w"}, "eval_p2.jsonl"},
        {{"residues"}, "residues.jsonl"},
        {{"singular", "--p", "17"}, "singular_p17.jsonl"},
        {{"forms", "--check", "lemma3"}, "forms_lemma3.jsonl"},
        {{"family", "--params", "1,1,1,3,1"}, "family_nonsquare.jsonl"},
    };
    for (const auto& [args, file] : cases) {
        CAPTURE(file);
        auto full = args;
        full.push_back("--json");
        full.push_back("--no-timing");
        const Run r = run(full);
        CHECK(r.code == kExitOk);
        CHECK(r.out == golden(file));
    }
}

TEST_CASE("report schema") {
    const Run r = run({"count-points", "--q", "2", "--json"});
    const json j = json::parse(r.out);
    CHECK(j["schema"] == kSchemaVersion);
    CHECK(j["claim"] == "lemma2.count");
    CHECK(j["data"] == 10);
    CHECK(j["status"] == "pass");
    CHECK(j["kind"] == "proof");
    CHECK(j.contains("timing_ms"));
    CHECK(json::parse(run({"symbol", "7", "-1", "2", "--json"}).out)["data"] == -1);
    CHECK(json::parse(run({"eval", "--point", "1,0,1,0", "--p", "2", "--json"}).out)["data"]["invariant"] == "0");
}

TEST_CASE("reproduce-all reports each claim once and is deterministic") {
    const Run a = run({"reproduce-all", "--seed", "5", "--json", "--no-timing"});
    const Run b = run({"reproduce-all", "--seed", "5", "--json", "--no-timing", "--threads", "2"});
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
    const auto reports = lines(a.out);
    REQUIRE(reports.size() == claim_ids().size());
    std::set<std::string> seen;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        CHECK(reports[i]["claim"] == claim_ids()[i]);
        seen.insert(reports[i]["claim"].get<std::string>());
        const std::string status = reports[i]["status"];
        if (reports[i]["kind"] == "proof")
            CHECK(status == "pass");
        else
            CHECK(status == "evidence-only");
    }
    CHECK(seen.size() == reports.size());
    const Run c = run({"reproduce-all", "--seed", "6", "--json", "--no-timing", "--claims", "sec2.constancy.*"});
    CHECK(c.out != a.out);
}

TEST_CASE("claim filter marks the rest skipped") {
    const Run r = run({"reproduce-all", "--json", "--claims", "thm1.residue.*"});
    CHECK(r.code == kExitOk);
    std::size_t ran = 0;
    for (const auto& j : lines(r.out)) {
        const bool selected = glob_match("thm1.residue.*", j["claim"]);
        CHECK((j["status"] == "skipped") != selected);
        ran += selected;
    }
    CHECK(ran == 5);
}

TEST_CASE("negative control: a misconfigured class fails the residue claims") {
    const Run r = run({"reproduce-all", "--json", "--config", std::string(K3BR_TEST_DIR) + "/golden/perturbed.cfg",
                       "--claims", "thm1.*"});
    CHECK(r.code == kExitProofFailure);
    for (const auto& j : lines(r.out))
        if (j["claim"] == "thm1.unramified") CHECK(j["status"] == "fail");
}

TEST_CASE("certificate file override") {
    const Run r = run({"residues", "--json", "--config", std::string(K3BR_TEST_DIR) + "/golden/certs.cfg"});
    CHECK(r.code == kExitOk);
    CHECK(lines(r.out).size() == 6);
}

TEST_CASE("usage errors exit 64") {
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"no-such-command"}).code == kExitUsage);
    CHECK(run({"count-points"}).code == kExitUsage);
    CHECK(run({"count-points", "--q", "2", "--precision", "abc"}).code == kExitUsage);
    CHECK(run({"count-points", "--q", "2", "--precision", "2"}).code == kExitUsage);
    CHECK(run({"forms", "--check", "nothing"}).code == kExitUsage);
    CHECK(run({"family", "--params", "2,1,1,1,1"}).code == kExitUsage);
    CHECK(run({"symbol", "1/0", "2", "2"}).code == kExitUsage);
    CHECK(run({"eval", "--point", "1,0,1", "--p", "2"}).code == kExitUsage);
    CHECK(run({"reproduce-all", "--config", "/nonexistent/k3br.cfg"}).code == kExitUsage);
    CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("library failures are reported, not thrown") {
    const Run r = run({"symbol", "0", "2", "2", "--json"});
    CHECK(r.code == kExitProofFailure);
    CHECK(json::parse(r.out)["status"] == "fail");
    const Run lift = run({"lift", "--point", "1,1,1,1", "--p", "5", "--from", "1", "--json"});
    CHECK(lift.code == kExitProofFailure);
}

TEST_CASE("config parsing") {
    const Config c = parse_config("# comment\nseed = 42\nprecision=40 # trailing\n\nclaims = thm4.*\n");
    CHECK(c.seed == 42);
    CHECK(c.precision == 40);
    CHECK(c.claims == "thm4.*");
    CHECK(c.params == "1,1,1,1,1");
    CHECK_THROWS_AS(parse_config("seed 42"), UsageError);
    CHECK_THROWS_AS(parse_config("colour = blue"), UsageError);
    CHECK_THROWS_AS(parse_config("samples = -3"), UsageError);
    try {
        parse_config("seed = 1\nthreads = many\n");
        FAIL("expected a usage error");
    } catch (const UsageError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("exit codes") {
    Report proof, evidence;
    proof.claim = "a";
    evidence.claim = "b";
    evidence.kind = ClaimKind::evidence;
    proof.set_outcome(true);
    evidence.set_outcome(true);
    CHECK(exit_code({proof, evidence}) == kExitOk);
    CHECK(evidence.status == Status::evidence_only);
    evidence.set_outcome(false);
    CHECK(exit_code({proof, evidence}) == kExitEvidenceFailure);
    proof.set_outcome(false);
    CHECK(exit_code({proof, evidence}) == kExitProofFailure);
    CHECK(claim_seed("x", 1) != claim_seed("y", 1));
    CHECK(claim_seed("x", 1) != claim_seed("x", 2));
}

}  // TEST_SUITE
