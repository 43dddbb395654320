#include "k3br/cli/commands.hpp"

#include "k3br/algebra/poly_text.hpp"
#include "k3br/cli/payload.hpp"
#include "k3br/cli/reproduce.hpp"
#include "k3br/geometry/enumeration.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <map>

namespace k3br::cli {

using nlohmann::json;

namespace {

struct Globals {
    std::string config_path;
    std::string seed, precision, params, claims, samples, threads;
    bool json = false;
    bool no_timing = false;
};

Config resolve_config(const CLI::App& app, const Globals& g) {
    Config cfg = g.config_path.empty() ? Config{} : load_config(g.config_path);
    const std::pair<const char*, const std::string*> flags[] = {
        {"seed", &g.seed},       {"precision", &g.precision}, {"params", &g.params},
        {"claims", &g.claims},   {"samples", &g.samples},     {"threads", &g.threads},
    };
    for (const auto& [key, value] : flags)
        if (app.count(std::string("--") + key) > 0) cfg.set(key, *value);
    return cfg;
}

/// Runs body as a single ad-hoc report; library errors become a failed report.
Report single(const std::string& claim, ClaimKind kind, const Config& cfg, const std::function<bool(Report&)>& body) {
    Report r;
    r.claim = claim;
    r.kind = kind;
    r.seed = cfg.seed;
    const auto start = std::chrono::steady_clock::now();
    try {
        r.set_outcome(body(r));
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception& e) {
        r.status = Status::fail;
        r.error = e.what();
    }
    r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

unsigned parse_var(const std::string& name) {
    static const std::map<std::string, unsigned> vars{{"x", 0}, {"y", 1}, {"z", 2}, {"w", 3}};
    const auto it = vars.find(name);
    if (it == vars.end()) throw UsageError("free variable must be one of x, y, z, w");
    return it->second;
}

std::array<BigInt, 4> integral_coords(const std::string& text) {
    const RationalPoint rp = RationalPoint::from(parse_coords(text));
    return rp.coords;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Brauer-Manin verification for the quartic x^3y + y^3z + z^3w + w^3x + xyzw = 0", "k3br"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--config", g.config_path, "key = value configuration file");
    app.add_option("--seed", g.seed, "run seed");
    app.add_option("--precision", g.precision, "p-adic working precision");
    app.add_option("--params", g.params, "family parameters a,b,c,d,e");
    app.add_option("--claims", g.claims, "glob over claim ids for reproduce-all");
    app.add_option("--samples", g.samples, "size of randomized sweeps");
    app.add_option("--threads", g.threads, "worker threads (0 = all cores)");
    app.add_flag("--json", g.json, "emit JSON lines");
    app.add_flag("--no-timing", g.no_timing, "omit timing fields from JSON");
    app.fallthrough();

    std::function<std::vector<Report>(const Config&)> action;

    unsigned long q = 2;
    auto* count = app.add_subcommand("count-points", "count points of the surface over F_q");
    count->add_option("--q", q, "field order")->required();
    count->callback([&] {
        action = [&](const Config& cfg) {
            const std::string claim = q == 2 ? "lemma2.count" : "count-points.q" + std::to_string(q);
            return std::vector{single(claim, ClaimKind::proof, cfg, [&](Report& r) {
                const auto n = count_points(Hypersurface::k3_quartic(), q, {10'000'000, cfg.threads});
                r.data = n;
                return q != 2 || n == 10;
            })};
        };
    });

    std::string sa, sb, sv;
    auto* symbol = app.add_subcommand("symbol", "Hilbert symbol (a, b)_v");
    symbol->add_option("a", sa)->required();
    symbol->add_option("b", sb)->required();
    symbol->add_option("place", sv, "prime or inf")->required();
    symbol->callback([&] {
        action = [&](const Config& cfg) {
            Rational a, b;
            Place v = Place::infinity();
            try {
                a = parse_rational(sa);
                b = parse_rational(sb);
                v = Place::parse(sv);
            } catch (const std::exception& e) {
                throw UsageError(std::string("symbol: ") + e.what());
            }
            return std::vector{single("symbol", ClaimKind::proof, cfg, [&](Report& r) {
                r.data = hilbert_symbol(a, b, v);
                return true;
            })};
        };
    });

    std::string point;
    unsigned long p = 2;
    unsigned from = 0, to = 0;
    std::string free_var;
    auto* lift = app.add_subcommand("lift", "Hensel-lift a point mod p^m");
    lift->add_option("--point", point, "coordinates, e.g. 1,2,1,2")->required();
    lift->add_option("--p", p, "prime")->required();
    lift->add_option("--from", from, "precision m of the given point")->required();
    lift->add_option("--to", to, "target precision (default: --precision)");
    lift->add_option("--free", free_var, "variable to solve for (x, y, z or w)");
    lift->callback([&] {
        action = [&](const Config& cfg) {
            const auto coords = integral_coords(point);
            const std::optional<unsigned> fv = free_var.empty() ? std::nullopt : std::optional(parse_var(free_var));
            return std::vector{single("lift", ClaimKind::proof, cfg, [&](Report& r) {
                const Hypersurface Y = Hypersurface::k3_quartic();
                const ModPoint in = normalize(p, from, coords);
                const ModPoint res = hensel_lift(Y, in, to ? to : cfg.precision, fv);
                r.data = {{"input", in.to_string()}, {"lift", res.to_string()}, {"on_surface", lies_on(Y, res)}};
                return lies_on(Y, res);
            })};
        };
    });

    std::string place_text;
    unsigned mod_precision = 0;
    auto* eval = app.add_subcommand("eval", "evaluate the class at a point");
    eval->add_option("--point", point, "coordinates, e.g. 1,0,1,0")->required();
    eval->add_option("--p", place_text, "place: a prime or inf")->required();
    eval->add_option("--mod", mod_precision, "treat the point as known mod p^m and lift it");
    eval->add_option("--free", free_var, "variable to solve for when lifting");
    eval->callback([&] {
        action = [&](const Config& cfg) {
            Place v = Place::infinity();
            std::array<Rational, 4> coords;
            try {
                v = Place::parse(place_text);
                coords = parse_coords(point);
            } catch (const std::exception& e) {
                throw UsageError(std::string("eval: ") + e.what());
            }
            if (mod_precision && v.is_infinite()) throw UsageError("eval: --mod needs a finite place");
            const std::optional<unsigned> fv = free_var.empty() ? std::nullopt : std::optional(parse_var(free_var));
            const RunContext ctx = RunContext::from(cfg);
            return std::vector{single("eval", ClaimKind::proof, cfg, [&](Report& r) {
                EvalRecord rec;
                if (mod_precision) {
                    const ModPoint in = normalize(v.p(), mod_precision, RationalPoint::from(coords).coords);
                    rec = eval_at(ctx.cls, hensel_lift(ctx.surface, in, cfg.precision, fv));
                } else {
                    rec = eval_at_rational(ctx.cls, coords, v);
                }
                r.data = to_json(rec);
                return true;
            })};
        };
    });

    unsigned m = 1, lifts = 10;
    auto* table = app.add_subcommand("eval-table", "invariants over residue classes mod p^m");
    table->add_option("--p", p, "prime")->required();
    table->add_option("--m", m, "class precision");
    table->add_option("--lifts", lifts, "random lifts per class");
    table->callback([&] {
        action = [&](const Config& cfg) {
            const RunContext ctx = RunContext::from(cfg);
            return std::vector{single("eval-table", ClaimKind::evidence, cfg, [&](Report& r) {
                const unsigned k = std::max(cfg.precision, m + 3);
                const EvalTable t = eval_table(ctx.cls, ctx.surface, p, m, lifts, k, cfg.seed, cfg.threads);
                r.data = to_json(t);
                return t.total_errors() == 0;
            })};
        };
    });

    auto* residues = app.add_subcommand("residues", "residue certificates along D1..D5");
    residues->callback([&] {
        action = [&](const Config& cfg) {
            const RunContext ctx = RunContext::from(cfg);
            std::vector<Report> out;
            for (const char* d : {"D1", "D2", "D3", "D4", "D5"})
                out.push_back(run_claim(std::string("thm1.residue.") + d, ctx));
            out.push_back(run_claim("thm1.unramified", ctx));
            return out;
        };
    });

    auto* singular = app.add_subcommand("singular", "singular F_p-points and their lifts mod p^2");
    singular->add_option("--p", p, "prime")->required();
    singular->callback([&] {
        action = [&](const Config& cfg) {
            return std::vector{single("singular.p" + std::to_string(p), ClaimKind::proof, cfg, [&](Report& r) {
                const Hypersurface Y = Hypersurface::k3_quartic();
                json pts = json::array();
                for (const auto& pt : singular_points(Y, p, {10'000'000, cfg.threads}))
                    pts.push_back({{"point", pt.to_string()}, {"lifts_mod_p2", lifts_mod_p2(Y, pt)}});
                r.data = {{"p", p}, {"singular", pts}};
                return true;
            })};
        };
    });

    unsigned degree = 2;
    auto* scan = app.add_subcommand("scan", "bounded singularity scan over F_{p^k}");
    scan->add_option("--p", p, "prime")->required();
    scan->add_option("--degree", degree, "maximal extension degree");
    scan->callback([&] {
        action = [&](const Config& cfg) {
            return std::vector{single("scan.p" + std::to_string(p), ClaimKind::evidence, cfg, [&](Report& r) {
                const auto rep = smoothness_scan(Hypersurface::k3_quartic(), p, degree, {10'000'000, cfg.threads});
                r.data = to_json(rep);
                return rep.no_singular_points();
            })};
        };
    });

    std::string check;
    auto* forms = app.add_subcommand("forms", "characteristic-2 differential form checks");
    forms->add_option("--check", check, "lemma3, glue or ordinary")
        ->required()
        ->check(CLI::IsMember({"lemma3", "glue", "ordinary"}));
    forms->callback([&] {
        action = [&](const Config& cfg) {
            const RunContext ctx = RunContext::from(cfg);
            const std::string id = check == "lemma3" ? "lemma3.identity" : check == "glue" ? "lemma3.glue" : "lemma2.ordinary";
            return std::vector{run_claim(id, ctx)};
        };
    });

    auto* family = app.add_subcommand("family", "check one member of the five-parameter family");
    family->callback([&] {
        action = [&](const Config& cfg) {
            FamilyParams params;
            try {
                params = FamilyParams::parse(cfg.params);
            } catch (const std::exception& e) {
                throw UsageError(std::string("--params: ") + e.what());
            }
            return std::vector{single("thm4.family", ClaimKind::proof, cfg, [&](Report& r) {
                const FamilyReport rep = family_check(params, cfg.precision);
                r.data = to_json(rep);
                return rep.passed();
            })};
        };
    });

    auto* all = app.add_subcommand("reproduce-all", "run every claim and report each once");
    all->callback([&] {
        action = [&](const Config& cfg) { return reproduce_all(RunContext::from(cfg)); };
    });

    try {
        std::vector<std::string> args;
        for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << "run with --help for usage\n";
        return kExitUsage;
    }

    std::vector<Report> reports;
    try {
        reports = action(resolve_config(app, g));
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    for (const auto& r : reports) {
        if (g.json)
            out << to_json(r, !g.no_timing).dump() << "\n";
        else
            out << to_text(r) << "\n";
    }
    return exit_code(reports);
}

}  // namespace k3br::cli
