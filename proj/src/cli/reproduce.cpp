#include "k3br/cli/reproduce.hpp"

#include "k3br/algebra/parallel.hpp"
#include "k3br/algebra/poly_text.hpp"
#include "k3br/brauer/certificate_io.hpp"
#include "k3br/brauer/cover.hpp"
#include "k3br/brauer/obstruction.hpp"
#include "k3br/charp/forms.hpp"
#include "k3br/cli/payload.hpp"
#include "k3br/family/family.hpp"
#include "k3br/geometry/enumeration.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <thread>

namespace k3br::cli {

using nlohmann::json;

namespace {

constexpr unsigned long kConstancyPrimes[] = {3, 5, 7, 11, 13, 17, 19, 23};
constexpr unsigned long kBadPrimes[] = {3, 5, 17};
constexpr unsigned long kScanPrimes[] = {2, 7, 11, 13};
constexpr unsigned kScanDegree = 2;
constexpr unsigned kSweepSize = 20;

ModPoint p1_point(unsigned precision) { return ModPoint{2, precision, {1, 0, 1, 0}}; }

/// The 2-adic point through (1:2:1:2) mod 8, solved for w.
ModPoint p2_point(const Hypersurface& Y, unsigned precision) {
    return hensel_lift(Y, ModPoint{2, 3, {1, 2, 1, 2}}, precision, 3);
}

std::vector<Place> reciprocity_places() {
    std::vector<Place> out{Place::infinity()};
    for (unsigned long p : {2, 3, 5, 7, 11, 13, 17, 19, 23}) out.push_back(Place::prime(p));
    return out;
}

json invariant_list(const std::set<BrInvariant>& s) {
    json out = json::array();
    for (const auto& i : s) out.push_back(i.to_string());
    return out;
}

const ResidueCertificate* find_cert(const std::vector<ResidueCertificate>& certs, const std::string& name) {
    for (const auto& c : certs)
        if (c.name == name) return &c;
    return nullptr;
}

using Body = std::function<bool(const RunContext&, Report&)>;

struct ClaimDef {
    std::string id;
    ClaimKind kind;
    Body body;
};

bool residue_claim(const std::string& name, const RunContext& ctx, Report& r) {
    const ResidueCertificate* cert = find_cert(ctx.certs, name);
    if (!cert) {
        r.error = "no certificate named " + name;
        return false;
    }
    const ResidueResult res = residue_check(ctx.cls, *cert);
    r.data = to_json(res);
    r.data["nu_a"] = cert->nu_a;
    r.data["nu_b"] = cert->nu_b;
    r.data["witness"] = cert->witness.to_string();
    return res.verdict == ResidueVerdict::trivial && res.method == "member";
}

bool constancy_claim(unsigned long p, const RunContext& ctx, Report& r) {
    const unsigned n = ctx.config.samples;
    const SweepResult sweep = random_point_sweep(ctx.cls, ctx.surface, p, n, ctx.config.precision, r.seed);
    std::size_t stabilized = 0;
    for (const auto& rec : sweep.records) stabilized += rec.method == EvalMethod::stabilized;
    const auto inv = sweep.invariants();
    r.data = {{"p", p},
              {"samples", sweep.records.size()},
              {"errors", sweep.errors},
              {"stabilized", stabilized},
              {"invariants", invariant_list(inv)}};
    return sweep.errors == 0 && sweep.records.size() == n && inv == std::set{BrInvariant::zero()};
}

bool bad_fiber_claim(unsigned long p, const RunContext& ctx, Report& r) {
    EnumerationLimits lim;
    lim.threads = ctx.inner_threads;
    const auto sing = singular_points(ctx.surface, p, lim);
    json pts = json::array();
    bool none_lift = true;
    for (const auto& pt : sing) {
        const std::uint64_t lifts = lifts_mod_p2(ctx.surface, pt);
        none_lift = none_lift && lifts == 0;
        pts.push_back({{"point", pt.to_string()}, {"lifts_mod_p2", lifts}});
    }
    r.data = {{"p", p}, {"singular", pts}};
    return sing.size() == 1 && none_lift;
}

bool cover_claim(const std::string& cut, const std::vector<std::string>& names, const RunContext& ctx, Report& r) {
    const auto certs = k3_certificates();
    std::vector<std::vector<HomogPoly>> comps;
    for (const auto& n : names) comps.push_back(find_cert(certs, n)->divisor_gens);
    const std::vector<unsigned long> qs{2, 4, 8};
    const CoverReport rep = component_cover_check(ctx.surface, parse_poly(cut), comps, qs, ctx.config.samples, r.seed);
    json fields = json::array();
    for (const auto& f : rep.fields) {
        json viol = json::array();
        for (const auto& pt : f.violations) viol.push_back(pt.to_string());
        fields.push_back({{"q", f.q}, {"sampled", f.sampled}, {"violations", viol}});
    }
    r.data = {{"cut", cut}, {"components", names}, {"fields", fields}};
    return rep.ok() && rep.sampled() > 0;
}

const std::vector<ClaimDef>& claims() {
    static const std::vector<ClaimDef> defs = [] {
        std::vector<ClaimDef> d;
        const auto proof = ClaimKind::proof;
        const auto evidence = ClaimKind::evidence;

        d.push_back({"lemma2.count", proof, [](const RunContext& ctx, Report& r) {
                         EnumerationLimits lim;
                         lim.threads = ctx.inner_threads;
                         const auto n = count_points(ctx.surface, 2, lim);
                         r.data = n;
                         return n == 10;
                     }});
        d.push_back({"lemma2.ordinary", proof, [](const RunContext& ctx, Report& r) {
                         const bool ord = is_ordinary(ctx.surface);
                         r.data = {{"points", count_points(ctx.surface, 2)}, {"ordinary", ord}};
                         return ord;
                     }});
        for (const char* name : {"D1", "D2", "D3", "D4", "D5"}) {
            const std::string n = name;
            d.push_back({"thm1.residue." + n, proof,
                         [n](const RunContext& ctx, Report& r) { return residue_claim(n, ctx, r); }});
        }
        d.push_back({"thm1.unramified", proof, [](const RunContext& ctx, Report& r) {
                         json verdicts = json::object();
                         bool all = ctx.certs.size() >= 5;
                         for (const char* name : {"D1", "D2", "D3", "D4", "D5"}) {
                             const ResidueCertificate* cert = find_cert(ctx.certs, name);
                             if (!cert) {
                                 verdicts[name] = "missing";
                                 all = false;
                                 continue;
                             }
                             try {
                                 const auto res = residue_check(ctx.cls, *cert);
                                 verdicts[name] = to_string(res.verdict);
                                 all = all && res.verdict == ResidueVerdict::trivial;
                             } catch (const std::exception& e) {
                                 verdicts[name] = std::string("error: ") + e.what();
                                 all = false;
                             }
                         }
                         r.data = {{"residues", verdicts}, {"unramified", all}};
                         return all;
                     }});
        d.push_back({"thm1.eval.P1", proof, [](const RunContext& ctx, Report& r) {
                         const EvalRecord rec = eval_at(ctx.cls, p1_point(ctx.config.precision));
                         const EvalRecord exact = eval_at_rational(ctx.cls, {1, 0, 1, 0}, Place::prime(2));
                         r.data = {{"padic", to_json(rec)}, {"exact", to_json(exact)}};
                         return rec.invariant.is_zero() && exact.invariant.is_zero();
                     }});
        d.push_back({"thm1.eval.P2", proof, [](const RunContext& ctx, Report& r) {
                         const ModPoint pt = p2_point(ctx.surface, ctx.config.precision);
                         const EvalRecord rec = eval_at(ctx.cls, pt);
                         const PadicNum& a = *rec.a_value;
                         const BigInt a_mod8 = a.valuation() == 0 ? mod(a.unit(), 8) : BigInt(-1);
                         r.data = to_json(rec);
                         r.data["a_unit_mod8"] = a_mod8.get_str();
                         return !rec.invariant.is_zero() && a_mod8 == 7;
                     }});
        for (unsigned long p : kConstancyPrimes) {
            d.push_back({"sec2.constancy.p" + std::to_string(p), evidence,
                         [p](const RunContext& ctx, Report& r) { return constancy_claim(p, ctx, r); }});
        }
        for (unsigned long p : kBadPrimes) {
            d.push_back({"sec2.bad-fiber.p" + std::to_string(p), proof,
                         [p](const RunContext& ctx, Report& r) { return bad_fiber_claim(p, ctx, r); }});
        }
        d.push_back({"sec2.good-reduction-scan", evidence, [](const RunContext& ctx, Report& r) {
                         EnumerationLimits lim;
                         lim.threads = ctx.inner_threads;
                         json scans = json::array();
                         bool clean = true;
                         for (unsigned long p : kScanPrimes) {
                             const auto rep = smoothness_scan(ctx.surface, p, kScanDegree, lim);
                             clean = clean && rep.no_singular_points();
                             scans.push_back(to_json(rep));
                         }
                         r.data = {{"max_degree", kScanDegree}, {"scans", scans}};
                         return clean;
                     }});
        d.push_back({"sec2.real", evidence, [](const RunContext& ctx, Report& r) {
                         const unsigned n = ctx.config.samples;
                         std::size_t trivial = 0, negative_b = 0, positive_a_on_negative_b = 0;
                         for (unsigned i = 0; i < n; ++i) {
                             const EvalRecord rec = eval_real_sample(ctx.cls, ctx.surface, r.seed + i);
                             trivial += rec.symbol == 1;
                             if (rec.b_sign < 0) {
                                 ++negative_b;
                                 positive_a_on_negative_b += rec.a_sign > 0;
                             }
                         }
                         r.data = {{"samples", n},
                                   {"symbol_plus_one", trivial},
                                   {"b_negative", negative_b},
                                   {"a_positive_when_b_negative", positive_a_on_negative_b}};
                         return trivial == n && positive_a_on_negative_b == negative_b;
                     }});
        d.push_back({"sec2.cover.x", evidence, [](const RunContext& ctx, Report& r) {
                         return cover_claim("x", {"D1", "D2"}, ctx, r);
                     }});
        d.push_back({"sec2.cover.z", evidence, [](const RunContext& ctx, Report& r) {
                         return cover_claim("z", {"D1", "D3"}, ctx, r);
                     }});
        d.push_back({"sec2.cover.f", evidence, [](const RunContext& ctx, Report& r) {
                         return cover_claim("z^3 + w^2*x + x*y*z", {"D1", "D4", "D5"}, ctx, r);
                     }});
        d.push_back({"sec32.mod4", evidence, [](const RunContext& ctx, Report& r) {
                         const unsigned k = std::max(ctx.config.precision, 5u);
                         const EvalTable t = eval_table(ctx.cls, ctx.surface, 2, 2, 10, k, r.seed, ctx.inner_threads);
                         r.data = to_json(t);
                         return !t.rows.empty() && t.all_singletons() && t.total_errors() == 0;
                     }});
        d.push_back({"remark4.surjective", proof, [](const RunContext& ctx, Report& r) {
                         const unsigned k = std::max(ctx.config.precision, 4u);
                         const EvalTable t = eval_table(ctx.cls, ctx.surface, 2, 1, 40, k, r.seed, ctx.inner_threads);
                         r.data = to_json(t);
                         const ModPoint target{2, 1, {1, 0, 1, 0}};
                         for (const auto& row : t.rows)
                             if (row.cls == target) return row.invariants.size() == 2;
                         r.error = "class (1:0:1:0) mod 2 not found";
                         return false;
                     }});
        d.push_back({"lemma3.identity", proof, [](const RunContext&, Report& r) {
                         const bool ok = lemma3_check();
                         r.data = ok;
                         return ok;
                     }});
        d.push_back({"lemma3.glue", proof, [](const RunContext&, Report& r) {
                         json pairs = json::array();
                         std::size_t checked = 0;
                         bool all = true;
                         for (unsigned p = 0; p < 4; ++p)
                             for (unsigned q = 0; q < 4; ++q) {
                                 if (p == q) continue;
                                 const GlueResult g = chart_glue_check({0, 3}, {p, q});
                                 checked += g.checked;
                                 all = all && (!g.checked || g.equal);
                                 json e = {{"pair", std::to_string(p) + "," + std::to_string(q)},
                                           {"checked", g.checked},
                                           {"equal", g.equal}};
                                 if (!g.reason.empty()) e["reason"] = g.reason;
                                 pairs.push_back(e);
                             }
                         r.data = {{"reference", "0,3"}, {"checked", checked}, {"pairs", pairs}};
                         return all && checked > 0;
                     }});
        d.push_back({"thm1.obstruction", proof, [](const RunContext& ctx, Report& r) {
                         const unsigned k = ctx.config.precision;
                         Evidence ev;
                         ev.local.push_back(eval_at(ctx.cls, p1_point(k)));
                         ev.local.push_back(eval_at(ctx.cls, p2_point(ctx.surface, k)));
                         std::uint64_t s = r.seed;
                         for (unsigned long p : kConstancyPrimes) {
                             const auto sweep = random_point_sweep(ctx.cls, ctx.surface, p, kSweepSize, k, ++s);
                             ev.local.insert(ev.local.end(), sweep.records.begin(), sweep.records.end());
                         }
                         for (unsigned i = 0; i < kSweepSize; ++i)
                             ev.local.push_back(eval_real_sample(ctx.cls, ctx.surface, ++s));
                         for (const auto& v : reciprocity_places())
                             ev.rational_point.push_back(eval_at_rational(ctx.cls, {1, 0, 1, 0}, v));
                         const ObstructionReport rep = obstruction_report(ctx.cls, ev);
                         json constant = json::object();
                         for (const auto& [place, inv] : rep.constant_places) constant[place.to_string()] = inv.to_string();
                         json nonconst = json::array();
                         for (const auto& v : rep.nonconstant_places) nonconst.push_back(v.to_string());
                         r.data = {{"verdict", rep.summary()},
                                   {"nonconstant_places", nonconst},
                                   {"constant_places", constant},
                                   {"reciprocity_ok", rep.reciprocity_ok()}};
                         if (rep.witnesses) r.data["witnesses"] = {to_json(rep.witnesses->first), to_json(rep.witnesses->second)};
                         return rep.verdict == ObstructionVerdict::obstructed && rep.nonconstant_places.size() == 1 &&
                                rep.nonconstant_places.front() == Place::prime(2) && rep.reciprocity_ok();
                     }});
        d.push_back({"thm1.reciprocity", proof, [](const RunContext& ctx, Report& r) {
                         BrInvariant sum = BrInvariant::zero();
                         json per = json::object();
                         for (const auto& v : reciprocity_places()) {
                             const EvalRecord rec = eval_at_rational(ctx.cls, {1, 0, 1, 0}, v);
                             per[v.to_string()] = rec.invariant.to_string();
                             sum = sum + rec.invariant;
                         }
                         r.data = {{"point", "(1:0:1:0)"}, {"invariants", per}, {"sum", sum.to_string()}};
                         return sum.is_zero();
                     }});
        d.push_back({"thm4.default", proof, [](const RunContext& ctx, Report& r) {
                         const FamilyReport rep = family_check(FamilyParams::parse(ctx.config.params), ctx.config.precision);
                         r.data = to_json(rep);
                         return rep.passed();
                     }});
        d.push_back({"thm4.sweep", proof, [](const RunContext& ctx, Report& r) {
                         json runs = json::array();
                         bool all = true;
                         for (unsigned i = 0; i < kSweepSize; ++i) {
                             const FamilyParams params = FamilyParams::random(r.seed + i, true);
                             const FamilyReport rep = family_check(params, ctx.config.precision);
                             all = all && rep.passed();
                             runs.push_back({{"params", params.to_string()}, {"verdict", rep.verdict}, {"passed", rep.passed()}});
                         }
                         r.data = {{"instances", runs}};
                         return all;
                     }});
        d.push_back({"thm4.nonsquare", proof, [](const RunContext& ctx, Report& r) {
                         const FamilyReport rep = family_check(FamilyParams::parse("1,1,1,3,1"), ctx.config.precision);
                         r.data = to_json(rep);
                         const ResidueResult* d5 = nullptr;
                         for (const auto& [name, res] : rep.residues)
                             if (name == "D5") d5 = &res;
                         return rep.passed() && d5 && d5->verdict == ResidueVerdict::nontrivial &&
                                d5->delta == Rational(rep.delta_kernel) && !rep.unramified;
                     }});
        return d;
    }();
    return defs;
}

const ClaimDef& find_claim(const std::string& id) {
    for (const auto& c : claims())
        if (c.id == id) return c;
    throw std::invalid_argument("unknown claim " + id);
}

}  // namespace

RunContext RunContext::from(const Config& config) {
    QuaternionClass cls = QuaternionClass::k3_class();
    try {
        if (config.class_a || config.class_b) {
            cls = QuaternionClass(config.class_a ? FactoredFunction::parse(*config.class_a) : cls.a(),
                                  config.class_b ? FactoredFunction::parse(*config.class_b) : cls.b());
        }
    } catch (const std::exception& e) {
        throw UsageError(std::string("bad class override: ") + e.what());
    }
    std::vector<ResidueCertificate> certs;
    if (config.certs) {
        try {
            certs = load_certificates(*config.certs);
        } catch (const std::exception& e) {
            throw UsageError(std::string("bad certificate file: ") + e.what());
        }
    } else {
        certs = k3_certificates();
    }
    return RunContext{config, Hypersurface::k3_quartic(), std::move(cls), std::move(certs), config.threads};
}

const std::vector<std::string>& claim_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto& c : claims()) out.push_back(c.id);
        return out;
    }();
    return ids;
}

Report run_claim(const std::string& id, const RunContext& ctx) {
    const ClaimDef& def = find_claim(id);
    Report r;
    r.claim = id;
    r.kind = def.kind;
    r.seed = claim_seed(id, ctx.config.seed);
    const auto start = std::chrono::steady_clock::now();
    try {
        r.set_outcome(def.body(ctx, r));
    } catch (const std::exception& e) {
        r.error = e.what();
        r.status = Status::fail;
    }
    r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<Report> reproduce_all(const RunContext& ctx) {
    const auto& ids = claim_ids();
    std::vector<Report> out(ids.size());
    std::vector<std::size_t> selected;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (glob_match(ctx.config.claims, ids[i])) {
            selected.push_back(i);
            continue;
        }
        out[i].claim = ids[i];
        out[i].kind = find_claim(ids[i]).kind;
        out[i].status = Status::skipped;
        out[i].seed = claim_seed(ids[i], ctx.config.seed);
    }
    const unsigned outer = ctx.config.threads ? ctx.config.threads : std::max(1u, std::thread::hardware_concurrency());
    RunContext inner = ctx;
    if (outer > 1) inner.inner_threads = 1;
    parallel_for(selected.size(), outer, [&](std::size_t j) { out[selected[j]] = run_claim(ids[selected[j]], inner); });
    return out;
}

}  // namespace k3br::cli
