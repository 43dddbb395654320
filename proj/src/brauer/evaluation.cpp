#include "k3br/brauer/evaluation.hpp"
#include "k3br/algebra/parallel.hpp"

#include <algorithm>
#include <random>

namespace k3br {

const char* to_string(EvalMethod m) { return m == EvalMethod::direct ? "direct" : "stabilized heuristic"; }

namespace {

std::string sign_text(int s) { return s > 0 ? "+" : (s < 0 ? "-" : "0"); }

std::uint64_t mix(std::uint64_t seed, std::uint64_t i) {
    std::uint64_t x = seed ^ (i + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

std::string EvalRecord::a_text() const {
    if (a_value) return a_value->to_string();
    if (a_exact) return a_exact->get_str();
    return sign_text(a_sign);
}

std::string EvalRecord::b_text() const {
    if (b_value) return b_value->to_string();
    if (b_exact) return b_exact->get_str();
    return sign_text(b_sign);
}

EvalRecord eval_at(const QuaternionClass& cls, const ModPoint& pt) {
    EvalRecord rec;
    rec.place = Place::prime(pt.p);
    rec.point = pt.to_string();
    rec.precision = pt.precision;
    try {
        rec.a_value = cls.a().evaluate_padic(pt);
        rec.b_value = cls.b().evaluate_padic(pt);
        rec.symbol = hilbert_symbol_padic(*rec.a_value, *rec.b_value);
    } catch (const InsufficientPrecision& e) {
        throw ArgumentVanishes("argument not determined at " + pt.to_string() + ": " + e.what());
    }
    rec.invariant = invariant(rec.symbol);
    return rec;
}

EvalRecord eval_at_rational(const QuaternionClass& cls, const std::array<Rational, 4>& pt, const Place& place) {
    EvalRecord rec;
    rec.place = place;
    rec.point = RationalPoint::from(pt).to_string();
    try {
        rec.a_exact = cls.a().evaluate(pt);
        rec.b_exact = cls.b().evaluate(pt);
    } catch (const std::domain_error& e) {
        throw ArgumentVanishes(std::string("argument undefined at ") + rec.point + ": " + e.what());
    }
    if (*rec.a_exact == 0 || *rec.b_exact == 0) throw ArgumentVanishes("argument vanishes at " + rec.point);
    rec.symbol = hilbert_symbol(*rec.a_exact, *rec.b_exact, place);
    rec.invariant = invariant(rec.symbol);
    return rec;
}

std::vector<HomogPoly> sign_forms(const QuaternionClass& cls) {
    std::vector<HomogPoly> out;
    for (const auto* fn : {&cls.a(), &cls.b()})
        for (const auto& f : fn->factors())
            if (std::find(out.begin(), out.end(), f.poly) == out.end()) out.push_back(f.poly);
    return out;
}

EvalRecord eval_at_real(const QuaternionClass& cls, const RealSample& sample) {
    const auto forms = sign_forms(cls);
    if (sample.signs.size() != forms.size()) throw std::invalid_argument("real sample signs do not match the class");
    auto sign_of = [&](const FactoredFunction& fn) {
        int s = sgn(fn.constant());
        for (const auto& f : fn.factors()) {
            const auto i = std::find(forms.begin(), forms.end(), f.poly) - forms.begin();
            const int fs = sample.signs[i];
            if (fs == 0) return 0;
            if (fs < 0 && f.exponent % 2 != 0) s = -s;
        }
        return s;
    };
    EvalRecord rec;
    rec.place = Place::infinity();
    rec.point = sample.to_string();
    rec.a_sign = sign_of(cls.a());
    rec.b_sign = sign_of(cls.b());
    if (rec.a_sign == 0 || rec.b_sign == 0) throw ArgumentVanishes("argument vanishes at " + rec.point);
    rec.symbol = (rec.a_sign < 0 && rec.b_sign < 0) ? -1 : 1;
    rec.invariant = invariant(rec.symbol);
    return rec;
}

EvalRecord eval_real_sample(const QuaternionClass& cls, const Hypersurface& surface, std::uint64_t seed) {
    const auto forms = sign_forms(cls);
    for (std::uint64_t attempt = 0; attempt < 16; ++attempt) {
        const RealSample s = real_point_sample(surface, forms, mix(seed, attempt));
        try {
            return eval_at_real(cls, s);
        } catch (const ArgumentVanishes&) {
        }
    }
    throw Unresolved("every real sample had a vanishing argument");
}

EvalRecord eval_with_retry(const QuaternionClass& cls, const LiftSampler::Sample& sample, unsigned precision) {
    for (unsigned k = precision;; k = std::min(2 * k, kMaxLiftPrecision)) {
        try {
            return eval_at(cls, sample.at(k));
        } catch (const ArgumentVanishes&) {
            if (k == kMaxLiftPrecision) throw;
        }
    }
}

EvalRecord eval_stabilized(const QuaternionClass& cls, const Hypersurface& surface, const ModPoint& pt,
                           std::uint64_t seed, unsigned agree, unsigned max_levels) {
    // run counts consecutive agreeing levels ending with last; 0 means none yet.
    BrInvariant last = BrInvariant::zero();
    unsigned run = 0;
    for (unsigned level = pt.precision; level < pt.precision + max_levels; ++level) {
        const ModPoint disk = level <= pt.precision ? pt : hensel_lift(surface, pt, level);
        LiftSampler sampler(surface, disk, mix(seed, level));
        EvalRecord rec;
        try {
            rec = eval_with_retry(cls, sampler.draw(), std::max(16u, 2 * level));
        } catch (const ArgumentVanishes&) {
            run = 0;
            continue;
        }
        if (run > 0 && last == rec.invariant)
            ++run;
        else
            run = 1;
        last = rec.invariant;
        if (run >= agree) {
            rec.method = EvalMethod::stabilized;
            rec.stable_levels = run;
            rec.point = "near " + pt.to_string();
            return rec;
        }
    }
    throw ArgumentVanishes("invariant did not stabilize near " + pt.to_string());
}

bool EvalTable::all_singletons() const {
    return std::all_of(rows.begin(), rows.end(), [](const EvalTableRow& r) { return r.invariants.size() == 1; });
}

std::size_t EvalTable::total_errors() const {
    std::size_t n = 0;
    for (const auto& r : rows) n += r.errors;
    return n;
}

EvalTable eval_table(const QuaternionClass& cls, const Hypersurface& surface, unsigned long p, unsigned m,
                     unsigned n, unsigned k, std::uint64_t seed, unsigned threads) {
    if (k < m + 3) throw std::invalid_argument("eval_table needs precision k >= m + 3");
    if (k > kMaxLiftPrecision) throw std::invalid_argument("precision above the lift limit");
    EvalTable table{p, m, n, k, {}};
    const auto classes = smooth_points_mod(surface, p, m);
    table.rows.resize(classes.size());
    parallel_for(classes.size(), threads, [&](std::size_t i) {
        EvalTableRow& row = table.rows[i];
        row.cls = classes[i];
        LiftSampler sampler(surface, classes[i], mix(seed, i));
        for (unsigned j = 0; j < n; ++j) {
            try {
                row.invariants.insert(eval_with_retry(cls, sampler.draw(), k).invariant);
                ++row.evaluations;
            } catch (const ArgumentVanishes&) {
                ++row.errors;
            }
        }
    });
    return table;
}

std::set<BrInvariant> SweepResult::invariants() const {
    std::set<BrInvariant> out;
    for (const auto& r : records) out.insert(r.invariant);
    return out;
}

SweepResult random_point_sweep(const QuaternionClass& cls, const Hypersurface& surface, unsigned long p, unsigned n,
                               unsigned k, std::uint64_t seed) {
    SweepResult res;
    res.p = p;
    const auto pts = smooth_points(surface, p);
    if (pts.empty()) throw std::invalid_argument("no smooth F_p-points at p = " + std::to_string(p));
    std::mt19937_64 rng(mix(seed, p));
    std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
    for (unsigned i = 0; i < n; ++i) {
        LiftSampler sampler(surface, to_mod_point(pts[pick(rng)]), rng());
        try {
            res.records.push_back(eval_with_retry(cls, sampler.draw(), k));
        } catch (const ArgumentVanishes&) {
            ++res.errors;
        }
    }
    return res;
}

}  // namespace k3br
