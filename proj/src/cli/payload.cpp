#include "k3br/cli/payload.hpp"

namespace k3br::cli {

using nlohmann::json;

json to_json(const EvalRecord& r) {
    json j;
    j["place"] = r.place.to_string();
    j["point"] = r.point;
    if (r.precision > 0) j["precision"] = r.precision;
    j["a"] = r.a_text();
    j["b"] = r.b_text();
    j["symbol"] = r.symbol;
    j["invariant"] = r.invariant.to_string();
    j["method"] = to_string(r.method);
    if (r.method == EvalMethod::stabilized) j["stable_levels"] = r.stable_levels;
    return j;
}

json to_json(const ResidueResult& r) {
    json j;
    j["verdict"] = to_string(r.verdict);
    if (r.verdict == ResidueVerdict::nontrivial) j["class"] = r.delta.get_str();
    j["method"] = r.method;
    j["residue"] = r.residue.to_string();
    j["quotient"] = r.quotient.to_string();
    if (r.sampling) {
        j["sampling"] = {{"fields", r.sampling->fields},
                         {"points", r.sampling->points},
                         {"squares", r.sampling->squares}};
    }
    if (!r.detail.empty()) j["detail"] = r.detail;
    return j;
}

json to_json(const FamilyReport& r) {
    json j;
    j["params"] = r.params.to_string();
    j["delta"] = r.delta.get_str();
    j["delta_kernel"] = r.delta_kernel.get_str();
    j["delta_square"] = r.delta_square;
    json res = json::object();
    for (const auto& [name, rr] : r.residues) res[name] = to_json(rr);
    j["residues"] = res;
    j["unramified"] = r.unramified;
    if (r.p1) j["P1"] = to_json(*r.p1);
    if (r.p2) j["P2"] = to_json(*r.p2);
    if (r.f_p2_mod8) j["f_P2_mod8"] = r.f_p2_mod8->get_str();
    if (r.y_p2_mod8) j["y_P2_mod8"] = r.y_p2_mod8->get_str();
    j["verdict"] = r.verdict;
    j["passed"] = r.passed();
    return j;
}

json to_json(const SmoothnessReport& r) {
    json levels = json::array();
    for (const auto& l : r.levels) {
        json pts = json::array();
        for (const auto& pt : l.singular) pts.push_back(pt.to_string());
        levels.push_back({{"degree", l.degree}, {"q", l.q}, {"points", l.points}, {"singular", pts}});
    }
    return {{"p", r.p}, {"levels", levels}, {"no_singular_points", r.no_singular_points()}};
}

json to_json(const EvalTable& t) {
    json rows = json::array();
    for (const auto& row : t.rows) {
        json inv = json::array();
        for (const auto& i : row.invariants) inv.push_back(i.to_string());
        rows.push_back({{"class", row.cls.to_string()},
                        {"invariants", inv},
                        {"evaluations", row.evaluations},
                        {"errors", row.errors}});
    }
    return {{"p", t.p},
            {"class_precision", t.class_precision},
            {"lifts_per_class", t.lifts_per_class},
            {"precision", t.precision},
            {"classes", t.rows.size()},
            {"all_singletons", t.all_singletons()},
            {"errors", t.total_errors()},
            {"rows", rows}};
}

}  // namespace k3br::cli
