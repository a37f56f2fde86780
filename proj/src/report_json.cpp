#include "schurlab/report_json.hpp"

#include "schurlab/random.hpp"

namespace schurlab {

namespace {

Json strings(const std::vector<Rational>& xs) {
    Json out = Json::array();
    for (const auto& x : xs) out.push_back(x.to_string());
    return out;
}

}  // namespace

Json to_json(const ExpansionReport& r, std::optional<RunSeed> seed) {
    Json j;
    j["schema"] = kReportSchema;
    if (seed) {
        j["prng"] = std::string(SeededRng::kAlgorithm);
        j["seed"] = seed->seed;
    }
    j["identity"] = r.identity;
    j["n"] = r.n;
    j["cutoff"] = r.cutoff;
    j["match"] = r.match();
    j["first_mismatch_degree"] = r.first_mismatch_degree ? Json(*r.first_mismatch_degree) : Json(nullptr);
    j["vanishing_verified_below"] = r.vanishing_verified_below;
    j["vanishing_holds"] = r.vanishing_holds;
    j["lhs_coeffs"] = r.lhs;
    j["rhs_coeffs"] = r.rhs;
    if (!r.extra.empty()) {
        Json extra = Json::object();
        for (const auto& [name, coeffs] : r.extra) extra[name] = coeffs;
        j["extra_coeffs"] = extra;
    }
    return j;
}

Json to_json(const ConclusionReport& r) {
    Json j;
    j["p"] = r.p;
    j["q"] = r.q;
    j["q_effective"] = r.q_effective;
    j["orders"] = r.orders;
    j["signs"] = r.signs;
    j["nonnegative"] = r.nonnegative;
    j["strictly_positive"] = r.strictly_positive;
    j["first_failure"] = r.first_failure ? Json(*r.first_failure) : Json(nullptr);
    j["verdict"] = r.pass() ? "PASS" : "FAIL";
    return j;
}

Json to_json(const MaclaurinVerdict& v) {
    Json j;
    j["verdict"] = v.pass ? "PASS" : "FAIL";
    j["first_offending_index"] = v.first_offending_index ? Json(*v.first_offending_index) : Json(nullptr);
    j["from_reversal"] = v.from_reversal;
    return j;
}

Json to_json(const PreserverReport& r) {
    Json j;
    j["schema"] = kReportSchema;
    Json family;
    family["a"] = r.family.a.to_string();
    family["epsilon"] = r.family.epsilon.to_string();
    family["u"] = strings(r.family.u);
    family["n"] = r.family.n();
    j["family"] = family;
    j["theorem_labeled"] = !r.family.relaxed;
    j["psd_method"] = r.psd_method;
    j["grid_size"] = r.grid.size();
    Json violations = Json::array();
    for (const auto& v : r.violations) {
        Json entry;
        entry["t"] = v.t.to_string();
        if (v.margin_exact.empty()) {
            entry["min_eig_or_coeff"] = v.margin;
            entry["threshold"] = v.threshold;
        } else {
            entry["min_eig_or_coeff"] = v.margin_exact;
        }
        violations.push_back(entry);
    }
    j["violations"] = violations;
    j["certified_on_grid"] = r.certified_on_grid();
    j["conclusion"] = r.conclusion ? to_json(*r.conclusion) : Json(nullptr);
    j["maclaurin"] = r.maclaurin ? to_json(*r.maclaurin) : Json(nullptr);
    j["verdict"] = r.pass() ? "PASS" : "FAIL";
    return j;
}

Json to_json(const AdmissibleClass& c) {
    Json j;
    j["schema"] = kReportSchema;
    j["all_admissible"] = c.all_admissible;
    j["threshold"] = c.all_admissible ? Json(nullptr) : Json(c.threshold);
    j["threshold_sum"] = c.all_admissible ? Json(nullptr) : Json(c.threshold_sum);
    j["classification"] = c.to_string();
    return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace schurlab
