/*
   Copyright 2026 The maxcurve Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/**
 * @file commands.hpp
 * @brief Report builders behind the command-line tool.
 *
 * Each run_* takes a validated CommandConfig and returns a JSON report plus an exit code:
 * 0 when every check passes, 1 when an identity fails. Validation errors (exit 2) and
 * exhausted budgets (exit 3) propagate as exceptions; see exit_code_for().
 */

#ifndef MAXCURVE_COMMANDS_HPP
#define MAXCURVE_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "agcode.hpp"
#include "curve_model.hpp"
#include "errors.hpp"
#include "field_tower.hpp"
#include "theorems.hpp"
#include "weierstrass.hpp"

namespace maxcurve {

using Json = nlohmann::json;

struct CommandConfig {
    std::uint32_t p = 0, a = 0;
    std::optional<std::uint64_t> hermitian_m;
    std::vector<std::string> additive;  // coefficients a_0, a_1, ... of F
    std::optional<std::uint64_t> d;
    std::optional<std::uint64_t> lambda;
    bool exact = false;
    std::string emit;
    std::string orders_csv;             // audit: order sequences export path
    std::string format = "json";
    std::optional<std::uint64_t> budget;
    std::uint64_t sample_seed = 0;
    std::uint64_t sample_size = 1000;
    std::uint64_t full_check_max_q = 5;
    std::optional<std::uint64_t> m1;    // conjecture
    std::string coef_a, coef_b;         // normalize: f(T) = aT^q + bT
    std::optional<std::uint64_t> m;     // normalize
};

struct CommandResult {
    Json report;
    int exit_code = 0;
};

inline int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const ValidationError*>(&e)) return 2;
    if (dynamic_cast<const BudgetExceeded*>(&e)) return 3;
    return 1;
}

inline std::string render(const Json& j) { return j.dump(2) + "\n"; }

inline std::string element_string(const FieldTower& t, Fe x) { return encode_element(t, x); }

/// "7" is the integer 7 mod p; "c0:c1:..." lists base-p digits of an ambient element.
inline Fe parse_element(const FieldTower& t, const std::string& s) {
    if (s.empty()) throw ValidationError("empty field element");
    std::vector<std::uint32_t> digits;
    std::stringstream in(s);
    std::string part;
    while (std::getline(in, part, ':')) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(part, &used);
        } catch (const std::exception&) {
            throw ValidationError("bad field element '" + s + "'");
        }
        if (used != part.size()) throw ValidationError("bad field element '" + s + "'");
        if (s.find(':') == std::string::npos) return t.from_int(v);
        if (v < 0 || static_cast<std::uint64_t>(v) >= t.p()) throw ValidationError("digit out of range in '" + s + "'");
        digits.push_back(static_cast<std::uint32_t>(v));
    }
    return t.from_coeffs(digits);
}

inline void check_config(const CommandConfig& c) {
    if (c.p == 0 || c.a == 0) throw ValidationError("--p and --a are required");
    if (c.budget && *c.budget == 0) throw ValidationError("--budget must be positive");
    if (c.sample_size == 0) throw ValidationError("--sample-size must be positive");
}

inline FieldTower make_tower(const CommandConfig& c) {
    check_config(c);
    return FieldTower::build(c.p, c.a);
}

inline CurveModel make_curve(const CommandConfig& c) {
    const FieldTower t = make_tower(c);
    if (c.hermitian_m && !c.additive.empty()) throw ValidationError("give either --hermitian-m or --additive, not both");
    if (c.hermitian_m) return CurveModel::hermitian(t, *c.hermitian_m);
    if (c.additive.empty()) throw ValidationError("a curve needs --hermitian-m or --additive with --d");
    if (!c.d) throw ValidationError("--additive needs --d");
    std::vector<Fe> coeffs;
    for (const auto& s : c.additive) coeffs.push_back(parse_element(t, s));
    return CurveModel::additive(t, coeffs, *c.d);
}

inline Json curve_json(const CurveModel& curve) {
    const auto& t = curve.tower();
    Json coeffs = Json::array();
    for (Fe x : curve.f_coeffs()) coeffs.push_back(element_string(t, x));
    return {{"family", to_string(curve.family())},
            {"p", t.p()},
            {"a", t.a()},
            {"q", curve.q()},
            {"d", curve.d()},
            {"deg_f", curve.deg_f()},
            {"f_coeffs", coeffs},
            {"genus", curve.genus()}};
}

inline Json bounds_json(const BoundsReport& b) {
    return {{"twice_genus", b.twice_genus},
            {"hasse_weil", b.hasse_weil},
            {"hasse_weil_ok", b.hasse_weil_ok},
            {"castelnuovo", b.castelnuovo},
            {"castelnuovo_M", b.castelnuovo_m},
            {"castelnuovo_e", b.castelnuovo_e},
            {"castelnuovo_ok", b.castelnuovo_ok},
            {"castelnuovo_attained", b.castelnuovo_attained},
            {"lewittes", b.lewittes},
            {"lewittes_count", b.lewittes_count},
            {"lewittes_ok", b.lewittes_ok},
            {"global", b.global},
            {"global_ok", b.global_ok},
            {"n", b.n},
            {"m1", b.m1},
            {"all", b.all()}};
}

inline CommandResult run_curve(const CommandConfig& c) {
    const CurveModel curve = make_curve(c);
    CommandResult r;
    Json& j = r.report;
    j["curve"] = curve_json(curve);
    const auto maxi = curve.maximality();
    j["genus"] = curve.genus();
    j["points"] = maxi.points;
    j["hasse_weil"] = maxi.hasse_weil;
    j["maximal"] = maxi.maximal;
    const std::int64_t actual4 = static_cast<std::int64_t>(curve.count_points(Level::kFq4));
    const std::int64_t predicted4 = predicted_count(curve.q(), curve.genus(), 2);
    j["points_fq4"] = actual4;
    j["predicted_fq4"] = predicted4;
    bool ok = maxi.maximal && actual4 == predicted4;
    if (maxi.maximal) {
        const BoundsReport b = bounds_report(curve);
        j["bounds"] = bounds_json(b);
        ok = ok && b.all();
    } else {
        j["bounds"] = nullptr;
    }
    j["ok"] = ok;
    r.exit_code = ok ? 0 : 1;
    return r;
}

inline std::string orders_key(const std::vector<std::int64_t>& v) {
    std::string s;
    for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
}

inline Json census_json(const OrderCensus& c) {
    Json rational = Json::object(), non_rational = Json::object();
    for (const auto& [k, v] : c.rational) rational[orders_key(k)] = v;
    for (const auto& [k, v] : c.non_rational) non_rational[orders_key(k)] = v;
    return {{"points_checked", c.points_checked},
            {"complete", c.complete},
            {"rational_orders", rational},
            {"non_rational_orders", non_rational},
            {"j1_is_one", c.j1_is_one},
            {"top_order_rule", c.top_order_rule},
            {"epsilon_bound", c.epsilon_bound},
            {"nu_bound_rational", c.nu_bound},
            {"nu_bound_failures_non_rational", c.nu_bound_failures_off_k},
            {"weierstrass_points_rational", c.non_rational_generic},
            {"all", c.all()}};
}

inline Json normalization_json(const FieldTower& t, const NormalizationResult& n) {
    return {{"i", n.i},
            {"m", n.m},
            {"epsilon", element_string(t, n.epsilon)},
            {"x_scale", element_string(t, n.x_scale)},
            {"trace_equation", n.trace_equation},
            {"verified", n.verified}};
}

inline Json dichotomy_json(const FieldTower& t, const DichotomyVerdict& v) {
    Json j = {{"branch", to_string(v.branch)}, {"n", v.n},     {"m1", v.m1},
              {"n_m1", v.n_m1},                {"q", v.q},     {"maximal", v.maximal},
              {"passed", v.passed()}};
    j["genus_identity"] = v.genus_identity ? Json(*v.genus_identity) : Json(nullptr);
    j["conjecture_relation"] = v.conjecture_flag ? Json(*v.conjecture_flag) : Json(nullptr);
    j["normalization"] = v.normalization ? normalization_json(t, *v.normalization) : Json(nullptr);
    if (!v.normalization_note.empty()) j["normalization_note"] = v.normalization_note;
    return j;
}

inline CommandResult run_audit(const CommandConfig& c) {
    const CurveModel curve = make_curve(c);
    const auto& t = curve.tower();
    AuditOptions opts;
    opts.sample_seed = c.sample_seed;
    opts.sample_size = c.sample_size;
    opts.full_check_max_q = c.full_check_max_q;

    CommandResult r;
    Json& j = r.report;
    j["curve"] = curve_json(curve);
    const bool maximal = curve.is_maximal();
    j["maximal"] = maximal;
    if (!maximal) {
        j["all_identities"] = false;
        r.exit_code = 1;
        return r;
    }
    const LinearSystemInfo info = linear_system_info(curve);
    j["linear_system"] = {{"n", info.n},         {"degree", info.degree}, {"epsilon", info.epsilon},
                          {"nu", info.nu},       {"degR", info.deg_r},    {"degS", info.deg_s}};
    j["degR"] = info.deg_r;
    j["degS"] = info.deg_s;
    bool all = true;

    const std::int64_t m = static_cast<std::int64_t>(curve.d());
    const bool ramification_applies =
        curve.family() == Family::kHermitianType && info.n >= 2 && info.n * m == info.q + 1;
    if (ramification_applies) {
        const RamificationReport rep = ramification_audit(curve, opts);
        j["ramification"] = {{"T1", rep.t1},
                             {"T2", rep.t2},
                             {"w1", rep.w1},
                             {"w2", rep.w2},
                             {"weighted_R", rep.weighted_r},
                             {"S_weight_sum", rep.s_weight_sum},
                             {"unramified_fibers", rep.unramified_fibers},
                             {"t1_is_q_plus_1", rep.t1_is_q_plus_1},
                             {"riemann_hurwitz", rep.riemann_hurwitz},
                             {"deg_r_accounted", rep.deg_r_accounted},
                             {"deg_s_accounted", rep.deg_s_accounted},
                             {"per_point_weights", rep.per_point_weights},
                             {"weierstrass_points_rational", rep.weierstrass_points_rational},
                             {"unramified_fibers_rational", rep.unramified_fibers_rational},
                             {"all", rep.all()}};
        j["census"] = census_json(rep.census);
        j["T1"] = rep.t1;
        j["T2"] = rep.t2;
        all = all && rep.all();
    } else {
        const OrderCensus census = order_census(curve, opts);
        j["ramification"] = nullptr;
        j["census"] = census_json(census);
        j["T1"] = nullptr;
        j["T2"] = nullptr;
        all = all && census.all();
    }

    if (!c.orders_csv.empty()) {
        export_order_sequences(curve, opts, c.orders_csv);
        j["orders_csv"] = c.orders_csv;
    }

    const EmbeddingReport emb = embedding_check(curve);
    j["embedding_check"] = {{"points_checked", emb.points_checked},
                            {"rational_points", emb.rational_points},
                            {"rational_images", emb.rational_images},
                            {"forward", emb.forward},
                            {"backward", emb.backward},
                            {"injective", emb.injective},
                            {"equivalence", emb.equivalence()}};
    j["embedding"] = emb.equivalence();
    // the equivalence is a theorem only for H_{m,q} with nm = q + 1; elsewhere it is recorded
    if (ramification_applies) all = all && emb.equivalence();

    const DichotomyVerdict v = theorem01_check(curve);
    j["theorem01_detail"] = dichotomy_json(t, v);
    j["theorem01"] = to_string(v.branch);
    all = all && v.passed();
    if (v.branch == DichotomyBranch::kQPlus1 || v.branch == DichotomyBranch::kQ) {
        const CorollaryReport cr = corollary02_classify(curve);
        j["corollary02"] = {{"t", cr.t},
                            {"case", to_string(cr.which)},
                            {"t_unique", cr.t_unique},
                            {"identity_ok", cr.identity_ok}};
        all = all && cr.t_unique && cr.identity_ok;
    } else {
        j["corollary02"] = nullptr;
    }
    const BoundsReport b = bounds_report(curve);
    j["bounds"] = bounds_json(b);
    all = all && b.all();
    j["all_identities"] = all;
    r.exit_code = all ? 0 : 1;
    return r;
}

inline CommandResult run_code(const CommandConfig& c) {
    if (!c.lambda) throw ValidationError("code needs --lambda");
    const CurveModel curve = make_curve(c);
    const auto& t = curve.tower();
    const Code code = build_code(curve, *c.lambda);
    const MatrixFormat format = parse_format(c.format);
    CommandResult r;
    Json& j = r.report;
    j["curve"] = curve_json(curve);
    j["n"] = code.params.length;
    j["k"] = code.params.dimension;
    j["lambda"] = code.params.lambda;
    j["q2"] = code.params.field_size;
    j["d_designed"] = code.params.designed_distance;
    bool ok = true;
    if (c.exact) {
        const auto d = min_distance_exact(t, code, c.budget.value_or(kDefaultCodeBudget));
        j["d_exact"] = d;
        j["goppa_bound"] = d >= code.params.designed_distance;
        j["singleton_bound"] = code.params.dimension + d <= code.params.length + 1;
        ok = d >= code.params.designed_distance && code.params.dimension + d <= code.params.length + 1;
    }
    if (!c.emit.empty()) {
        export_matrix(t, code, c.emit, format);
        j["emitted"] = {{"path", c.emit}, {"format", c.format}};
    }
    j["ok"] = ok;
    r.exit_code = ok ? 0 : 1;
    return r;
}

inline CommandResult run_conjecture(const CommandConfig& c) {
    if (!c.m1) throw ValidationError("conjecture needs --m1");
    const FieldTower t = make_tower(c);
    const ConjectureScan s = conjecture_explore(t, *c.m1, c.d.value_or(0), c.budget.value_or(kDefaultConjectureBudget));
    CommandResult r;
    Json& j = r.report;
    j["q"] = s.q;
    j["m1"] = s.m1;
    j["d"] = s.d;
    j["candidates"] = s.candidates;
    j["representatives"] = s.representatives;
    j["complete"] = s.complete;
    Json hits = Json::array();
    for (const auto& h : s.hits) {
        Json coeffs = Json::array();
        for (Fe x : h.coeffs) coeffs.push_back(element_string(t, x));
        hits.push_back({{"f_coeffs", coeffs},
                        {"points", h.points},
                        {"genus", h.genus},
                        {"n", h.n},
                        {"genus_relation", h.genus_relation},
                        {"n_m1_is_q", h.n_m1_is_q}});
    }
    j["hits"] = hits;
    j["consistent"] = s.consistent();
    r.exit_code = s.complete ? 0 : 3;
    return r;
}

inline CommandResult run_normalize(const CommandConfig& c) {
    if (!c.m) throw ValidationError("normalize needs --m");
    if (c.coef_a.empty() || c.coef_b.empty()) throw ValidationError("normalize needs --coef-a and --coef-b");
    const FieldTower t = make_tower(c);
    const NormalizationResult n = normalize_model(t, parse_element(t, c.coef_a), parse_element(t, c.coef_b), *c.m);
    CommandResult r;
    r.report = normalization_json(t, n);
    r.report["q"] = t.q();
    r.exit_code = n.verified && n.trace_equation ? 0 : 1;
    return r;
}

}  // namespace maxcurve

#endif
