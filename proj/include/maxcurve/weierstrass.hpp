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
 * @file weierstrass.hpp
 * @brief Order sequences of D = |(q+1)P∞| and the ramification/Frobenius divisor bookkeeping.
 *
 * The (D,P)-orders are the distinct values v_P(f) for f in L((q+1)P∞). At an affine point they are
 * the pivot columns of the row-reduced matrix of local expansions of the monomial basis; at P∞ they
 * are q+1 minus the pole orders of that basis.
 *
 * For the weights: the ramification divisor R has v_P(R) = Σ_i (j_i(P) - ε_i) and the Frobenius
 * divisor S gets Σ_{i=1}^{n+1} (j_i(P) - ν_{i-1}) at rational points, with generic orders
 * ε = (0, 1, ..., n, q) and Frobenius orders ν = (0, 1, ..., n-1, q).
 */

#ifndef MAXCURVE_WEIERSTRASS_HPP
#define MAXCURVE_WEIERSTRASS_HPP

#include <cstdint>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "curve_model.hpp"
#include "function_field.hpp"
#include "linear_algebra.hpp"
#include "semigroup.hpp"

namespace maxcurve {

enum class PointType { kRationalRamified, kRationalUnramified, kNonRational };

inline std::string to_string(PointType t) {
    switch (t) {
        case PointType::kRationalRamified: return "rational-ramified";
        case PointType::kRationalUnramified: return "rational-unramified";
        case PointType::kNonRational: return "non-rational";
    }
    return "?";
}

struct OrderSequence {
    Point point;
    std::vector<std::int64_t> orders;  // j_0 < j_1 < ... < j_{n+1}
    PointType type = PointType::kNonRational;
    bool ramified_for_y = false;
};

struct LinearSystemInfo {
    std::int64_t q = 0;
    std::int64_t genus = 0;
    std::int64_t n = 0;                  // dim D = n + 1
    std::int64_t degree = 0;             // q + 1
    std::vector<std::int64_t> epsilon;   // 0, 1, ..., n, q
    std::vector<std::int64_t> nu;        // 0, 1, ..., n-1, q
    std::int64_t deg_r = 0;
    std::int64_t deg_s = 0;
};

/// Semigroup <deg F, d> of pole orders at P∞.
inline NumericalSemigroup semigroup_at_infinity(const CurveModel& curve) {
    return NumericalSemigroup::generated_by({curve.deg_f(), curve.d()});
}

inline std::vector<std::uint64_t> nongaps_at_infinity(const CurveModel& curve, std::size_t count) {
    return semigroup_at_infinity(curve).nongaps(count);
}

inline OrderSequence order_sequence(const CurveModel& curve, const Point& p) {
    FunctionField ff(curve);
    const std::uint64_t top = curve.q() + 1;
    const RRBasis basis = ff.rr_basis(top);
    OrderSequence seq;
    seq.point = p;
    if (p.at_infinity) {
        for (auto it = basis.pole_orders.rbegin(); it != basis.pole_orders.rend(); ++it)
            seq.orders.push_back(static_cast<std::int64_t>(top - *it));
        seq.ramified_for_y = curve.d() > 1;
    } else {
        if (!curve.on_curve(p.x, p.y)) throw NotOnCurve("point is not on the curve");
        bool resolved = false;
        for (std::size_t n = ff.default_precision(); n <= ff.max_precision() && !resolved; n *= 2) {
            Matrix rows = ff.monomial_series(p, basis.monomials, n);
            const Echelon e = row_reduce(curve.tower(), rows);
            if (e.rank < basis.dimension()) continue;
            for (auto c : e.pivot_cols) seq.orders.push_back(static_cast<std::int64_t>(c));
            resolved = true;
        }
        if (!resolved) throw PrecisionExhausted("order sequence not resolved within the precision cap");
        const auto u = ff.y_offset_series(p, 3);
        seq.ramified_for_y = u[1] == curve.tower().zero();
    }
    if (!p.rational())
        seq.type = PointType::kNonRational;
    else
        seq.type = seq.ramified_for_y ? PointType::kRationalRamified : PointType::kRationalUnramified;
    return seq;
}

inline LinearSystemInfo linear_system_info(const CurveModel& curve) {
    FunctionField ff(curve);
    LinearSystemInfo info;
    info.q = static_cast<std::int64_t>(curve.q());
    info.genus = static_cast<std::int64_t>(curve.genus());
    info.n = static_cast<std::int64_t>(ff.rr_basis(curve.q() + 1).dimension()) - 2;
    info.degree = info.q + 1;
    if (info.n < 1) throw ValidationError("linear system |(q+1)P| has dimension below 2");
    for (std::int64_t i = 0; i <= info.n; ++i) info.epsilon.push_back(i);
    info.epsilon.push_back(info.q);
    for (std::int64_t i = 0; i < info.n; ++i) info.nu.push_back(i);
    info.nu.push_back(info.q);
    const std::int64_t r = info.n + 1, d = info.degree, two_g_minus_2 = 2 * info.genus - 2;
    std::int64_t eps_sum = 0, nu_sum = 0;
    for (std::int64_t i = 1; i <= r; ++i) eps_sum += info.epsilon[i];
    for (std::int64_t i = 1; i <= r - 1; ++i) nu_sum += info.nu[i];
    info.deg_r = eps_sum * two_g_minus_2 + (r + 1) * d;
    info.deg_s = nu_sum * two_g_minus_2 + (info.q * info.q + r) * d;
    return info;
}

/// v_P(R) = Σ (j_i - ε_i)
inline std::int64_t r_weight(const OrderSequence& seq, const LinearSystemInfo& info) {
    std::int64_t w = 0;
    for (std::size_t i = 0; i < seq.orders.size() && i < info.epsilon.size(); ++i) w += seq.orders[i] - info.epsilon[i];
    return w;
}

/// Σ_{i=1}^{n+1} (j_i - ν_{i-1}), the lower bound for v_P(S) at rational P.
inline std::int64_t s_weight(const OrderSequence& seq, const LinearSystemInfo& info) {
    std::int64_t w = 0;
    for (std::size_t i = 1; i < seq.orders.size() && i - 1 < info.nu.size(); ++i) w += seq.orders[i] - info.nu[i - 1];
    return w;
}

struct AuditOptions {
    std::uint64_t sample_seed = 0;
    std::size_t sample_size = 1000;
    std::uint64_t full_check_max_q = 5;  // all F_{q^4}-points up to this q, sampled above
};

/// Per-point checks that hold on every maximal curve.
struct OrderCensus {
    std::map<std::vector<std::int64_t>, std::uint64_t> rational;
    std::map<std::vector<std::int64_t>, std::uint64_t> non_rational;
    std::uint64_t points_checked = 0;
    bool complete = false;           // every F_{q^4}-point examined
    bool j1_is_one = true;           // j_1(P) = 1
    bool top_order_rule = true;      // j_{n+1} = q+1 iff P rational, q otherwise
    bool epsilon_bound = true;       // ε_i <= j_i(P)
    bool nu_bound = true;            // ν_i <= j_{i+1}(P) - j_1(P), rational P only
    std::uint64_t nu_bound_failures_off_k = 0;  // same inequality at non-rational P, informational
    bool non_rational_generic = true;

    bool all() const { return j1_is_one && top_order_rule && epsilon_bound && nu_bound && non_rational_generic; }
};

/// F_{q^4}-points examined by the audits: all of them for q <= full_check_max_q, else rational + a sample.
inline std::vector<Point> audit_points(const CurveModel& curve, const AuditOptions& opts, bool* complete = nullptr) {
    auto all = curve.points(Level::kFq4);
    if (curve.q() <= opts.full_check_max_q) {
        if (complete) *complete = true;
        return all;
    }
    if (complete) *complete = false;
    std::vector<Point> rational, others;
    for (const auto& p : all) (p.rational() ? rational : others).push_back(p);
    std::mt19937_64 rng(opts.sample_seed);
    // Fisher-Yates on raw engine output so the sample is identical on every platform.
    for (std::size_t i = others.size(); i > 1; --i) std::swap(others[i - 1], others[rng() % i]);
    if (others.size() > opts.sample_size) others.resize(opts.sample_size);
    rational.insert(rational.end(), others.begin(), others.end());
    return rational;
}

inline void check_orders(const OrderSequence& seq, const LinearSystemInfo& info, OrderCensus& census) {
    const auto& j = seq.orders;
    const bool rational = seq.type != PointType::kNonRational;
    if (j.size() != info.epsilon.size()) {
        census.epsilon_bound = census.nu_bound = census.j1_is_one = census.top_order_rule = false;
        return;
    }
    if (j[1] != 1) census.j1_is_one = false;
    if (j.back() != (rational ? info.q + 1 : info.q)) census.top_order_rule = false;
    for (std::size_t i = 0; i < j.size(); ++i)
        if (info.epsilon[i] > j[i]) census.epsilon_bound = false;
    bool nu_ok = true;
    for (std::size_t i = 0; i < info.nu.size(); ++i)
        if (info.nu[i] > j[i + 1] - j[1]) nu_ok = false;
    if (rational && !nu_ok) census.nu_bound = false;
    if (!rational && !nu_ok) ++census.nu_bound_failures_off_k;
    if (!rational && j != info.epsilon) census.non_rational_generic = false;
}

inline OrderCensus order_census(const CurveModel& curve, const AuditOptions& opts = {}) {
    const LinearSystemInfo info = linear_system_info(curve);
    OrderCensus census;
    for (const auto& p : audit_points(curve, opts, &census.complete)) {
        const OrderSequence seq = order_sequence(curve, p);
        check_orders(seq, info, census);
        ++(seq.type == PointType::kNonRational ? census.non_rational : census.rational)[seq.orders];
        ++census.points_checked;
    }
    return census;
}

/// Rows "x,y,orders,type"; coordinates as base-p digits, P∞ as "inf,inf", orders joined by ':'.
inline std::string order_sequences_csv(const FieldTower& t, const std::vector<OrderSequence>& seqs) {
    std::ostringstream out;
    out << "x,y,orders,type\n";
    for (const auto& s : seqs) {
        if (s.point.at_infinity)
            out << "inf,inf";
        else
            out << encode_element(t, s.point.x) << ',' << encode_element(t, s.point.y);
        out << ',';
        for (std::size_t i = 0; i < s.orders.size(); ++i) out << (i ? ":" : "") << s.orders[i];
        out << ',' << to_string(s.type) << '\n';
    }
    return out.str();
}

inline void export_order_sequences(const CurveModel& curve, const AuditOptions& opts, const std::string& path) {
    if (path.empty()) throw ValidationError("export path is empty");
    std::vector<OrderSequence> seqs;
    for (const auto& p : audit_points(curve, opts)) seqs.push_back(order_sequence(curve, p));
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out << order_sequences_csv(curve.tower(), seqs);
    if (!out) throw Error("write to '" + path + "' failed");
}

struct RamificationReport {
    std::int64_t m = 0, n = 0, q = 0, genus = 0;
    std::int64_t t1 = 0, t2 = 0;
    std::int64_t w1 = 0, w2 = 1;
    std::int64_t deg_r = 0, deg_s = 0;
    std::int64_t weighted_r = 0;   // w1·T1 + w2·T2
    std::int64_t s_weight_sum = 0; // Σ over rational P of the S-weight
    std::int64_t unramified_fibers = 0;

    bool t1_is_q_plus_1 = false;
    bool riemann_hurwitz = false;       // 2g - 2 = -2m + (m-1)T1
    bool deg_r_accounted = false;       // w1·T1 + w2·T2 = deg R
    bool per_point_weights = false;     // Σ(j_i - ε_i) equals w1 resp. w2, orders match the two types
    bool deg_s_accounted = false;       // Σ S-weights = deg S
    bool weierstrass_points_rational = false;
    bool unramified_fibers_rational = false;  // q^2 - q fibers of m rational points
    OrderCensus census;

    bool all() const {
        return t1_is_q_plus_1 && riemann_hurwitz && deg_r_accounted && per_point_weights && deg_s_accounted &&
               weierstrass_points_rational && unramified_fibers_rational && census.all();
    }
};

/// Closed form n((n-1)m - n - 1)/2 + 2 of the R-weight at totally ramified rational points.
inline std::int64_t ramified_weight(std::int64_t n, std::int64_t m) { return n * ((n - 1) * m - n - 1) / 2 + 2; }

inline RamificationReport ramification_audit(const CurveModel& curve, const AuditOptions& opts = {}) {
    const LinearSystemInfo info = linear_system_info(curve);
    const std::int64_t m = static_cast<std::int64_t>(curve.d()), q = info.q, n = info.n;
    if (curve.family() != Family::kHermitianType || n * m != q + 1 || n < 2)
        throw ValidationError("ramification audit needs y^q + y = x^m with n·m = q+1 and n >= 2");
    const auto& t = curve.tower();

    RamificationReport rep;
    rep.m = m;
    rep.n = n;
    rep.q = q;
    rep.genus = info.genus;
    rep.deg_r = info.deg_r;
    rep.deg_s = info.deg_s;
    rep.w1 = ramified_weight(n, m);
    rep.w2 = 1;

    std::vector<std::int64_t> type_i{0, 1}, type_ii;
    for (std::int64_t k = 1; k <= n - 1; ++k) type_i.push_back(k * m);
    type_i.push_back(q + 1);
    for (std::int64_t k = 0; k <= n; ++k) type_ii.push_back(k);
    type_ii.push_back(q + 1);

    rep.per_point_weights = true;
    for (const auto& p : audit_points(curve, opts, &rep.census.complete)) {
        const OrderSequence seq = order_sequence(curve, p);
        check_orders(seq, info, rep.census);
        ++rep.census.points_checked;
        if (seq.type == PointType::kNonRational) {
            ++rep.census.non_rational[seq.orders];
            continue;
        }
        ++rep.census.rational[seq.orders];
        const std::int64_t w = r_weight(seq, info);
        if (seq.type == PointType::kRationalRamified) {
            ++rep.t1;
            if (w != rep.w1 || seq.orders != type_i) rep.per_point_weights = false;
        } else {
            ++rep.t2;
            if (w != rep.w2 || seq.orders != type_ii) rep.per_point_weights = false;
        }
        rep.s_weight_sum += s_weight(seq, info);
    }
    rep.weighted_r = rep.w1 * rep.t1 + rep.w2 * rep.t2;
    rep.t1_is_q_plus_1 = rep.t1 == q + 1;
    rep.riemann_hurwitz = 2 * info.genus - 2 == -2 * m + (m - 1) * rep.t1;
    rep.deg_r_accounted = rep.weighted_r == rep.deg_r;
    rep.deg_s_accounted = rep.s_weight_sum == rep.deg_s;
    rep.weierstrass_points_rational = rep.census.non_rational_generic;

    // Fibers of y over k: the rational points with y = c.
    std::map<std::uint32_t, std::int64_t> fiber;
    for (const auto& p : curve.points(Level::kFq2))
        if (!p.at_infinity) ++fiber[p.y.v];
    bool fibers_ok = true;
    for (Fe c : t.elements(Level::kFq2)) {
        const std::int64_t size = fiber.count(c.v) ? fiber[c.v] : 0;
        if (curve.eval_f(c) == t.zero()) {
            if (size != 1) fibers_ok = false;
        } else {
            ++rep.unramified_fibers;
            if (size != m) fibers_ok = false;
        }
    }
    rep.unramified_fibers_rational = fibers_ok && rep.unramified_fibers == q * q - q;
    return rep;
}

}  // namespace maxcurve

#endif
