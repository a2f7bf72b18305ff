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
 * @file theorems.hpp
 * @brief Genus bounds and instance-level verdicts for maximal curves.
 *
 * Every verdict re-derives its inputs (point counts, n, the first non-gap m_1 at P∞) by
 * enumeration. Abstract maximal curves enter through MaximalCurveData, which carries only
 * the numbers the statements talk about.
 */

#ifndef MAXCURVE_THEOREMS_HPP
#define MAXCURVE_THEOREMS_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "curve_model.hpp"
#include "function_field.hpp"
#include "semigroup.hpp"
#include "weierstrass.hpp"

namespace maxcurve {

/// The numbers a maximal curve statement depends on.
struct MaximalCurveData {
    std::int64_t q = 0;
    std::int64_t genus = 0;
    std::int64_t n = 0;       // dim |(q+1)P0| = n + 1
    std::int64_t m1 = 0;      // first non-gap at P0
    std::int64_t points = 0;  // #X(F_{q^2})

    bool maximal() const { return points == q * q + 2 * genus * q + 1; }

    static MaximalCurveData from_curve(const CurveModel& curve) {
        MaximalCurveData d;
        d.q = static_cast<std::int64_t>(curve.q());
        d.genus = static_cast<std::int64_t>(curve.genus());
        d.n = linear_system_info(curve).n;
        d.m1 = static_cast<std::int64_t>(nongaps_at_infinity(curve, 1).front());
        d.points = static_cast<std::int64_t>(curve.count_points(Level::kFq2));
        return d;
    }
};

struct BoundsReport {
    std::int64_t q = 0, genus = 0, n = 0, m1 = 0, points = 0;
    std::int64_t twice_genus = 0;
    std::int64_t hasse_weil = 0;           // q^2 + 2gq + 1
    std::int64_t castelnuovo_m = 0, castelnuovo_e = 0;
    std::int64_t castelnuovo = 0;          // c(n, q) = M(q - n + e)
    std::int64_t lewittes = 0;             // q(m_1 - 1)
    std::int64_t lewittes_count = 0;       // q^2 m_1 + 1
    std::int64_t global = 0;               // (q - 1)q

    bool hasse_weil_ok = false;       // #X(k) <= q^2 + 2gq + 1
    bool castelnuovo_ok = false;
    bool castelnuovo_attained = false;
    bool lewittes_ok = false;         // 2g <= q(m_1 - 1) and #X(k) <= q^2 m_1 + 1
    bool global_ok = false;
    bool decomposition_ok = false;    // q = Mn + e, 0 <= e < n

    bool all() const { return hasse_weil_ok && castelnuovo_ok && lewittes_ok && global_ok && decomposition_ok; }
};

inline BoundsReport bounds_report(const MaximalCurveData& data) {
    if (data.n < 1) throw ValidationError("bounds need n >= 1");
    BoundsReport r;
    r.q = data.q;
    r.genus = data.genus;
    r.n = data.n;
    r.m1 = data.m1;
    r.points = data.points;
    r.twice_genus = 2 * data.genus;
    r.hasse_weil = data.q * data.q + 2 * data.genus * data.q + 1;
    r.castelnuovo_m = data.q / data.n;
    r.castelnuovo_e = data.q - r.castelnuovo_m * data.n;
    r.castelnuovo = r.castelnuovo_m * (data.q - data.n + r.castelnuovo_e);
    r.lewittes = data.q * (data.m1 - 1);
    r.lewittes_count = data.q * data.q * data.m1 + 1;
    r.global = (data.q - 1) * data.q;

    r.hasse_weil_ok = data.points <= r.hasse_weil;
    r.castelnuovo_ok = r.twice_genus <= r.castelnuovo;
    r.castelnuovo_attained = r.twice_genus == r.castelnuovo;
    r.lewittes_ok = r.twice_genus <= r.lewittes && data.points <= r.lewittes_count;
    r.global_ok = r.twice_genus <= r.global;
    r.decomposition_ok = data.q == r.castelnuovo_m * data.n + r.castelnuovo_e && r.castelnuovo_e >= 0 &&
                         r.castelnuovo_e < data.n;
    return r;
}

inline BoundsReport bounds_report(const CurveModel& curve) { return bounds_report(MaximalCurveData::from_curve(curve)); }

/// Substitution x_1 = ξ^{-i} x, y_1 = ε y taking a f(y) = x^m onto y_1^q + y_1 = x_1^m.
struct NormalizationResult {
    std::int64_t m = 0;
    std::int64_t i = 0;           // f(k) = ξ^{im} F_q
    Fe epsilon;
    Fe x_scale;                   // ξ^{-i}
    Fe a, b;                      // f(T) = aT^q + bT
    bool verified = false;        // ε^q = ξ^{-im} a and ε = ξ^{-im} b
    bool trace_equation = false;  // Trace(εα) = ξ^{-im} f(α) for every α in k
};

/**
 * Normalizes f(y) = x^m with f(T) = aT^q + bT. Checks, in order: f(k) is a line ξ^{im} F_q,
 * the curve is maximal, and the trace equation has a solution ε.
 */
inline NormalizationResult normalize_model(const FieldTower& t, Fe a, Fe b, std::uint64_t m) {
    const std::uint64_t q = t.q();
    if (m == 0 || (q + 1) % m != 0) throw ValidationError("m must divide q+1");
    if (a == t.zero() || b == t.zero()) throw ValidationError("f(T) = aT^q + bT needs a, b nonzero");
    if (!t.in_level(a, Level::kFq2) || !t.in_level(b, Level::kFq2))
        throw ValidationError("a and b must lie in F_{q^2}");
    const auto f = [&](Fe u) { return t.add(t.mul(a, t.pow(u, q)), t.mul(b, u)); };

    std::set<std::uint32_t> image;
    for (Fe u : t.elements(Level::kFq2)) image.insert(f(u).v);
    const std::int64_t n = static_cast<std::int64_t>((q + 1) / m);
    std::optional<std::int64_t> found;
    if (image.size() == q) {
        for (std::int64_t i = 0; i < n && !found; ++i) {
            const Fe shift = t.pow_signed(t.xi(), -i * static_cast<std::int64_t>(m));
            const bool on_line = std::all_of(image.begin(), image.end(),
                                             [&](std::uint32_t v) { return t.in_level(t.mul(shift, Fe{v}), Level::kFq); });
            if (on_line) found = i;
        }
    }
    if (!found) throw ValidationError("image of f is not of the form xi^(im) F_q");

    std::vector<Fe> coeffs(1, b);
    for (std::uint64_t pe = t.p(); pe <= q; pe *= t.p()) coeffs.push_back(pe == q ? a : t.zero());
    const CurveModel curve = CurveModel::additive(t, coeffs, m);
    if (!curve.is_maximal()) throw ValidationError("curve f(y) = x^m is not maximal");

    NormalizationResult r;
    r.m = static_cast<std::int64_t>(m);
    r.i = *found;
    r.a = a;
    r.b = b;
    r.x_scale = t.pow_signed(t.xi(), -r.i);
    const Fe shift = t.pow_signed(t.xi(), -r.i * r.m);
    // εα + ε^q α^q = c(α) on the F_q-basis {1, ξ}; solve for E = ε, E' = ε^q.
    const Fe xi = t.xi(), xi_q = t.pow(xi, q);
    const Fe c1 = t.mul(shift, f(t.one())), cx = t.mul(shift, f(xi));
    const Fe eps = t.div(t.sub(t.mul(c1, xi_q), cx), t.sub(xi_q, xi));
    const Fe eps_q = t.sub(c1, eps);
    if (t.pow(eps, q) != eps_q) throw ValidationError("trace equation has no solution epsilon");
    r.epsilon = eps;
    r.trace_equation = true;
    for (Fe u : t.elements(Level::kFq2)) {
        const Fe eu = t.mul(eps, u);
        if (t.add(eu, t.pow(eu, q)) != t.mul(shift, f(u))) r.trace_equation = false;
    }
    if (!r.trace_equation) throw ValidationError("trace equation has no solution epsilon");
    r.verified = eps_q == t.mul(shift, a) && eps == t.mul(shift, b);
    return r;
}

enum class DichotomyBranch { kQPlus1, kQ, kHypothesisNotMet, kInconsistent };

inline std::string to_string(DichotomyBranch b) {
    switch (b) {
        case DichotomyBranch::kQPlus1: return "case-i";
        case DichotomyBranch::kQ: return "case-ii";
        case DichotomyBranch::kHypothesisNotMet: return "hypothesis-not-met";
        case DichotomyBranch::kInconsistent: return "inconsistent";
    }
    return "?";
}

struct DichotomyVerdict {
    std::int64_t n = 0, m1 = 0, n_m1 = 0, q = 0, genus = 0;
    DichotomyBranch branch = DichotomyBranch::kHypothesisNotMet;
    bool maximal = false;
    std::optional<bool> genus_identity;   // case (i): 2g = (m_1 - 1)(q - 1)
    std::optional<bool> conjecture_flag;  // case (ii): 2g = (m_1 - 1)q, recorded only
    std::optional<NormalizationResult> normalization;
    std::string normalization_note;

    bool passed() const {
        if (branch == DichotomyBranch::kInconsistent) return false;
        if (branch == DichotomyBranch::kQPlus1)
            return genus_identity.value_or(false) && (!normalization || normalization->verified);
        return true;
    }
};

inline DichotomyVerdict theorem01_check(const MaximalCurveData& data) {
    DichotomyVerdict v;
    v.n = data.n;
    v.m1 = data.m1;
    v.n_m1 = data.n * data.m1;
    v.q = data.q;
    v.genus = data.genus;
    v.maximal = data.maximal();
    if (!v.maximal || data.genus <= 0 || v.n_m1 > data.q + 1) {
        v.branch = DichotomyBranch::kHypothesisNotMet;
        return v;
    }
    if (v.n_m1 == data.q + 1) {
        v.branch = DichotomyBranch::kQPlus1;
        v.genus_identity = 2 * data.genus == (data.m1 - 1) * (data.q - 1);
    } else if (v.n_m1 == data.q) {
        v.branch = DichotomyBranch::kQ;
        v.conjecture_flag = 2 * data.genus == (data.m1 - 1) * data.q;
    } else {
        v.branch = DichotomyBranch::kInconsistent;
    }
    return v;
}

/// As above, and in case (i) normalizes the model when F(T) = aT^q + bT.
inline DichotomyVerdict theorem01_check(const CurveModel& curve) {
    DichotomyVerdict v = theorem01_check(MaximalCurveData::from_curve(curve));
    if (v.branch != DichotomyBranch::kQPlus1) return v;
    const auto& c = curve.f_coeffs();
    const bool two_terms = curve.deg_f() == curve.q() &&
                           std::all_of(c.begin() + 1, c.end() - 1, [&](Fe x) { return x == curve.tower().zero(); });
    if (!two_terms) {
        v.normalization_note = "F is not of the form aT^q + bT";
        return v;
    }
    try {
        v.normalization = normalize_model(curve.tower(), c.back(), c.front(), curve.d());
    } catch (const ValidationError& e) {
        v.normalization_note = e.what();
        v.genus_identity = false;
    }
    return v;
}

enum class CorollaryCase { kEquality, kInequality };

inline std::string to_string(CorollaryCase c) { return c == CorollaryCase::kEquality ? "case-i" : "case-ii"; }

struct CorollaryReport {
    std::int64_t t = 0, n = 0, m1 = 0, q = 0, genus = 0;
    CorollaryCase which = CorollaryCase::kInequality;
    bool t_unique = false;
    bool identity_ok = false;  // case (i): 2g t = (q-1)(q+1-t) and 2g = (q-1)(m_1-1); case (ii): t >= n, 2g n <= (q-1)(q+1-n)
};

/// Finds t >= 1 with (q-1)((q+1)/(t+1) - 1) < 2g <= (q-1)((q+1)/t - 1), in integer form.
inline CorollaryReport corollary02_classify(const MaximalCurveData& data) {
    const DichotomyVerdict v = theorem01_check(data);
    if (v.branch != DichotomyBranch::kQPlus1 && v.branch != DichotomyBranch::kQ)
        throw ValidationError("corollary needs a curve meeting the theorem hypothesis");
    const std::int64_t q = data.q, g2 = 2 * data.genus;
    std::vector<std::int64_t> hits;
    for (std::int64_t t = 1; t <= q + 1; ++t)
        if ((q - 1) * (q - t) < g2 * (t + 1) && g2 * t <= (q - 1) * (q + 1 - t)) hits.push_back(t);
    if (hits.empty()) throw ValidationError("no t with the genus in its interval");
    CorollaryReport r;
    r.t = hits.front();
    r.t_unique = hits.size() == 1;
    r.n = data.n;
    r.m1 = data.m1;
    r.q = q;
    r.genus = data.genus;
    if (v.branch == DichotomyBranch::kQPlus1) {
        r.which = CorollaryCase::kEquality;
        r.identity_ok = r.t == data.n && g2 * r.t == (q - 1) * (q + 1 - r.t) && g2 == (q - 1) * (data.m1 - 1);
    } else {
        r.which = CorollaryCase::kInequality;
        r.identity_ok = r.t >= data.n && g2 * data.n <= (q - 1) * (q + 1 - data.n);
    }
    return r;
}

inline CorollaryReport corollary02_classify(const CurveModel& curve) {
    return corollary02_classify(MaximalCurveData::from_curve(curve));
}

struct EliminatedValue {
    std::uint64_t m = 0;
    std::uint64_t sieve_genus = 0;
    SelmerBound selmer;
    bool eliminated_by_sieve = false;   // 4 genus(<m,q,q+1>) < (q-1)^2
    bool eliminated_by_selmer = false;  // 2 bound < (q-1)^2
};

struct QuarterGenusReport {
    std::uint64_t q = 0;
    std::uint64_t m = 0;  // (q+1)/2
    std::uint64_t genus = 0;
    bool genus_matches = false;   // g(H_{(q+1)/2,q}) = (q-1)^2/4
    bool maximal = false;
    DichotomyBranch branch = DichotomyBranch::kHypothesisNotMet;
    std::vector<EliminatedValue> scan;
    bool all_eliminated = false;

    bool passed() const { return genus_matches && maximal && branch == DichotomyBranch::kQPlus1 && all_eliminated; }
};

/// Curves of genus (q-1)^2/4: checks H_{(q+1)/2,q} and eliminates every other first non-gap m.
inline QuarterGenusReport corollary_result3_check(const FieldTower& tower) {
    const std::uint64_t q = tower.q();
    if (q % 2 == 0) throw ValidationError("q must be odd");
    QuarterGenusReport r;
    r.q = q;
    r.m = (q + 1) / 2;
    const CurveModel h = CurveModel::hermitian(tower, r.m);
    r.genus = h.genus();
    r.genus_matches = 4 * r.genus == (q - 1) * (q - 1);
    r.maximal = h.is_maximal();
    r.branch = theorem01_check(h).branch;
    r.all_eliminated = true;
    for (std::uint64_t m = r.m + 1; m + 1 < q; ++m) {
        if (2 * m <= q + 1 || std::gcd(m, q) != 1) continue;
        EliminatedValue e;
        e.m = m;
        e.sieve_genus = NumericalSemigroup::generated_by({m, q, q + 1}).genus();
        e.selmer = selmer_upper_bound(m, q);
        e.eliminated_by_sieve = 4 * e.sieve_genus < (q - 1) * (q - 1);
        e.eliminated_by_selmer = 2 * e.selmer.bound < static_cast<std::int64_t>((q - 1) * (q - 1));
        if (!e.eliminated_by_sieve) r.all_eliminated = false;
        r.scan.push_back(e);
    }
    return r;
}

struct EmbeddingReport {
    std::uint64_t points_checked = 0;
    std::uint64_t rational_points = 0;
    std::uint64_t rational_images = 0;
    std::vector<Monomial> coordinates;
    bool forward = true;     // P rational => π(P) rational
    bool backward = true;    // π(P) rational => P rational
    bool injective = true;   // distinct points have distinct images

    bool equivalence() const { return forward && backward; }
};

/**
 * Evaluates π = (f_0 : ... : f_{n+1}) given by the basis of L((q+1)P∞) at every F_{q^4}-point and
 * checks π(P) ∈ P^{n+1}(k) ⇔ P ∈ X(k). Images are normalized by their first nonzero coordinate.
 */
inline EmbeddingReport embedding_check(const CurveModel& curve) {
    const FieldTower& t = curve.tower();
    FunctionField ff(curve);
    const RRBasis basis = ff.rr_basis(curve.q() + 1);
    EmbeddingReport r;
    r.coordinates = basis.monomials;
    std::set<std::vector<std::uint32_t>> seen;
    for (const auto& p : curve.points(Level::kFq4)) {
        std::vector<Fe> image(basis.dimension(), t.zero());
        if (p.at_infinity) {
            image.back() = t.one();
        } else {
            for (std::size_t i = 0; i < basis.dimension(); ++i) image[i] = ff.evaluate(ff.monomial(basis.monomials[i]), p);
            const auto lead = std::find_if(image.begin(), image.end(), [&](Fe c) { return c != t.zero(); });
            const Fe inv = t.inv(*lead);
            for (auto& c : image) c = t.mul(c, inv);
        }
        const bool image_rational =
            std::all_of(image.begin(), image.end(), [&](Fe c) { return t.in_level(c, Level::kFq2); });
        ++r.points_checked;
        if (p.rational()) ++r.rational_points;
        if (image_rational) ++r.rational_images;
        if (p.rational() && !image_rational) r.forward = false;
        if (image_rational && !p.rational()) r.backward = false;
        std::vector<std::uint32_t> key;
        for (Fe c : image) key.push_back(c.v);
        if (!seen.insert(key).second) r.injective = false;
    }
    return r;
}

struct ConjectureHit {
    std::vector<Fe> coeffs;  // a_0, ..., a_{e-1}, 1
    std::uint64_t points = 0;
    std::int64_t genus = 0;
    std::int64_t n = 0;
    bool genus_relation = false;  // 2g = (m_1 - 1)q
    bool n_m1_is_q = false;
};

struct ConjectureScan {
    std::uint64_t q = 0, m1 = 0, d = 0;
    std::uint64_t candidates = 0;        // coefficient vectors visited
    std::uint64_t representatives = 0;   // after y -> cy deduplication
    bool complete = false;
    std::vector<ConjectureHit> hits;

    bool consistent() const {
        return std::all_of(hits.begin(), hits.end(), [](const ConjectureHit& h) { return h.genus_relation && h.n_m1_is_q; });
    }
};

inline constexpr std::uint64_t kDefaultConjectureBudget = std::uint64_t{1} << 20;

/**
 * Scans monic additive F = T^{m_1} + a_{e-1}T^{p^{e-1}} + ... + a_0 T over k for maximal curves
 * F(y) = x^d. Two vectors are identified when y -> cy, x -> λx maps one curve onto the other, which
 * needs c^{m_1} ∈ F_q^*; only the lex-first member of each orbit is tested.
 */
inline ConjectureScan conjecture_explore(const FieldTower& t, std::uint64_t m1, std::uint64_t d = 0,
                                         std::uint64_t budget = kDefaultConjectureBudget) {
    const std::uint64_t q = t.q();
    if (d == 0) d = q + 1;
    std::uint64_t e = 0;
    for (std::uint64_t v = 1; v < m1; v *= t.p()) ++e;
    std::uint64_t pe = 1;
    for (std::uint64_t i = 0; i < e; ++i) pe *= t.p();
    if (m1 < 2 || pe != m1) throw ValidationError("m_1 must be a positive power of p");
    if (m1 > q) throw ValidationError("m_1 must be at most q");
    if (budget == 0) throw ValidationError("budget must be positive");

    ConjectureScan scan;
    scan.q = q;
    scan.m1 = m1;
    scan.d = d;
    const auto& k = t.elements(Level::kFq2);
    std::vector<Fe> scalars;
    for (Fe c : k)
        if (c != t.zero() && t.in_level(t.pow(c, m1), Level::kFq)) scalars.push_back(c);
    std::vector<std::uint64_t> powers(e);
    for (std::uint64_t i = 0, v = 1; i < e; ++i, v *= t.p()) powers[i] = v;

    const auto key = [&](const std::vector<Fe>& a) {
        std::vector<std::uint32_t> out;
        for (Fe c : a) out.push_back(t.lex_key(c));
        return out;
    };
    // a_i -> a_i c^{p^i - m_1}
    const auto is_representative = [&](const std::vector<Fe>& a) {
        const auto own = key(a);
        std::vector<Fe> image(e);
        for (Fe c : scalars) {
            for (std::uint64_t i = 0; i < e; ++i)
                image[i] = t.mul(a[i], t.pow_signed(c, static_cast<std::int64_t>(powers[i]) - static_cast<std::int64_t>(m1)));
            if (key(image) < own) return false;
        }
        return true;
    };

    // odometer over (a_0, ..., a_{e-1}) with a_0 != 0, digits in lex order of k
    if (std::gcd(d, m1) != 1 || d % t.p() == 0) throw ValidationError("d must be prime to p");
    std::vector<std::uint32_t> hist(t.size());
    std::vector<std::size_t> idx(e, 0);
    idx[0] = 1;
    const std::size_t base = k.size();
    for (;;) {
        if (scan.candidates >= budget) return scan;
        ++scan.candidates;
        std::vector<Fe> a(e);
        for (std::uint64_t i = 0; i < e; ++i) a[i] = k[idx[i]];
        if (is_representative(a)) {
            ++scan.representatives;
            std::vector<Fe> coeffs = a;
            coeffs.push_back(t.one());
            std::fill(hist.begin(), hist.end(), 0u);
            for (Fe y : k) {
                Fe v = t.zero(), yp = y;
                for (std::size_t i = 0; i < coeffs.size(); ++i) {
                    if (i > 0) yp = t.pow(yp, t.p());
                    v = t.add(v, t.mul(coeffs[i], yp));
                }
                ++hist[v.v];
            }
            std::uint64_t points = 1;
            for (Fe x : k) points += hist[t.pow(x, d).v];
            if (points == q * q + (m1 - 1) * (d - 1) * q + 1) {
                const CurveModel curve = CurveModel::additive(t, coeffs, d);
                ConjectureHit h;
                h.coeffs = coeffs;
                h.points = points;
                h.genus = static_cast<std::int64_t>(curve.genus());
                h.n = linear_system_info(curve).n;
                h.genus_relation = 2 * h.genus == static_cast<std::int64_t>((m1 - 1) * q);
                h.n_m1_is_q = h.n * static_cast<std::int64_t>(m1) == static_cast<std::int64_t>(q);
                scan.hits.push_back(std::move(h));
            }
        }
        std::size_t pos = e;
        for (std::size_t i = 0; i < e; ++i) {
            // most significant digit last so a_0 varies slowest
            const std::size_t digit = e - 1 - i;
            if (++idx[digit] < base) {
                pos = digit;
                break;
            }
            idx[digit] = digit == 0 ? 1 : 0;
        }
        if (pos == e) break;
    }
    scan.complete = true;
    return scan;
}

}  // namespace maxcurve

#endif
