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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "maxcurve/weierstrass.hpp"

using namespace maxcurve;

namespace {

// Multiplicity of x0 as a root of a polynomial over the ambient field (repeated synthetic division).
int root_multiplicity(const FieldTower& t, std::vector<Fe> poly, Fe x0) {
    int mult = 0;
    for (;;) {
        while (!poly.empty() && poly.back() == t.zero()) poly.pop_back();
        if (poly.empty()) return 1 << 20;
        std::vector<Fe> quot(poly.size() > 1 ? poly.size() - 1 : 0, t.zero());
        Fe carry = t.zero();
        for (std::size_t i = poly.size(); i-- > 0;) {
            const Fe v = t.add(poly[i], t.mul(carry, x0));
            if (i > 0) quot[i - 1] = v;
            carry = v;
        }
        if (carry != t.zero()) return mult;
        ++mult;
        poly = quot;
    }
}

std::vector<Fe> poly_mul(const FieldTower& t, const std::vector<Fe>& a, const std::vector<Fe>& b) {
    std::vector<Fe> r(a.size() + b.size() - 1, t.zero());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = t.add(r[i + j], t.mul(a[i], b[j]));
    return r;
}

// v_P(a + b·x + c·y) on a curve F(y) = x^d via intersection multiplicity: for c != 0, F is additive, so
// F(y + (a + bx)/c) = x^d + F((a + bx)/c) and v_P is the x0-multiplicity of that polynomial.
int line_valuation(const CurveModel& curve, Fe a, Fe b, Fe c, const Point& p) {
    const auto& t = curve.tower();
    if (c == t.zero()) {
        if (b == t.zero()) return a == t.zero() ? (1 << 20) : 0;
        return root_multiplicity(t, {a, b}, p.x);
    }
    std::vector<Fe> h{t.div(a, c), t.div(b, c)};  // y + h(x) is the function up to the unit c
    std::vector<Fe> poly(curve.d() + 1, t.zero());
    poly[curve.d()] = t.one();
    std::vector<Fe> hp = h;
    std::uint64_t pi = 1;
    for (std::size_t i = 0; i < curve.f_coeffs().size(); ++i) {
        if (i > 0) {
            std::vector<Fe> next{t.one()};
            for (std::uint32_t k = 0; k < t.p(); ++k) next = poly_mul(t, next, hp);
            hp = next;
            pi *= t.p();
        }
        if (poly.size() < hp.size()) poly.resize(hp.size(), t.zero());
        for (std::size_t k = 0; k < hp.size(); ++k) poly[k] = t.add(poly[k], t.mul(curve.f_coeffs()[i], hp[k]));
    }
    return root_multiplicity(t, poly, p.x);
}

}  // namespace

TEST(Weierstrass, NongapsAtInfinity) {
    auto h35 = CurveModel::hermitian(FieldTower::build(5, 1), 3);
    EXPECT_EQ(nongaps_at_infinity(h35, 6), (std::vector<std::uint64_t>{3, 5, 6, 8, 9, 10}));
    auto h43 = CurveModel::hermitian(FieldTower::build(3, 1), 4);
    EXPECT_EQ(nongaps_at_infinity(h43, 5), (std::vector<std::uint64_t>{3, 4, 6, 7, 8}));
    auto t = FieldTower::build(2, 2);
    auto add = CurveModel::additive(t, {t.one(), t.one()}, 5);
    auto ng = nongaps_at_infinity(add, 3);
    EXPECT_EQ(ng, (std::vector<std::uint64_t>{2, 4, 5}));
    EXPECT_EQ(linear_system_info(add).n * static_cast<std::int64_t>(ng[0]), 4);
}

TEST(Weierstrass, OrderSequenceExamples) {
    auto c = CurveModel::hermitian(FieldTower::build(5, 1), 3);
    const auto& t = c.tower();
    auto origin = order_sequence(c, c.make_point(t.zero(), t.zero()));
    EXPECT_EQ(origin.orders, (std::vector<std::int64_t>{0, 1, 3, 6}));
    EXPECT_EQ(origin.type, PointType::kRationalRamified);
    bool saw_unramified = false, saw_nonrational = false;
    for (const auto& p : c.points(Level::kFq4)) {
        if (p.at_infinity || p.x == t.zero()) continue;
        if (p.rational() && !saw_unramified) {
            auto s = order_sequence(c, p);
            EXPECT_EQ(s.orders, (std::vector<std::int64_t>{0, 1, 2, 6}));
            EXPECT_EQ(s.type, PointType::kRationalUnramified);
            saw_unramified = true;
        }
        if (!p.rational() && !saw_nonrational) {
            auto s = order_sequence(c, p);
            EXPECT_EQ(s.orders, (std::vector<std::int64_t>{0, 1, 2, 5}));
            EXPECT_EQ(s.type, PointType::kNonRational);
            saw_nonrational = true;
        }
    }
    EXPECT_TRUE(saw_unramified && saw_nonrational);
    auto inf = order_sequence(c, Point::infinity());
    EXPECT_EQ(inf.orders, (std::vector<std::int64_t>{0, 1, 3, 6}));
    EXPECT_EQ(inf.type, PointType::kRationalRamified);
}

TEST(Weierstrass, OrderSequencesMatchLineIntersectionOracle) {
    // L(3P∞) = <1, x, y> on y^2 + y = x^3; enumerate every (a, b, c) over F_16.
    auto c = CurveModel::hermitian(FieldTower::build(2, 1), 3);
    const auto& t = c.tower();
    for (const auto& p : c.points(Level::kFq4)) {
        if (p.at_infinity) continue;
        std::set<std::int64_t> orders;
        for (Fe a : t.elements(Level::kFq4))
            for (Fe b : t.elements(Level::kFq4))
                for (Fe cc : t.elements(Level::kFq4)) {
                    if (a == t.zero() && b == t.zero() && cc == t.zero()) continue;
                    FuncElement f;
                    orders.insert(line_valuation(c, a, b, cc, p));
                }
        std::vector<std::int64_t> expected(orders.begin(), orders.end());
        EXPECT_EQ(order_sequence(c, p).orders, expected);
    }
}

TEST(Weierstrass, ValuationsOfLinesMatchSeriesValuations) {
    auto c = CurveModel::hermitian(FieldTower::build(5, 1), 3);
    FunctionField ff(c);
    const auto& t = c.tower();
    std::mt19937 rng(23);
    auto pts = c.points(Level::kFq4);
    std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 2);
    const auto& k = t.elements(Level::kFq4);
    for (int trial = 0; trial < 300; ++trial) {
        const Point& p = pts[pick(rng)];
        // lines through P with random slope, so valuations > 0 occur
        Fe b = k[rng() % k.size()], cc = k[rng() % k.size()];
        if (cc == t.zero()) cc = t.one();
        Fe a = t.neg(t.add(t.mul(b, p.x), t.mul(cc, p.y)));
        FuncElement f = ff.add(ff.add(ff.constant(a), ff.scale(ff.x(), b)), ff.scale(ff.y(), cc));
        ASSERT_EQ(ff.valuation_at(p, f), line_valuation(c, a, b, cc, p));
    }
}

TEST(Weierstrass, LinearSystemInfo) {
    auto h35 = CurveModel::hermitian(FieldTower::build(5, 1), 3);
    auto i35 = linear_system_info(h35);
    EXPECT_EQ(i35.n, 2);
    EXPECT_EQ(i35.epsilon, (std::vector<std::int64_t>{0, 1, 2, 5}));
    EXPECT_EQ(i35.nu, (std::vector<std::int64_t>{0, 1, 5}));
    EXPECT_EQ(i35.deg_r, 72);
    EXPECT_EQ(i35.deg_s, 204);

    auto i23 = linear_system_info(CurveModel::hermitian(FieldTower::build(3, 1), 2));
    EXPECT_EQ(i23.n, 2);
    EXPECT_EQ(i23.epsilon, (std::vector<std::int64_t>{0, 1, 2, 3}));
    EXPECT_EQ(i23.deg_r, 16);

    auto i25 = linear_system_info(CurveModel::hermitian(FieldTower::build(5, 1), 2));
    EXPECT_EQ(i25.n, 3);
    EXPECT_EQ(i25.epsilon, (std::vector<std::int64_t>{0, 1, 2, 3, 5}));

    // Thm-level invariants on the sequences
    for (const auto& info : {i35, i23, i25}) {
        EXPECT_EQ(info.epsilon.back(), info.q);
        EXPECT_EQ(info.nu.back(), info.q);
        EXPECT_EQ(info.nu[1], 1);
    }
}

TEST(Weierstrass, RamificationAuditH35) {
    auto c = CurveModel::hermitian(FieldTower::build(5, 1), 3);
    auto r = ramification_audit(c);
    EXPECT_EQ(r.t1, 6);
    EXPECT_EQ(r.t2, 60);
    EXPECT_EQ(r.w1, 2);
    EXPECT_EQ(r.weighted_r, 72);
    EXPECT_EQ(r.deg_r, 72);
    EXPECT_EQ(r.s_weight_sum, 204);
    EXPECT_EQ(r.deg_s, 204);
    EXPECT_EQ(r.unramified_fibers, 20);
    EXPECT_TRUE(r.census.complete);
    EXPECT_EQ(r.census.points_checked, 426u);
    EXPECT_TRUE(r.all());
}

TEST(Weierstrass, RamificationAuditH23AndH25) {
    auto r23 = ramification_audit(CurveModel::hermitian(FieldTower::build(3, 1), 2));
    EXPECT_EQ(r23.t1, 4);
    EXPECT_EQ(r23.t2, 12);
    EXPECT_EQ(r23.w1, 1);
    EXPECT_EQ(r23.w2, 1);
    EXPECT_EQ(r23.weighted_r, 16);
    EXPECT_TRUE(r23.riemann_hurwitz);  // 0 = -4 + 1·4
    EXPECT_TRUE(r23.all());

    auto r25 = ramification_audit(CurveModel::hermitian(FieldTower::build(5, 1), 2));
    EXPECT_EQ(r25.t1, 6);
    EXPECT_EQ(r25.t2, 40);
    EXPECT_EQ(r25.w1, 2);
    EXPECT_EQ(r25.deg_r, 52);
    EXPECT_TRUE(r25.all());
}

TEST(Weierstrass, RamificationAuditPreconditions) {
    EXPECT_THROW(ramification_audit(CurveModel::hermitian(FieldTower::build(3, 1), 4)), ValidationError);
    auto t = FieldTower::build(2, 2);
    EXPECT_THROW(ramification_audit(CurveModel::additive(t, {t.one(), t.one()}, 5)), ValidationError);
}

TEST(Weierstrass, CensusOnOtherMaximalCurves) {
    auto t = FieldTower::build(2, 2);
    auto census = order_census(CurveModel::additive(t, {t.one(), t.one()}, 5));
    EXPECT_TRUE(census.all());
    EXPECT_TRUE(census.complete);
    auto herm = order_census(CurveModel::hermitian(FieldTower::build(3, 1), 4));
    EXPECT_TRUE(herm.all());
}

TEST(Weierstrass, SampledCensusIsDeterministic) {
    auto c = CurveModel::hermitian(FieldTower::build(3, 1), 2);
    AuditOptions opts;
    opts.full_check_max_q = 2;
    opts.sample_size = 10;
    opts.sample_seed = 42;
    auto a = order_census(c, opts);
    auto b = order_census(c, opts);
    EXPECT_FALSE(a.complete);
    EXPECT_EQ(a.points_checked, 16u + 10u);
    EXPECT_EQ(a.non_rational, b.non_rational);
}

TEST(Weierstrass, FrobeniusBoundFailsOffRationalPoints) {
    // j = (0,1,2,3) at non-rational points of y^3 + y = x^2 while ν_2 = 3.
    auto census = order_census(CurveModel::hermitian(FieldTower::build(3, 1), 2));
    EXPECT_TRUE(census.nu_bound);
    EXPECT_EQ(census.nu_bound_failures_off_k, 48u);
}

TEST(Weierstrass, OrderSequencesCsv) {
    auto c = CurveModel::hermitian(FieldTower::build(3, 1), 2);
    const auto& t = c.tower();
    const auto path = std::filesystem::temp_directory_path() / "maxcurve_orders.csv";
    export_order_sequences(c, {}, path.string());
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "x,y,orders,type");
    std::map<std::string, int> types;
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        std::vector<std::string> f;
        std::stringstream ss(line);
        for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
        ASSERT_EQ(f.size(), 4u) << line;
        ++types[f[3]];
        if (f[0] == "inf") {
            EXPECT_EQ(f[2], "0:1:2:4");
            continue;
        }
        EXPECT_TRUE(c.on_curve(decode_element(t, f[0]), decode_element(t, f[1]))) << line;
        if (f[3] != "non-rational") EXPECT_EQ(f[2], "0:1:2:4") << line;
    }
    EXPECT_EQ(rows, 64u);
    EXPECT_EQ(types["rational-ramified"], 4);
    EXPECT_EQ(types["rational-unramified"], 12);
    EXPECT_EQ(types["non-rational"], 48);
    std::filesystem::remove(path);
    EXPECT_THROW(export_order_sequences(c, {}, ""), ValidationError);
}
