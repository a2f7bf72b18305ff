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

#include <random>

#include "maxcurve/function_field.hpp"

using namespace maxcurve;

namespace {

FuncElement random_function(const FunctionField& ff, std::mt19937& rng, int max_x, int max_y) {
    const auto& t = ff.curve().tower();
    const auto& k = t.elements(Level::kFq2);
    std::uniform_int_distribution<std::size_t> pick(0, k.size() - 1);
    FuncElement f;
    for (int i = 0; i <= max_x; ++i)
        for (int j = 0; j <= max_y; ++j) f = ff.add(f, ff.monomial(i, j, k[pick(rng)]));
    return f;
}

Point affine_point_with(const CurveModel& c, Level level, bool x_zero, bool rational) {
    for (const auto& p : c.points(level)) {
        if (p.at_infinity) continue;
        if ((p.x == Fe{0}) != x_zero) continue;
        if (p.rational() != rational) continue;
        return p;
    }
    throw std::runtime_error("no such point");
}

}  // namespace

TEST(FunctionField, NormalForm) {
    auto c = CurveModel::hermitian(FieldTower::build(2, 1), 3);
    FunctionField ff(c);
    const auto& t = c.tower();
    EXPECT_EQ(ff.constant(t.xi()).terms.size(), 1u);

    FuncElement y2 = ff.monomial(0, 2, t.one());
    FuncElement expected2 = ff.add(ff.monomial(3, 0, t.one()), ff.y());
    EXPECT_EQ(y2, expected2);

    FuncElement y3 = ff.monomial(0, 3, t.one());
    FuncElement expected3 = ff.add(ff.add(ff.monomial(3, 1, t.one()), ff.monomial(3, 0, t.one())), ff.y());
    EXPECT_EQ(y3, expected3);
    EXPECT_EQ(ff.mul(ff.y(), ff.mul(ff.y(), ff.y())), expected3);
    EXPECT_EQ(ff.normal_form(y3), y3);  // idempotent
}

TEST(FunctionField, ValuationAtInfinity) {
    auto h23 = CurveModel::hermitian(FieldTower::build(3, 1), 2);
    FunctionField f23(h23);
    EXPECT_EQ(f23.valuation_at_infinity(f23.x()), -3);
    EXPECT_EQ(f23.valuation_at_infinity(f23.y()), -2);
    EXPECT_EQ(f23.valuation_at(Point::infinity(), f23.x()), -3);

    auto h35 = CurveModel::hermitian(FieldTower::build(5, 1), 3);
    FunctionField f35(h35);
    EXPECT_EQ(f35.valuation_at_infinity(f35.mul(f35.x(), f35.y())), -8);
    EXPECT_THROW(f35.valuation_at_infinity(FuncElement{}), ValidationError);
}

TEST(FunctionField, LocalExpansionExamples) {
    auto h32 = CurveModel::hermitian(FieldTower::build(2, 1), 3);
    FunctionField f32(h32);
    const auto& t2 = h32.tower();
    Point origin = h32.make_point(t2.zero(), t2.zero());
    auto s = f32.local_expansion(origin, f32.y(), 13);
    for (std::size_t k = 0; k < 13; ++k) {
        const bool one = k == 3 || k == 6 || k == 12;
        EXPECT_EQ(s.coeffs[k], one ? t2.one() : t2.zero()) << k;
    }
    EXPECT_EQ(s.valuation(), 3);

    auto h35 = CurveModel::hermitian(FieldTower::build(5, 1), 3);
    FunctionField f35(h35);
    const auto& t5 = h35.tower();
    Point o5 = h35.make_point(t5.zero(), t5.zero());
    auto s5 = f35.local_expansion(o5, f35.y(), 16);
    for (std::size_t k = 0; k < 16; ++k) {
        Fe expected = k == 3 ? t5.one() : (k == 15 ? t5.from_int(-1) : t5.zero());
        EXPECT_EQ(s5.coeffs[k], expected) << k;
    }
    EXPECT_EQ(f35.valuation_at(o5, f35.y()), 3);
    EXPECT_EQ(f35.valuation_at(o5, f35.mul(f35.y(), f35.y())), 6);

    Point off{t5.one(), t5.one(), false, Level::kFq};
    EXPECT_THROW(f35.local_expansion(off, f35.y(), 8), NotOnCurve);
}

TEST(FunctionField, UnramifiedPointsHaveSimpleYValuation) {
    auto c = CurveModel::hermitian(FieldTower::build(5, 1), 3);
    FunctionField ff(c);
    for (const auto& p : c.points(Level::kFq4)) {
        if (p.at_infinity || p.x == Fe{0}) continue;
        auto g = ff.sub(ff.y(), ff.constant(p.y));
        ASSERT_EQ(ff.valuation_at(p, g), 1);
    }
}

TEST(FunctionField, LocalExpansionResubstitutes) {
    for (auto [p, a, m] : {std::tuple{2u, 1u, 3u}, {3u, 1u, 2u}, {5u, 1u, 3u}, {2u, 2u, 5u}}) {
        auto c = CurveModel::hermitian(FieldTower::build(p, a), m);
        FunctionField ff(c);
        const auto& t = c.tower();
        auto pts = c.points(Level::kFq4);
        std::mt19937 rng(p * 100 + m);
        std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 2);
        const std::size_t n = ff.default_precision();
        for (int trial = 0; trial < 100; ++trial) {
            const Point& pt = pts[pick(rng)];
            auto u = ff.y_offset_series(pt, n);
            std::vector<Fe> ys = u;
            ys[0] = t.add(ys[0], pt.y);
            std::vector<Fe> xs(n, t.zero());
            xs[0] = pt.x;
            xs[1] = t.one();
            std::vector<Fe> lhs(n, t.zero());
            std::uint64_t pi = 1;
            for (std::size_t i = 0; i < c.f_coeffs().size(); ++i) {
                auto term = ff.series_pow(ys, pi, n);
                for (std::size_t k = 0; k < n; ++k) lhs[k] = t.add(lhs[k], t.mul(c.f_coeffs()[i], term[k]));
                pi *= p;
            }
            auto rhs = ff.series_pow(xs, c.d(), n);
            ASSERT_EQ(lhs, rhs);
        }
    }
}

TEST(FunctionField, ValuationAxioms) {
    auto c = CurveModel::hermitian(FieldTower::build(3, 1), 2);
    FunctionField ff(c);
    auto pts = c.points(Level::kFq4);
    std::mt19937 rng(17);
    std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
    int checked_equality = 0;
    for (int trial = 0; trial < 200; ++trial) {
        FuncElement f = random_function(ff, rng, 2, 2), g = random_function(ff, rng, 2, 2);
        if (f.is_zero() || g.is_zero()) continue;
        const Point& pt = pts[pick(rng)];
        const auto vf = ff.valuation_at(pt, f), vg = ff.valuation_at(pt, g);
        ASSERT_EQ(ff.valuation_at(pt, ff.mul(f, g)), vf + vg);
        auto s = ff.add(f, g);
        if (!s.is_zero()) {
            const auto vs = ff.valuation_at(pt, s);
            ASSERT_GE(vs, std::min(vf, vg));
            if (vf != vg) {
                ASSERT_EQ(vs, std::min(vf, vg));
                ++checked_equality;
            }
        }
        ASSERT_EQ(ff.valuation_at(pt, Quotient{f, g}), vf - vg);
    }
    EXPECT_GT(checked_equality, 0);
    EXPECT_EQ(ff.valuation_at(pts.front(), ff.mul(ff.y(), ff.y())), 2 * ff.valuation_at(pts.front(), ff.y()));
    EXPECT_THROW(ff.valuation_at(pts.front(), FuncElement{}), ValidationError);
}

TEST(FunctionField, RiemannRochBasis) {
    auto h35 = CurveModel::hermitian(FieldTower::build(5, 1), 3);
    FunctionField f35(h35);
    auto b = f35.rr_basis(6);
    ASSERT_EQ(b.dimension(), 4u);
    EXPECT_EQ(b.monomials[0], (Monomial{0, 0}));
    EXPECT_EQ(b.monomials[1], (Monomial{0, 1}));
    EXPECT_EQ(b.monomials[2], (Monomial{1, 0}));
    EXPECT_EQ(b.monomials[3], (Monomial{0, 2}));
    EXPECT_EQ(b.pole_orders, (std::vector<std::uint64_t>{0, 3, 5, 6}));

    auto h32 = CurveModel::hermitian(FieldTower::build(2, 1), 3);
    FunctionField f32(h32);
    auto b2 = f32.rr_basis(3);
    EXPECT_EQ(b2.pole_orders, (std::vector<std::uint64_t>{0, 2, 3}));
    EXPECT_EQ(b2.monomials[1], (Monomial{1, 0}));
    EXPECT_EQ(f32.rr_basis(0).dimension(), 1u);
}

TEST(FunctionField, RiemannRochDimensionAboveCanonicalDegree) {
    for (auto [p, a, m] : {std::tuple{2u, 1u, 3u}, {3u, 1u, 4u}, {5u, 1u, 3u}, {5u, 1u, 2u}, {2u, 2u, 5u}}) {
        auto c = CurveModel::hermitian(FieldTower::build(p, a), m);
        FunctionField ff(c);
        const std::uint64_t g = c.genus();
        for (std::uint64_t lambda = (g == 0 ? 0 : 2 * g - 1); lambda < 2 * g + 40; ++lambda)
            ASSERT_EQ(ff.rr_basis(lambda).dimension(), lambda + 1 - g) << lambda;
    }
}

TEST(FunctionField, SectionWitnessForNonRationalPoint) {
    auto c = CurveModel::hermitian(FieldTower::build(3, 1), 2);
    FunctionField ff(c);
    Point p = affine_point_with(c, Level::kFq4, false, false);
    Point fp = frobenius(c.tower(), p);
    ASSERT_NE(p, fp);
    auto res = ff.solve_section(4, {{p, 3}, {fp, 1}});
    ASSERT_TRUE(res.witness);
    ASSERT_TRUE(res.audit);
    EXPECT_TRUE(res.audit->balanced);
    EXPECT_TRUE(res.audit->constraints_met);
    EXPECT_EQ(res.audit->pole_order, 4u);
    ASSERT_EQ(res.audit->zeros.size(), 2u);
    for (const auto& [pt, v] : res.audit->zeros) EXPECT_EQ(v, pt == p ? 3 : 1);
}

TEST(FunctionField, SectionWitnessForRationalPoint) {
    auto c = CurveModel::hermitian(FieldTower::build(3, 1), 2);
    FunctionField ff(c);
    Point p = affine_point_with(c, Level::kFq2, false, true);
    auto res = ff.solve_section(4, {{p, 4}});
    ASSERT_TRUE(res.witness);
    EXPECT_TRUE(res.audit->balanced);
    ASSERT_EQ(res.audit->zeros.size(), 1u);
    EXPECT_EQ(res.audit->zeros[0].first, p);
    EXPECT_EQ(res.audit->zeros[0].second, 4);
}

TEST(FunctionField, SectionNoneWhenSystemHasFullRank) {
    auto c = CurveModel::hermitian(FieldTower::build(3, 1), 2);
    FunctionField ff(c);
    Point p = affine_point_with(c, Level::kFq2, false, true);
    auto res = ff.solve_section(2, {{p, 2}});
    EXPECT_FALSE(res.witness);
    EXPECT_EQ(res.rank, 2u);
    EXPECT_EQ(res.unknowns, 2u);
    Point off{c.tower().one(), c.tower().one(), false, Level::kFq};
    EXPECT_THROW(ff.solve_section(4, {{off, 1}}), NotOnCurve);
    EXPECT_THROW(ff.solve_section(4, {{Point::infinity(), 1}}), ValidationError);
}
