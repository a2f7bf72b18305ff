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
 * @file function_field.hpp
 * @brief Exact arithmetic in k(X) = k(x, y) for a CurveModel.
 *
 * Functions are kept in reduced form Σ c_ij x^i y^j with j < deg F. Since gcd(deg F, d) = 1 the
 * weights i·deg F + j·d of reduced monomials are pairwise distinct, so the pole order at P∞ is read
 * off the heaviest monomial with no cancellation.
 *
 * At an affine point P = (x0, y0) the function t = x - x0 is a local parameter (∂/∂y = a_0 != 0 on
 * the whole affine model). y is expanded as y0 + u(t) where u solves the additive equation
 *
 *     a_0 u = (x0 + t)^d - x0^d - Σ_{i>=1} a_i u^{p^i},
 *
 * by fixed-point iteration, which gains at least one correct t-adic digit per step.
 */

#ifndef MAXCURVE_FUNCTION_FIELD_HPP
#define MAXCURVE_FUNCTION_FIELD_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "curve_model.hpp"
#include "errors.hpp"
#include "linear_algebra.hpp"

namespace maxcurve {

/// x^{x_deg} y^{y_deg}
struct Monomial {
    std::uint32_t x_deg = 0;
    std::uint32_t y_deg = 0;
    friend constexpr auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Polynomial in x, y; reduced (y_deg < deg F) whenever produced by FunctionField.
struct FuncElement {
    std::map<Monomial, Fe> terms;  // nonzero coefficients only

    bool is_zero() const { return terms.empty(); }
    friend bool operator==(const FuncElement&, const FuncElement&) = default;
};

/// num / den, never cleared to a common form.
struct Quotient {
    FuncElement num;
    FuncElement den;
};

struct LocalSeries {
    Point center;
    std::vector<Fe> coeffs;  // coefficients of t^0 .. t^{N-1}, t = x - x(P)

    std::size_t precision() const { return coeffs.size(); }
    std::optional<int> valuation() const {
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            if (coeffs[i].v != 0) return static_cast<int>(i);
        return std::nullopt;
    }
};

/// Monomial basis of L(λP∞), sorted by pole order.
struct RRBasis {
    std::uint64_t lambda = 0;
    std::vector<Monomial> monomials;
    std::vector<std::uint64_t> pole_orders;

    std::size_t dimension() const { return monomials.size(); }
};

struct SectionConstraint {
    Point point;
    int min_order = 0;
};

struct DivisorAudit {
    std::uint64_t pole_order = 0;                // actual pole order at P∞
    std::vector<std::pair<Point, int>> zeros;    // located among F_{q^4}-points
    std::uint64_t zero_degree = 0;
    bool balanced = false;                       // zero_degree == pole_order
    bool constraints_met = false;
};

struct SectionResult {
    std::optional<FuncElement> witness;
    std::size_t rank = 0;
    std::size_t unknowns = 0;
    std::optional<DivisorAudit> audit;
};

/**
 * Non-owning view of a curve's function field. The curve must outlive the view.
 */
class FunctionField {
   public:
    explicit FunctionField(const CurveModel& curve) : curve_(&curve), t_(curve.tower()) {}

    const CurveModel& curve() const { return *curve_; }

    FuncElement constant(Fe c) const {
        FuncElement f;
        if (c != t_.zero()) f.terms[{0, 0}] = c;
        return f;
    }
    FuncElement monomial(std::uint32_t i, std::uint32_t j, Fe c) const {
        FuncElement f;
        if (c != t_.zero()) f.terms[{i, j}] = c;
        return normal_form(std::move(f));
    }
    FuncElement monomial(Monomial m) const { return monomial(m.x_deg, m.y_deg, t_.one()); }
    FuncElement x() const { return monomial(1, 0, t_.one()); }
    FuncElement y() const { return monomial(0, 1, t_.one()); }

    FuncElement add(const FuncElement& f, const FuncElement& g) const {
        FuncElement r = f;
        for (const auto& [m, c] : g.terms) accumulate(r, m, c);
        return r;
    }
    FuncElement sub(const FuncElement& f, const FuncElement& g) const { return add(f, scale(g, t_.neg(t_.one()))); }
    FuncElement scale(const FuncElement& f, Fe c) const {
        FuncElement r;
        if (c == t_.zero()) return r;
        for (const auto& [m, v] : f.terms) r.terms[m] = t_.mul(v, c);
        return r;
    }

    FuncElement mul(const FuncElement& f, const FuncElement& g) const {
        FuncElement r;
        for (const auto& [mf, cf] : f.terms)
            for (const auto& [mg, cg] : g.terms)
                accumulate(r, Monomial{mf.x_deg + mg.x_deg, mf.y_deg + mg.y_deg}, t_.mul(cf, cg));
        return normal_form(std::move(r));
    }

    FuncElement pow(const FuncElement& f, unsigned e) const {
        FuncElement r = constant(t_.one());
        for (unsigned i = 0; i < e; ++i) r = mul(r, f);
        return r;
    }

    /// Rewrites y^{p^e} = a_e^{-1}(x^d - Σ_{i<e} a_i y^{p^i}) until every y-degree is below deg F.
    FuncElement normal_form(FuncElement f) const {
        const auto& a = curve_->f_coeffs();
        const std::uint32_t deg = static_cast<std::uint32_t>(curve_->deg_f());
        const std::uint32_t d = static_cast<std::uint32_t>(curve_->d());
        const Fe lead_inv = t_.inv(a.back());
        for (;;) {
            auto it = std::find_if(f.terms.begin(), f.terms.end(), [&](const auto& kv) { return kv.first.y_deg >= deg; });
            if (it == f.terms.end()) break;
            // take the term with the highest y-degree
            auto top = it;
            for (auto jt = f.terms.begin(); jt != f.terms.end(); ++jt)
                if (jt->first.y_deg > top->first.y_deg) top = jt;
            const Monomial m = top->first;
            const Fe c = t_.mul(top->second, lead_inv);
            f.terms.erase(top);
            const std::uint32_t rest = m.y_deg - deg;
            accumulate(f, Monomial{m.x_deg + d, rest}, c);
            std::uint32_t pi = 1;
            for (std::size_t i = 0; i + 1 < a.size(); ++i) {
                accumulate(f, Monomial{m.x_deg, rest + pi}, t_.neg(t_.mul(c, a[i])));
                pi *= t_.p();
            }
        }
        return f;
    }

    std::uint64_t weight(Monomial m) const { return m.x_deg * curve_->deg_f() + m.y_deg * curve_->d(); }

    /// Pole order at P∞ of a nonzero reduced function.
    std::uint64_t pole_order(const FuncElement& f) const {
        if (f.is_zero()) throw ValidationError("valuation of the zero function");
        std::uint64_t best = 0;
        for (const auto& [m, c] : f.terms) best = std::max(best, weight(m));
        return best;
    }

    std::int64_t valuation_at_infinity(const FuncElement& f) const {
        return -static_cast<std::int64_t>(pole_order(normal_form(f)));
    }

    Fe evaluate(const FuncElement& f, const Point& p) const {
        if (p.at_infinity) throw ValidationError("cannot evaluate at P-infinity");
        Fe acc = t_.zero();
        for (const auto& [m, c] : f.terms)
            acc = t_.add(acc, t_.mul(c, t_.mul(t_.pow(p.x, m.x_deg), t_.pow(p.y, m.y_deg))));
        return acc;
    }

    /// u(t) with y = y(P) + u(t) near P, to precision n.
    std::vector<Fe> y_offset_series(const Point& p, std::size_t n) const {
        check_affine(p);
        const auto& a = curve_->f_coeffs();
        std::vector<Fe> xs(n, t_.zero());
        xs[0] = p.x;
        if (n > 1) xs[1] = t_.one();
        std::vector<Fe> rhs = series_pow(xs, curve_->d(), n);
        rhs[0] = t_.zero();  // (x0 + t)^d - x0^d
        const Fe a0_inv = t_.inv(a.front());
        std::vector<Fe> u(n, t_.zero());
        for (std::size_t iter = 0; iter <= n + 1; ++iter) {
            std::vector<Fe> acc = rhs;
            std::uint64_t pi = 1;
            for (std::size_t i = 1; i < a.size(); ++i) {
                pi *= t_.p();
                for (std::size_t k = 1; k * pi < n; ++k)
                    if (u[k] != t_.zero()) acc[k * pi] = t_.sub(acc[k * pi], t_.mul(a[i], t_.pow(u[k], pi)));
            }
            for (auto& v : acc) v = t_.mul(v, a0_inv);
            if (acc == u) break;
            u = std::move(acc);
        }
        return u;
    }

    /// Series of each monomial at P to precision n.
    std::vector<std::vector<Fe>> monomial_series(const Point& p, const std::vector<Monomial>& monos, std::size_t n) const {
        check_affine(p);
        std::uint32_t max_i = 0, max_j = 0;
        for (const auto& m : monos) {
            max_i = std::max(max_i, m.x_deg);
            max_j = std::max(max_j, m.y_deg);
        }
        std::vector<Fe> xs(n, t_.zero());
        xs[0] = p.x;
        if (n > 1) xs[1] = t_.one();
        std::vector<Fe> ys = y_offset_series(p, n);
        ys[0] = t_.add(ys[0], p.y);
        std::vector<std::vector<Fe>> xp{unit_series(n)}, yp{unit_series(n)};
        for (std::uint32_t i = 1; i <= max_i; ++i) xp.push_back(series_mul(xp.back(), xs));
        for (std::uint32_t j = 1; j <= max_j; ++j) yp.push_back(series_mul(yp.back(), ys));
        std::vector<std::vector<Fe>> out;
        out.reserve(monos.size());
        for (const auto& m : monos) out.push_back(series_mul(xp[m.x_deg], yp[m.y_deg]));
        return out;
    }

    LocalSeries local_expansion(const Point& p, const FuncElement& f, std::size_t n) const {
        check_on_curve(p);
        std::vector<Monomial> monos;
        for (const auto& [m, c] : f.terms) monos.push_back(m);
        auto series = monomial_series(p, monos, n);
        LocalSeries out{p, std::vector<Fe>(n, t_.zero())};
        std::size_t idx = 0;
        for (const auto& [m, c] : f.terms) {
            for (std::size_t k = 0; k < n; ++k) out.coeffs[k] = t_.add(out.coeffs[k], t_.mul(c, series[idx][k]));
            ++idx;
        }
        return out;
    }

    std::size_t default_precision() const { return 4 * (curve_->q() + 1); }
    std::size_t max_precision() const { return 64 * (curve_->q() + 1); }

    /// v_P(f), escalating precision from 4(q+1) by doubling up to 64(q+1).
    std::int64_t valuation_at(const Point& p, const FuncElement& f) const {
        if (f.is_zero()) throw ValidationError("valuation of the zero function");
        if (p.at_infinity) return valuation_at_infinity(f);
        for (std::size_t n = default_precision(); n <= max_precision(); n *= 2) {
            if (auto v = local_expansion(p, f, n).valuation()) return *v;
        }
        throw PrecisionExhausted("valuation not resolved within the precision cap");
    }

    std::int64_t valuation_at(const Point& p, const Quotient& f) const {
        return valuation_at(p, f.num) - valuation_at(p, f.den);
    }

    RRBasis rr_basis(std::uint64_t lambda) const {
        RRBasis b;
        b.lambda = lambda;
        const std::uint64_t deg = curve_->deg_f(), d = curve_->d();
        for (std::uint64_t j = 0; j < deg && j * d <= lambda; ++j)
            for (std::uint64_t i = 0; i * deg + j * d <= lambda; ++i)
                b.monomials.push_back(Monomial{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
        std::sort(b.monomials.begin(), b.monomials.end(),
                  [&](const Monomial& l, const Monomial& r) { return weight(l) < weight(r); });
        for (const auto& m : b.monomials) b.pole_orders.push_back(weight(m));
        return b;
    }

    /**
     * Nonzero f in L(λP∞) vanishing to the requested orders, of smallest possible pole order.
     * Witnesses get a divisor audit over the F_{q^4}-points of the curve.
     */
    SectionResult solve_section(std::uint64_t lambda, const std::vector<SectionConstraint>& constraints) const {
        for (const auto& c : constraints) {
            if (c.point.at_infinity) throw ValidationError("section constraints must be affine points");
            check_on_curve(c.point);
        }
        const RRBasis basis = rr_basis(lambda);
        SectionResult result;
        result.unknowns = basis.dimension();
        Matrix rows;
        for (const auto& c : constraints) {
            if (c.min_order <= 0) continue;
            auto series = monomial_series(c.point, basis.monomials, static_cast<std::size_t>(c.min_order));
            for (int k = 0; k < c.min_order; ++k) {
                std::vector<Fe> row(basis.dimension());
                for (std::size_t col = 0; col < basis.dimension(); ++col) row[col] = series[col][k];
                rows.push_back(std::move(row));
            }
        }
        auto kernel = lowest_kernel_vector(t_, std::move(rows), basis.dimension(), &result.rank);
        if (!kernel) return result;
        FuncElement f;
        for (std::size_t col = 0; col < basis.dimension(); ++col)
            if ((*kernel)[col] != t_.zero()) f.terms[basis.monomials[col]] = (*kernel)[col];
        result.audit = audit_divisor(f, constraints);
        result.witness = std::move(f);
        return result;
    }

    DivisorAudit audit_divisor(const FuncElement& f, const std::vector<SectionConstraint>& constraints) const {
        DivisorAudit audit;
        audit.pole_order = pole_order(f);
        for (const auto& p : curve_->points(Level::kFq4)) {
            if (p.at_infinity || evaluate(f, p) != t_.zero()) continue;
            const auto v = static_cast<int>(valuation_at(p, f));
            audit.zeros.emplace_back(p, v);
            audit.zero_degree += static_cast<std::uint64_t>(v);
        }
        audit.balanced = audit.zero_degree == audit.pole_order;
        audit.constraints_met = std::all_of(constraints.begin(), constraints.end(), [&](const SectionConstraint& c) {
            return c.min_order <= 0 || valuation_at(c.point, f) >= c.min_order;
        });
        return audit;
    }

    // truncated power-series helpers
    std::vector<Fe> unit_series(std::size_t n) const {
        std::vector<Fe> s(n, t_.zero());
        if (n > 0) s[0] = t_.one();
        return s;
    }

    std::vector<Fe> series_mul(const std::vector<Fe>& a, const std::vector<Fe>& b) const {
        const std::size_t n = a.size();
        std::vector<Fe> r(n, t_.zero());
        for (std::size_t i = 0; i < n; ++i) {
            if (a[i] == t_.zero()) continue;
            for (std::size_t j = 0; i + j < n; ++j)
                if (b[j] != t_.zero()) r[i + j] = t_.add(r[i + j], t_.mul(a[i], b[j]));
        }
        return r;
    }

    std::vector<Fe> series_pow(const std::vector<Fe>& a, std::uint64_t e, std::size_t n) const {
        std::vector<Fe> r = unit_series(n), base = a;
        while (e) {
            if (e & 1) r = series_mul(r, base);
            base = series_mul(base, base);
            e >>= 1;
        }
        return r;
    }

   private:
    void accumulate(FuncElement& f, Monomial m, Fe c) const {
        if (c == t_.zero()) return;
        auto [it, inserted] = f.terms.try_emplace(m, c);
        if (!inserted) {
            it->second = t_.add(it->second, c);
            if (it->second == t_.zero()) f.terms.erase(it);
        }
    }

    void check_affine(const Point& p) const {
        if (p.at_infinity) throw ValidationError("local expansion needs an affine point");
    }

    void check_on_curve(const Point& p) const {
        if (!p.at_infinity && !curve_->on_curve(p.x, p.y)) throw NotOnCurve("point is not on the curve");
    }

    const CurveModel* curve_;
    FieldTower t_;
};

/// Fr(P) = (x^{q^2}, y^{q^2}), the Frobenius relative to k.
inline Point frobenius(const FieldTower& t, const Point& p) {
    if (p.at_infinity) return p;
    return Point{t.frobenius(p.x, 2), t.frobenius(p.y, 2), false, p.level};
}

}  // namespace maxcurve

#endif
