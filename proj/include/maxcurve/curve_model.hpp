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
 * @file curve_model.hpp
 * @brief Curves F(y) = x^d over k = F_{q^2} with F an additive polynomial.
 *
 * F(T) = Σ_{i=0}^{e} a_i T^{p^i}, a_0 != 0, a_e != 0, gcd(d, p) = 1. The affine model is smooth
 * (∂/∂y = a_0) and has a single place P∞ at infinity where x has pole order deg F = p^e and
 * y has pole order d. Genus is (deg F - 1)(d - 1)/2.
 *
 * Points are found per x by looking up x^d in a precomputed image table of F on the level, then
 * translating one preimage by the kernel of F. No loop over y.
 */

#ifndef MAXCURVE_CURVE_MODEL_HPP
#define MAXCURVE_CURVE_MODEL_HPP

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"
#include "field_tower.hpp"

namespace maxcurve {

enum class Family { kHermitianType, kAdditiveGeneral };

inline std::string to_string(Family f) { return f == Family::kHermitianType ? "H_mq" : "additive"; }

struct Point {
    Fe x{}, y{};
    bool at_infinity = false;
    /// Smallest level holding both coordinates; P∞ is F_q-rational.
    Level level = Level::kFq;

    static Point infinity() { return Point{Fe{}, Fe{}, true, Level::kFq}; }
    bool rational() const { return level != Level::kFq4; }
    friend bool operator==(const Point&, const Point&) = default;
};

/// Image/kernel tables of the additive map F restricted to one level.
struct FiberTable {
    static constexpr std::uint32_t kNone = 0xffffffffu;
    std::vector<std::uint32_t> preimage;  // indexed by Fe::v, one preimage or kNone
    std::vector<Fe> kernel;               // lex order
};

struct MaximalityReport {
    std::uint64_t points = 0;
    std::uint64_t hasse_weil = 0;  // q^2 + 2gq + 1
    bool maximal = false;
};

class CurveModel {
   public:
    /// y^q + y = x^m, m | q+1.
    static CurveModel hermitian(const FieldTower& tower, std::uint64_t m) {
        const std::uint64_t q = tower.q();
        if (m == 0 || (q + 1) % m != 0) throw ValidationError("m must divide q+1");
        std::vector<Fe> coeffs(tower.a() + 1, tower.zero());
        coeffs.front() = tower.one();
        coeffs.back() = tower.one();
        return CurveModel(tower, std::move(coeffs), m, Family::kHermitianType);
    }

    /// F(y) = x^d with F given by its coefficients a_0, ..., a_e of T, T^p, ..., T^{p^e}.
    static CurveModel additive(const FieldTower& tower, std::vector<Fe> coeffs, std::uint64_t d) {
        return CurveModel(tower, std::move(coeffs), d, Family::kAdditiveGeneral);
    }

    const FieldTower& tower() const { return tower_; }
    const std::vector<Fe>& f_coeffs() const { return coeffs_; }
    Family family() const { return family_; }
    std::uint64_t d() const { return d_; }
    std::uint64_t q() const { return tower_.q(); }
    /// p^e, the pole order of x at P∞.
    std::uint64_t deg_f() const { return deg_f_; }
    std::uint64_t genus() const { return (deg_f_ - 1) * (d_ - 1) / 2; }

    /// F(u) = Σ a_i u^{p^i}
    Fe eval_f(Fe u) const {
        Fe acc = tower_.zero();
        Fe power = u;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (i > 0) power = tower_.pow(power, tower_.p());
            acc = tower_.add(acc, tower_.mul(coeffs_[i], power));
        }
        return acc;
    }

    bool on_curve(Fe x, Fe y) const { return eval_f(y) == tower_.pow(x, d_); }

    /// Point with its level filled in; throws NotOnCurve.
    Point make_point(Fe x, Fe y) const {
        if (!on_curve(x, y)) throw NotOnCurve("point does not satisfy F(y) = x^d");
        const Level lx = tower_.subfield_level(x), ly = tower_.subfield_level(y);
        return Point{x, y, false, static_cast<int>(lx) > static_cast<int>(ly) ? lx : ly};
    }

    const FiberTable& fibers(Level level) const {
        check_enumeration_level(level);
        return level == Level::kFq2 ? tables_->k : tables_->k4;
    }

    /// Affine points in lex order of x then y, followed by P∞.
    std::vector<Point> points(Level level) const {
        const FiberTable& table = fibers(level);
        std::vector<Point> out;
        for (Fe x : tower_.elements(level)) {
            const Fe rhs = tower_.pow(x, d_);
            const std::uint32_t pre = table.preimage[rhs.v];
            if (pre == FiberTable::kNone) continue;
            std::vector<Fe> ys;
            ys.reserve(table.kernel.size());
            for (Fe kappa : table.kernel) ys.push_back(tower_.add(Fe{pre}, kappa));
            std::sort(ys.begin(), ys.end(), [&](Fe a, Fe b) { return tower_.lex_key(a) < tower_.lex_key(b); });
            for (Fe y : ys) {
                const Level lx = tower_.subfield_level(x), ly = tower_.subfield_level(y);
                out.push_back(Point{x, y, false, static_cast<int>(lx) > static_cast<int>(ly) ? lx : ly});
            }
        }
        out.push_back(Point::infinity());
        return out;
    }

    std::uint64_t count_points(Level level) const {
        const FiberTable& table = fibers(level);
        std::uint64_t count = 1;
        for (Fe x : tower_.elements(level))
            if (table.preimage[tower_.pow(x, d_).v] != FiberTable::kNone) count += table.kernel.size();
        return count;
    }

    MaximalityReport maximality() const {
        MaximalityReport r;
        r.points = count_points(Level::kFq2);
        r.hasse_weil = q() * q() + 2 * genus() * q() + 1;
        r.maximal = r.points == r.hasse_weil;
        return r;
    }

    bool is_maximal() const { return maximality().maximal; }

   private:
    struct Tables {
        FiberTable k, k4;
    };

    CurveModel(const FieldTower& tower, std::vector<Fe> coeffs, std::uint64_t d, Family family)
        : tower_(tower), coeffs_(std::move(coeffs)), d_(d), family_(family) {
        if (coeffs_.empty()) throw ValidationError("additive polynomial needs at least one coefficient");
        while (coeffs_.size() > 1 && coeffs_.back() == tower_.zero()) coeffs_.pop_back();
        for (Fe c : coeffs_)
            if (!tower_.in_level(c, Level::kFq2)) throw ValidationError("coefficients of F must lie in F_{q^2}");
        if (coeffs_.front() == tower_.zero()) throw ValidationError("a_0 must be nonzero");
        if (d_ == 0) throw ValidationError("d must be positive");
        if (d_ % tower_.p() == 0) throw ValidationError("gcd(d, p) must be 1");
        deg_f_ = 1;
        for (std::size_t i = 1; i < coeffs_.size(); ++i) deg_f_ *= tower_.p();
        if (std::gcd(deg_f_, d_) != 1) throw ValidationError("gcd(d, deg F) must be 1");
        auto tables = std::make_shared<Tables>();
        tables->k = build_table(Level::kFq2);
        tables->k4 = build_table(Level::kFq4);
        tables_ = std::move(tables);
    }

    void check_enumeration_level(Level level) const {
        if (level == Level::kFq) throw ValidationError("enumeration levels are F_{q^2} and F_{q^4}");
    }

    FiberTable build_table(Level level) const {
        FiberTable t;
        t.preimage.assign(tower_.size(), FiberTable::kNone);
        for (Fe u : tower_.elements(level)) {
            const Fe v = eval_f(u);
            if (t.preimage[v.v] == FiberTable::kNone) t.preimage[v.v] = u.v;
            if (v == tower_.zero()) t.kernel.push_back(u);
        }
        return t;
    }

    FieldTower tower_;
    std::vector<Fe> coeffs_;
    std::uint64_t d_ = 1;
    std::uint64_t deg_f_ = 1;
    Family family_;
    std::shared_ptr<const Tables> tables_;
};

/// q^{2j} + 1 - 2g(-q)^j, the count forced on F_{q^{2j}} when every Frobenius eigenvalue is -q.
inline std::int64_t predicted_count(std::uint64_t q, std::uint64_t genus, int j) {
    if (j < 1) throw ValidationError("extension index must be >= 1");
    std::int64_t qj = 1;
    for (int i = 0; i < j; ++i) qj *= static_cast<std::int64_t>(q);
    const std::int64_t signed_qj = (j % 2 == 0) ? qj : -qj;
    return qj * qj + 1 - 2 * static_cast<std::int64_t>(genus) * signed_qj;
}

inline std::int64_t predicted_count(const CurveModel& curve, int j) {
    if (!curve.is_maximal()) throw ValidationError("curve is not maximal over F_{q^2}");
    return predicted_count(curve.q(), curve.genus(), j);
}

}  // namespace maxcurve

#endif
