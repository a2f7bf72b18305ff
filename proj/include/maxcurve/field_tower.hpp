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
 * @file field_tower.hpp
 * @brief The tower F_p ⊂ F_q ⊂ F_{q^2} ⊂ F_{q^4} inside one ambient field F_{p^{4a}}.
 *
 * Elements are stored as their coefficient tuple (c_0, ..., c_{4a-1}) packed little-endian in base p,
 * i.e. the integer Σ c_i p^i. Subfields are the Frobenius-fixed subsets of the ambient field, so no
 * embedding maps are ever needed. Multiplication and addition go through log/antilog and Zech tables
 * which are built once per tower; the schoolbook route stays available for cross-checking.
 *
 * Ordering conventions (both deterministic):
 * - "lex order" on elements and on moduli compares coefficient tuples with c_0 most significant.
 * - the modulus is the lex-first monic irreducible polynomial of degree 4a over F_p,
 *   xi the lex-first element of F_{q^2} with multiplicative order q^2 - 1.
 */

#ifndef MAXCURVE_FIELD_TOWER_HPP
#define MAXCURVE_FIELD_TOWER_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <memory>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"

namespace maxcurve {

/// Element of the ambient field, packed base-p coefficient index.
struct Fe {
    std::uint32_t v = 0;
    friend constexpr auto operator<=>(const Fe&, const Fe&) = default;
};

/// Subfield levels, valued by the exponent j of |F_{q^j}|.
enum class Level : int { kFq = 1, kFq2 = 2, kFq4 = 4 };

inline std::string to_string(Level level) {
    switch (level) {
        case Level::kFq: return "F_q";
        case Level::kFq2: return "F_q2";
        case Level::kFq4: return "F_q4";
    }
    return "?";
}

inline constexpr std::uint64_t kDefaultFieldBudget = std::uint64_t{1} << 20;

namespace detail {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Dense polynomials over F_p, little-endian, trimmed (empty == 0).
using Poly = std::vector<std::uint32_t>;

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    std::uint64_t r = 1, b = a % p, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

inline Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
    trim(a);
    const std::uint32_t lead_inv = inv_mod(m.back(), p);
    while (a.size() >= m.size()) {
        const std::uint64_t c = std::uint64_t{a.back()} * lead_inv % p;
        const std::size_t shift = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i)
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - c * m[i] % p) % p);
        trim(a);
    }
    return a;
}

inline Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    trim(r);
    return r;
}

inline Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint32_t p) {
    Poly r{1};
    base = poly_mod(base, m, p);
    while (e) {
        if (e & 1) r = poly_mod(poly_mul(r, base, p), m, p);
        base = poly_mod(poly_mul(base, base, p), m, p);
        e >>= 1;
    }
    return r;
}

/// Monic f of degree n is irreducible iff gcd(f, T^{p^i} - T) = 1 for 1 <= i <= n/2.
inline bool is_irreducible(const Poly& f, std::uint32_t p) {
    const std::size_t n = f.size() - 1;
    Poly h{0, 1};
    for (std::size_t i = 1; i <= n / 2; ++i) {
        h = poly_powmod(h, p, f, p);
        Poly diff = h;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        trim(diff);
        if (diff.empty()) return false;
        if (poly_gcd(f, diff, p).size() > 1) return false;
    }
    return true;
}

}  // namespace detail

/**
 * Immutable field tower. Copies share the same tables.
 */
class FieldTower {
   public:
    static FieldTower build(std::uint32_t p, std::uint32_t a, std::uint64_t budget = kDefaultFieldBudget) {
        if (!detail::is_prime(p)) throw ValidationError("p = " + std::to_string(p) + " is not prime");
        if (a == 0) throw ValidationError("a must be positive");
        const std::uint32_t n = 4 * a;
        std::uint64_t size = 1;
        for (std::uint32_t i = 0; i < n; ++i) {
            size *= p;
            if (size > budget)
                throw BudgetExceeded("ambient field p^(4a) exceeds budget " + std::to_string(budget));
        }
        auto impl = std::make_shared<Impl>();
        impl->p = p;
        impl->a = a;
        impl->n = n;
        impl->size = static_cast<std::uint32_t>(size);
        impl->q = 1;
        for (std::uint32_t i = 0; i < a; ++i) impl->q *= p;
        FieldTower tower(impl);
        tower.find_modulus(*impl);
        tower.build_tables(*impl);
        tower.find_xi(*impl);
        return tower;
    }

    std::uint32_t p() const { return impl_->p; }
    std::uint32_t a() const { return impl_->a; }
    std::uint64_t q() const { return impl_->q; }
    /// Degree 4a of the ambient field over F_p.
    std::uint32_t degree() const { return impl_->n; }
    /// |F_{q^4}| = p^{4a}.
    std::uint32_t size() const { return impl_->size; }
    std::uint64_t level_size(Level level) const {
        std::uint64_t s = 1;
        for (int i = 0; i < static_cast<int>(level); ++i) s *= q();
        return s;
    }
    /// Non-leading coefficients (c_0, ..., c_{4a-1}) of the monic modulus.
    const std::vector<std::uint32_t>& modulus() const { return impl_->modulus; }
    Fe xi() const { return impl_->xi; }

    Fe zero() const { return Fe{0}; }
    Fe one() const { return Fe{1}; }
    /// Image of an integer in the prime field.
    Fe from_int(std::int64_t k) const {
        const std::int64_t p = impl_->p;
        return Fe{static_cast<std::uint32_t>(((k % p) + p) % p)};
    }

    Fe from_coeffs(std::span<const std::uint32_t> coeffs) const {
        if (coeffs.size() > impl_->n) throw ValidationError("too many coefficients for ambient field");
        std::uint32_t v = 0;
        for (std::size_t i = coeffs.size(); i-- > 0;) {
            if (coeffs[i] >= impl_->p) throw ValidationError("coefficient out of range [0,p)");
            v = v * impl_->p + coeffs[i];
        }
        return Fe{v};
    }

    std::vector<std::uint32_t> coeffs(Fe x) const {
        std::vector<std::uint32_t> c(impl_->n);
        for (std::uint32_t i = 0; i < impl_->n; ++i) {
            c[i] = x.v % impl_->p;
            x.v /= impl_->p;
        }
        return c;
    }

    /// Sort key realizing lex order of coefficient tuples (c_0 most significant).
    std::uint32_t lex_key(Fe x) const {
        std::uint32_t key = 0;
        for (std::uint32_t i = 0; i < impl_->n; ++i) {
            key = key * impl_->p + x.v % impl_->p;
            x.v /= impl_->p;
        }
        return key;
    }

    Fe add(Fe x, Fe y) const {
        if (impl_->p == 2) return Fe{x.v ^ y.v};
        if (x.v == 0) return y;
        if (y.v == 0) return x;
        const std::uint32_t order = impl_->size - 1;
        const std::uint32_t lx = impl_->log[x.v], ly = impl_->log[y.v];
        const std::uint32_t diff = ly >= lx ? ly - lx : ly + order - lx;
        const std::uint32_t z = impl_->zech[diff];
        if (z == kNoLog) return Fe{0};
        const std::uint32_t e = lx + z;
        return Fe{impl_->exp[e >= order ? e - order : e]};
    }

    Fe neg(Fe x) const {
        if (x.v == 0 || impl_->p == 2) return x;
        const std::uint32_t order = impl_->size - 1;
        const std::uint32_t e = impl_->log[x.v] + order / 2;
        return Fe{impl_->exp[e >= order ? e - order : e]};
    }

    Fe sub(Fe x, Fe y) const { return add(x, neg(y)); }

    Fe mul(Fe x, Fe y) const {
        if (x.v == 0 || y.v == 0) return Fe{0};
        const std::uint32_t order = impl_->size - 1;
        const std::uint32_t e = impl_->log[x.v] + impl_->log[y.v];
        return Fe{impl_->exp[e >= order ? e - order : e]};
    }

    Fe inv(Fe x) const {
        if (x.v == 0) throw ValidationError("inverse of zero");
        const std::uint32_t order = impl_->size - 1;
        const std::uint32_t l = impl_->log[x.v];
        return Fe{impl_->exp[l == 0 ? 0 : order - l]};
    }

    Fe div(Fe x, Fe y) const { return mul(x, inv(y)); }

    Fe pow(Fe x, std::uint64_t e) const {
        if (e == 0) return one();
        if (x.v == 0) return x;
        const std::uint64_t order = impl_->size - 1;
        const std::uint64_t l = static_cast<std::uint64_t>(impl_->log[x.v]) * (e % order) % order;
        return Fe{impl_->exp[l]};
    }

    /// Signed exponent; negative powers of nonzero elements.
    Fe pow_signed(Fe x, std::int64_t e) const {
        if (e >= 0) return pow(x, static_cast<std::uint64_t>(e));
        return pow(inv(x), static_cast<std::uint64_t>(-e));
    }

    /// x^{q^j}
    Fe frobenius(Fe x, int j = 1) const {
        std::uint64_t e = 1;
        const std::uint64_t order = impl_->size - 1;
        for (int i = 0; i < j; ++i) e = e * q() % order;
        return pow(x, e);
    }

    /// Discrete log of a nonzero element w.r.t. the internal ambient generator.
    std::uint32_t log(Fe x) const {
        if (x.v == 0) throw ValidationError("log of zero");
        return impl_->log[x.v];
    }

    /// Multiplicative order of a nonzero element.
    std::uint64_t order(Fe x) const {
        const std::uint64_t n = impl_->size - 1;
        return n / std::gcd<std::uint64_t>(log(x), n);
    }

    bool in_level(Fe x, Level level) const {
        if (x.v == 0) return true;
        const std::uint64_t sub = level_size(level) - 1;
        return impl_->log[x.v] % ((impl_->size - 1) / sub) == 0;
    }

    /// Smallest level L with x^{|L|} = x. The ambient field is F_{q^4}.
    Level subfield_level(Fe x) const {
        if (in_level(x, Level::kFq)) return Level::kFq;
        if (in_level(x, Level::kFq2)) return Level::kFq2;
        return Level::kFq4;
    }

    /// Σ x^{|to|^i} over the relative Frobenius orbit of F_{from}/F_{to}.
    Fe trace(Fe x, Level from, Level to) const {
        const int steps = check_relative(x, from, to);
        Fe acc = zero();
        Fe term = x;
        for (int i = 0; i < steps; ++i) {
            acc = add(acc, term);
            term = frobenius(term, static_cast<int>(to));
        }
        return acc;
    }

    Fe norm(Fe x, Level from, Level to) const {
        const int steps = check_relative(x, from, to);
        Fe acc = one();
        Fe term = x;
        for (int i = 0; i < steps; ++i) {
            acc = mul(acc, term);
            term = frobenius(term, static_cast<int>(to));
        }
        return acc;
    }

    /// All elements of a level, in lex order.
    const std::vector<Fe>& elements(Level level) const {
        switch (level) {
            case Level::kFq: return impl_->elems_q;
            case Level::kFq2: return impl_->elems_q2;
            case Level::kFq4: return impl_->elems_q4;
        }
        return impl_->elems_q4;
    }

    /// Polynomial-basis multiplication without tables.
    Fe mul_schoolbook(Fe x, Fe y) const {
        detail::Poly a = coeffs(x), b = coeffs(y);
        detail::trim(a);
        detail::trim(b);
        detail::Poly r = detail::poly_mod(detail::poly_mul(a, b, impl_->p), full_modulus(), impl_->p);
        r.resize(impl_->n, 0);
        return from_coeffs(r);
    }

    friend bool operator==(const FieldTower& l, const FieldTower& r) {
        return l.impl_ == r.impl_ || (l.p() == r.p() && l.a() == r.a() && l.modulus() == r.modulus());
    }

   private:
    static constexpr std::uint32_t kNoLog = 0xffffffffu;

    struct Impl {
        std::uint32_t p = 0, a = 0, n = 0, size = 0;
        std::uint64_t q = 0;
        std::vector<std::uint32_t> modulus;
        std::vector<std::uint32_t> exp, log, zech;
        std::vector<Fe> elems_q, elems_q2, elems_q4;
        Fe xi;
    };

    explicit FieldTower(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}

    detail::Poly full_modulus() const {
        detail::Poly m = impl_->modulus;
        m.push_back(1);
        return m;
    }

    int check_relative(Fe x, Level from, Level to) const {
        const int f = static_cast<int>(from), t = static_cast<int>(to);
        if (f % t != 0) throw ValidationError("target level is not a subfield of the source level");
        if (!in_level(x, from)) throw ValidationError("element does not lie in the claimed source level");
        return f / t;
    }

    void find_modulus(Impl& m) const {
        const std::uint32_t p = impl_->p, n = impl_->n;
        // Tuples (c_0..c_{n-1}) in lex order = counting with c_0 as the most significant digit.
        std::vector<std::uint32_t> c(n, 0);
        for (;;) {
            if (c[0] != 0) {
                detail::Poly f = c;
                f.push_back(1);
                if (detail::is_irreducible(f, p)) {
                    m.modulus = c;
                    return;
                }
            }
            std::size_t i = n;
            while (i-- > 0) {
                if (++c[i] < p) break;
                c[i] = 0;
                if (i == 0) throw Error("no irreducible polynomial found");
            }
        }
    }

    void build_tables(Impl& m) const {
        const std::uint32_t size = m.size, order = size - 1;
        const auto factors = detail::prime_factors(order);
        auto pow_sb = [&](Fe x, std::uint64_t e) {
            Fe r = one();
            while (e) {
                if (e & 1) r = mul_schoolbook(r, x);
                x = mul_schoolbook(x, x);
                e >>= 1;
            }
            return r;
        };
        Fe gen{0};
        for (std::uint32_t v = 1; v < size; ++v) {
            const bool primitive = std::all_of(factors.begin(), factors.end(),
                                               [&](std::uint64_t r) { return pow_sb(Fe{v}, order / r).v != 1; });
            if (primitive) {
                gen = Fe{v};
                break;
            }
        }
        m.exp.assign(order, 0);
        m.log.assign(size, kNoLog);
        Fe cur = one();
        for (std::uint32_t i = 0; i < order; ++i) {
            m.exp[i] = cur.v;
            m.log[cur.v] = i;
            cur = mul_schoolbook(cur, gen);
        }
        // zech[i]: 1 + g^i = g^{zech[i]}
        m.zech.assign(order, kNoLog);
        for (std::uint32_t i = 0; i < order; ++i) {
            const std::uint32_t v = m.exp[i];
            const std::uint32_t c0 = v % m.p;
            const std::uint32_t w = v - c0 + (c0 + 1) % m.p;
            m.zech[i] = w == 0 ? kNoLog : m.log[w];
        }
        auto collect = [&](Level level) {
            std::vector<Fe> out;
            for (std::uint32_t v = 0; v < size; ++v)
                if (in_level(Fe{v}, level)) out.push_back(Fe{v});
            std::sort(out.begin(), out.end(), [&](Fe x, Fe y) { return lex_key(x) < lex_key(y); });
            return out;
        };
        m.elems_q = collect(Level::kFq);
        m.elems_q2 = collect(Level::kFq2);
        m.elems_q4 = collect(Level::kFq4);
    }

    void find_xi(Impl& m) const {
        const std::uint64_t target = level_size(Level::kFq2) - 1;
        for (Fe x : m.elems_q2) {
            if (x.v != 0 && order(x) == target) {
                m.xi = x;
                return;
            }
        }
        throw Error("no primitive element of F_{q^2} found");
    }

    std::shared_ptr<const Impl> impl_;
};

/// Base-p digits c0:c1:... of an element of the ambient field.
inline std::string encode_element(const FieldTower& t, Fe x) {
    std::string out;
    for (auto c : t.coeffs(x)) {
        if (!out.empty()) out += ':';
        out += std::to_string(c);
    }
    return out;
}

inline Fe decode_element(const FieldTower& t, const std::string& s) {
    std::vector<std::uint32_t> digits;
    std::stringstream in(s);
    std::string part;
    while (std::getline(in, part, ':')) {
        if (part.empty()) throw ValidationError("empty digit in field element '" + s + "'");
        std::size_t used = 0;
        const unsigned long v = std::stoul(part, &used);
        if (used != part.size() || v >= t.p()) throw ValidationError("bad digit in field element '" + s + "'");
        digits.push_back(static_cast<std::uint32_t>(v));
    }
    if (digits.size() != t.degree()) throw ValidationError("field element '" + s + "' has the wrong digit count");
    return t.from_coeffs(digits);
}

}  // namespace maxcurve

#endif
