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

#ifndef MAXCURVE_SEMIGROUP_HPP
#define MAXCURVE_SEMIGROUP_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "errors.hpp"

namespace maxcurve {

/// Numerical semigroup given by generators with gcd 1; gaps found by sieving.
class NumericalSemigroup {
   public:
    static NumericalSemigroup generated_by(std::vector<std::uint64_t> gens) {
        gens.erase(std::remove(gens.begin(), gens.end(), 0u), gens.end());
        if (gens.empty()) throw ValidationError("semigroup needs a positive generator");
        std::sort(gens.begin(), gens.end());
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        std::uint64_t g = 0;
        for (auto v : gens) g = std::gcd(g, v);
        if (g != 1) throw ValidationError("generators must have gcd 1 (otherwise infinitely many gaps)");

        NumericalSemigroup s;
        s.gens_ = gens;
        // Sieve until min(gens) consecutive members appear; everything after is a member.
        const std::uint64_t smallest = gens.front();
        s.member_.push_back(true);
        std::uint64_t run = 1;
        while (run < smallest) {
            const std::uint64_t n = s.member_.size();
            const bool in = std::any_of(gens.begin(), gens.end(), [&](std::uint64_t gen) {
                return gen <= n && s.member_[n - gen];
            });
            s.member_.push_back(in);
            run = in ? run + 1 : 0;
            if (!in) s.gaps_.push_back(n);
        }
        s.conductor_ = s.gaps_.empty() ? 0 : s.gaps_.back() + 1;
        return s;
    }

    const std::vector<std::uint64_t>& generators() const { return gens_; }
    const std::vector<std::uint64_t>& gaps() const { return gaps_; }
    std::uint64_t genus() const { return gaps_.size(); }
    std::uint64_t conductor() const { return conductor_; }

    bool contains(std::uint64_t n) const { return n >= member_.size() || member_[n]; }

    /// First `count` positive non-gaps m_1 < m_2 < ...
    std::vector<std::uint64_t> nongaps(std::size_t count) const {
        std::vector<std::uint64_t> out;
        for (std::uint64_t n = 1; out.size() < count; ++n)
            if (contains(n)) out.push_back(n);
        return out;
    }

    /// #{h in H : h <= bound}, 0 included.
    std::uint64_t count_up_to(std::uint64_t bound) const {
        std::uint64_t c = 0;
        for (std::uint64_t n = 0; n <= bound; ++n)
            if (contains(n)) ++c;
        return c;
    }

   private:
    std::vector<std::uint64_t> gens_;
    std::vector<bool> member_;
    std::vector<std::uint64_t> gaps_;
    std::uint64_t conductor_ = 0;
};

/// Genus of <r, s> for coprime r, s.
inline std::uint64_t pair_genus(std::uint64_t r, std::uint64_t s) {
    if (r == 0 || s == 0 || std::gcd(r, s) != 1) throw ValidationError("pair_genus needs coprime positive r, s");
    return (r - 1) * (s - 1) / 2;
}

struct SelmerBound {
    std::uint64_t m = 0, q = 0;
    std::uint64_t s = 0, t = 0, u = 0, r = 0;
    std::int64_t bound = 0;       // upper bound on 2·genus(<m, q, q+1>)
    std::uint64_t sieve_twice_genus = 0;
    bool exact = false;           // bound equals the sieve value
    bool s_equals_m = false;      // solution needed the relaxed range s <= m
};

/**
 * Writes q+1 = s·q - t·m with the smallest s in (1, m] and t > 0, m = u·s + r with 0 <= r < s,
 * and returns (m-1)(q-1) - u·t·(m-s+r). Every result is checked against the sieve.
 */
inline SelmerBound selmer_upper_bound(std::uint64_t m, std::uint64_t q) {
    if (q < 2 || m < 1) throw ValidationError("selmer bound needs m >= 1, q >= 2");
    if (std::gcd(m, q) != 1) throw ValidationError("selmer bound needs gcd(m, q) = 1");
    if (2 * m < q + 1 || m > q + 1) throw ValidationError("selmer bound needs q+1 <= 2m <= 2(q+1)");
    SelmerBound b;
    b.m = m;
    b.q = q;
    for (std::uint64_t s = 2; s <= m; ++s) {
        if (s * q <= q + 1) continue;
        const std::uint64_t num = s * q - q - 1;
        if (num % m != 0) continue;
        b.s = s;
        b.t = num / m;
        break;
    }
    if (b.s == 0) throw ValidationError("no (s, t) with q+1 = sq - tm, 1 < s <= m, t > 0");
    b.u = m / b.s;
    b.r = m % b.s;
    b.s_equals_m = b.s == m;
    b.bound = static_cast<std::int64_t>((m - 1) * (q - 1)) -
              static_cast<std::int64_t>(b.u * b.t * (m - b.s + b.r));
    b.sieve_twice_genus = 2 * NumericalSemigroup::generated_by({m, q, q + 1}).genus();
    if (b.bound < static_cast<std::int64_t>(b.sieve_twice_genus))
        throw IdentityFailure("selmer bound below the sieve genus");
    b.exact = b.bound == static_cast<std::int64_t>(b.sieve_twice_genus);
    return b;
}

}  // namespace maxcurve

#endif
