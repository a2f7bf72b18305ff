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

#include <numeric>

#include "maxcurve/semigroup.hpp"

using namespace maxcurve;

TEST(Semigroup, GapsExamples) {
    auto s23 = NumericalSemigroup::generated_by({2, 3});
    EXPECT_EQ(s23.gaps(), (std::vector<std::uint64_t>{1}));
    EXPECT_EQ(s23.genus(), 1u);
    auto s35 = NumericalSemigroup::generated_by({3, 5});
    EXPECT_EQ(s35.gaps(), (std::vector<std::uint64_t>{1, 2, 4, 7}));
    EXPECT_EQ(s35.genus(), 4u);
    EXPECT_EQ(s35.conductor(), 8u);
    auto s456 = NumericalSemigroup::generated_by({4, 5, 6});
    EXPECT_EQ(s456.gaps(), (std::vector<std::uint64_t>{1, 2, 3, 7}));
    EXPECT_EQ(s456.genus(), 4u);
    EXPECT_EQ(NumericalSemigroup::generated_by({1}).genus(), 0u);
    EXPECT_THROW(NumericalSemigroup::generated_by({4, 6}), ValidationError);
    EXPECT_THROW(NumericalSemigroup::generated_by({}), ValidationError);
}

TEST(Semigroup, Nongaps) {
    auto s35 = NumericalSemigroup::generated_by({3, 5});
    EXPECT_EQ(s35.nongaps(6), (std::vector<std::uint64_t>{3, 5, 6, 8, 9, 10}));
    auto s34 = NumericalSemigroup::generated_by({3, 4});
    EXPECT_EQ(s34.nongaps(5), (std::vector<std::uint64_t>{3, 4, 6, 7, 8}));
    EXPECT_EQ(s35.count_up_to(6), 4u);
    EXPECT_TRUE(s35.contains(0));
    EXPECT_FALSE(s35.contains(7));
    EXPECT_TRUE(s35.contains(1000));
}

TEST(Semigroup, PairGenusMatchesSieve) {
    EXPECT_EQ(pair_genus(3, 5), 4u);
    EXPECT_EQ(pair_genus(2, 3), 1u);
    EXPECT_EQ(pair_genus(4, 7), 9u);
    EXPECT_THROW(pair_genus(4, 6), ValidationError);
    for (std::uint64_t r = 1; r <= 50; ++r)
        for (std::uint64_t s = 1; s <= 50; ++s) {
            if (std::gcd(r, s) != 1) continue;
            ASSERT_EQ(pair_genus(r, s), NumericalSemigroup::generated_by({r, s}).genus()) << r << "," << s;
        }
}

TEST(Semigroup, SelmerExamples) {
    auto b45 = selmer_upper_bound(4, 5);
    EXPECT_EQ(b45.bound, 8);
    EXPECT_EQ(b45.sieve_twice_genus, 8u);
    EXPECT_TRUE(b45.exact);

    auto b47 = selmer_upper_bound(4, 7);
    EXPECT_EQ(b47.bound, 18);
    EXPECT_EQ(b47.sieve_twice_genus, 18u);
    EXPECT_EQ(b47.s, 4u);
    EXPECT_TRUE(b47.s_equals_m);

    auto b57 = selmer_upper_bound(5, 7);
    EXPECT_EQ(b57.bound, 16);
    EXPECT_EQ(b57.sieve_twice_genus, 14u);
    EXPECT_FALSE(b57.exact);

    EXPECT_THROW(selmer_upper_bound(3, 6), ValidationError);   // gcd
    EXPECT_THROW(selmer_upper_bound(2, 7), ValidationError);   // 2m < q+1
}

TEST(Semigroup, SelmerBoundOnWholeDomain) {
    int checked = 0;
    for (std::uint64_t q = 2; q <= 30; ++q)
        for (std::uint64_t m = 1; m <= 30; ++m) {
            if (std::gcd(m, q) != 1 || 2 * m < q + 1 || m > q + 1) continue;
            auto b = selmer_upper_bound(m, q);
            ASSERT_GE(b.bound, static_cast<std::int64_t>(b.sieve_twice_genus)) << m << "," << q;
            ASSERT_EQ(b.q + 1, b.s * q - b.t * m);
            ++checked;
        }
    EXPECT_EQ(checked, 166);
}
