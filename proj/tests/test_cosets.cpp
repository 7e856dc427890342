/*
   Copyright 2026 The cyclo Authors

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
#include <random>
#include <vector>

#include "cyclo/cosets.hpp"
#include "oracles.hpp"

using namespace cyclo;

TEST(CosetContext, Validation) {
    EXPECT_THROW(CosetContext::make(32, 6), std::invalid_argument);
    EXPECT_THROW(CosetContext::make(32, 2), std::invalid_argument);
    EXPECT_THROW(CosetContext::make(0, 3), std::invalid_argument);
    EXPECT_THROW(CosetContext::make(10, 1), std::invalid_argument);
    const auto c = CosetContext::make(32, 9);
    EXPECT_EQ(c.characteristic(), 3u);
    EXPECT_EQ(c.exponent(), 2u);
    EXPECT_EQ(c.multiplier(), 9u);
    EXPECT_FALSE(c.q_is_prime());
}

TEST(CosetContext, HugeBaseStaysSymbolic) {
    const auto c = CosetContext::from_prime_power(35, 2, 1000);
    EXPECT_FALSE(c.q().has_value());
    EXPECT_EQ(c.q_string(), "2^1000");
    EXPECT_EQ(c.multiplier(), pow_mod(2, 1000, 35));
}

TEST(CosetOf, ReferenceValues) {
    EXPECT_EQ(coset_of(CosetContext::make(32, 5), 1).elements(), (std::vector<u64>{1, 5, 9, 13, 17, 21, 25, 29}));
    EXPECT_EQ(coset_of(CosetContext::make(32, 3), 0).elements(), (std::vector<u64>{0}));
    EXPECT_EQ(coset_of(CosetContext::make(32, 3), 8).elements(), (std::vector<u64>{8, 24}));
}

TEST(CosetOf, NegativeAndLargeRepresentatives) {
    const auto ctx = CosetContext::make(32, 3);
    EXPECT_EQ(coset_of(ctx, -24), coset_of(ctx, 8));
    EXPECT_EQ(coset_of(ctx, 8 + 32 * 1000), coset_of(ctx, 8));
}

TEST(CosetOf, Fields) {
    const auto c = coset_of(CosetContext::make(3888, 5), 2187);
    EXPECT_EQ(c.size(), 4u);
    EXPECT_EQ(c.n_gamma(), 16u);
    EXPECT_EQ(c.gamma_tilde(), 9u);
    EXPECT_EQ(c.leader(), 243u);
    EXPECT_FALSE(c.is_primitive());
}

TEST(EnumerateCosets, Counts) {
    EXPECT_EQ(enumerate_cosets(CosetContext::make(32, 5)).size(), 10u);
    EXPECT_EQ(enumerate_cosets(CosetContext::make(32, 3)).size(), 9u);
    const auto one = enumerate_cosets(CosetContext::make(1, 7));
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0].elements(), (std::vector<u64>{0}));
}

TEST(EnumerateCosets, LimitGuard) {
    EXPECT_THROW(enumerate_cosets(CosetContext::make(1000, 3), 999), ResourceLimitExceeded);
}

// Partition property, leader order and agreement with naive orbits.
TEST(EnumerateCosets, MatchesNaiveOrbits) {
    for (u64 q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27})
        for (u64 n = 1; n <= 300; ++n) {
            if (std::gcd(n, q) != 1) continue;
            const auto ctx = CosetContext::make(n, q);
            const auto cosets = enumerate_cosets(ctx);
            const auto ref = oracle::all_orbits(n, q);
            ASSERT_EQ(cosets.size(), ref.size()) << "q=" << q << " n=" << n;
            std::vector<u64> cover;
            for (std::size_t i = 0; i < cosets.size(); ++i) {
                EXPECT_EQ(cosets[i].elements(), ref[i]);
                if (i > 0) {
                    EXPECT_LT(cosets[i - 1].leader(), cosets[i].leader());
                }
                cover.insert(cover.end(), cosets[i].elements().begin(), cosets[i].elements().end());
            }
            std::sort(cover.begin(), cover.end());
            std::vector<u64> all(n);
            std::iota(all.begin(), all.end(), 0);
            EXPECT_EQ(cover, all);
        }
}

TEST(CosetProperties, SizeLawAndRepresentativeIndependence) {
    std::mt19937_64 gen(404);
    for (int i = 0; i < 400; ++i) {
        const u64 q = std::vector<u64>{2, 3, 4, 5, 7, 9, 11, 13}[gen() % 8];
        const u64 n = 1 + gen() % 5000;
        if (std::gcd(n, q) != 1) continue;
        const auto ctx = CosetContext::make(n, q);
        const u64 ord = multiplicative_order(q % n, n);
        const u64 gamma = gen() % n;
        const auto c = coset_of(ctx, gamma);
        EXPECT_EQ(ord % c.size(), 0u);
        if (std::gcd(c.leader(), n) == 1) {
            EXPECT_EQ(c.size(), ord);
        }
        EXPECT_EQ(c.size(), oracle::order(q % c.n_gamma(), c.n_gamma()));
        u64 x = gamma;
        for (u64 j = 0; j < c.size(); ++j) {
            const auto d = coset_of(ctx, x);
            EXPECT_EQ(d, c);
            EXPECT_EQ(d.n_gamma(), c.n_gamma());
            x = x * (q % n) % n;
        }
        const auto orbit = c.orbit();
        EXPECT_EQ(orbit.front(), gamma);
        EXPECT_EQ(orbit.size(), c.size());
    }
}

TEST(PrimitiveForm, ReferenceValues) {
    const auto a = primitive_form(coset_of(CosetContext::make(3888, 5), 2187));
    EXPECT_EQ(a.context().n(), 16u);
    EXPECT_EQ(a.elements(), (std::vector<u64>{1, 5, 9, 13}));
    const auto b = coset_of(CosetContext::make(32, 5), 1);
    EXPECT_EQ(primitive_form(b), b);
    const auto c = primitive_form(coset_of(CosetContext::make(32, 3), 8));
    EXPECT_EQ(c.context().n(), 4u);
    EXPECT_EQ(c.elements(), (std::vector<u64>{1, 3}));
}

TEST(PrimitiveForm, IdempotentAndSizePreserving) {
    for (u64 q : {2, 3, 5, 9})
        for (u64 n = 1; n <= 200; ++n) {
            if (std::gcd(n, q) != 1) continue;
            for (const auto& c : enumerate_cosets(CosetContext::make(n, q))) {
                const auto p = primitive_form(c);
                EXPECT_EQ(p.size(), c.size());
                EXPECT_EQ(primitive_form(p), p);
                if (c.leader() != 0) {
                    EXPECT_EQ(std::gcd(p.leader(), p.context().n()), 1u);
                }
            }
        }
}
