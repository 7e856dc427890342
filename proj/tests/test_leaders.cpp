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

#include "cyclo/leaders.hpp"
#include "oracles.hpp"

using namespace cyclo;

namespace {

CyclotomicCoset cc(u64 n, u64 q, i64 gamma) { return coset_of(CosetContext::make(n, q), gamma); }

}  // namespace

TEST(LeaderBruteForce, ReferenceValues) {
    EXPECT_EQ(leader_bruteforce(cc(32, 5, 29)).leader, 1u);
    EXPECT_EQ(leader_bruteforce(cc(32, 5, 0)).leader, 0u);
    EXPECT_EQ(leader_bruteforce(cc(32, 3, 28)).leader, 20u);
}

TEST(LeaderEd, ReferenceValues) {
    const auto r = leader_ed(cc(3888, 5, 2187));
    EXPECT_EQ(r.leader, 243u);
    EXPECT_EQ(r.method, LeaderMethod::ed_closed_form);
    EXPECT_EQ(leader_ed(cc(32, 5, 0)).leader, 0u);
    EXPECT_EQ(leader_ed(cc(32, 5, 21)).leader, 1u);
    EXPECT_THROW(leader_ed(cc(32, 3, 1)), std::invalid_argument);
}

TEST(LeaderFast, ReferenceValues) {
    const auto a = leader_fast(cc(3888, 5, 1001));
    EXPECT_EQ(a.leader, 13u);
    EXPECT_EQ(a.method, LeaderMethod::omega_window);
    EXPECT_EQ(a.window_modulus, u64{24});
    EXPECT_EQ(a.window_values, (std::vector<u64>{17, 13}));
    EXPECT_EQ(a.reductions, 2u);
    EXPECT_EQ(leader_fast(cc(3888, 5, 2187)).leader, 243u);
    const auto c = leader_fast(cc(32, 3, 1));
    EXPECT_EQ(c.leader, 1u);
    EXPECT_EQ(c.window_values, (std::vector<u64>{1, 3}));
}

TEST(LeaderFast, AcceptsAnyIntegerRepresentative) {
    const auto ctx = CosetContext::make(3888, 5);
    EXPECT_EQ(leader_fast(ctx, 1001 + 3888 * 7).leader, 13u);
    EXPECT_EQ(leader_fast(ctx, 5005).leader, 13u);
}

// Agreement with brute force, exact reduction count, and membership.
TEST(LeaderFast, MatchesBruteForce) {
    for (u64 q : {2, 3, 4, 5, 7, 9, 11, 13})
        for (u64 n = 1; n <= 1500; ++n) {
            if (std::gcd(n, q) != 1) continue;
            for_each_coset(CosetContext::make(n, q), [&](CyclotomicCoset&& c) {
                const auto f = leader_fast(c);
                ASSERT_EQ(f.leader, c.leader()) << "q=" << q << " n=" << n;
                ASSERT_FALSE(f.diagnostic.has_value());
                EXPECT_EQ(f.reductions, omega_gamma(c));
                EXPECT_TRUE(c.contains(f.leader));
                if (is_equal_difference_direct(c).is_ed) {
                    EXPECT_EQ(leader_ed(c).leader, f.leader);
                }
            });
        }
}

TEST(LeaderFast, RandomRepresentativesLargeModuli) {
    std::mt19937_64 gen(606);
    for (int i = 0; i < 300; ++i) {
        const u64 q = std::vector<u64>{2, 3, 5, 7, 11, 13}[gen() % 6];
        const u64 n = 1 + gen() % 200000;
        if (n % q == 0) continue;
        const auto ctx = CosetContext::make(n, q);
        const u64 gamma = gen() % n;
        EXPECT_EQ(leader_fast(ctx, gamma).leader, oracle::orbit(n, q, gamma).front());
        EXPECT_EQ(leader_bruteforce(ctx, gamma).leader, oracle::orbit(n, q, gamma).front());
    }
}

TEST(LeaderMethodNames, RoundTrip) {
    for (auto m : {LeaderMethod::ed_closed_form, LeaderMethod::omega_window, LeaderMethod::brute_force})
        EXPECT_EQ(leader_method_from_string(to_string(m)), m);
    EXPECT_THROW(leader_method_from_string("nope"), std::invalid_argument);
}
