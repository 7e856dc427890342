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
#include <set>
#include <vector>

#include "cyclo/equal_difference.hpp"
#include "oracles.hpp"

using namespace cyclo;

namespace {

CyclotomicCoset cc(u64 n, u64 q, i64 gamma) { return coset_of(CosetContext::make(n, q), gamma); }

}  // namespace

TEST(EdDirect, ReferenceValues) {
    const auto a = is_equal_difference_direct(cc(32, 5, 1));
    EXPECT_TRUE(a.is_ed);
    EXPECT_EQ(a.common_difference, u64{4});
    EXPECT_FALSE(is_equal_difference_direct(cc(32, 3, 1)).is_ed);
    const auto z = is_equal_difference_direct(cc(77, 2, 0));
    EXPECT_TRUE(z.is_ed);
    EXPECT_EQ(z.common_difference, u64{77});
}

TEST(EdCriterion, ReferenceValues) {
    EXPECT_TRUE(is_equal_difference_criterion(cc(32, 5, 1)).is_ed);
    EXPECT_FALSE(is_equal_difference_criterion(cc(32, 3, 1)).is_ed);
    const auto r = ed_criterion_report(CosetContext::make(3888, 5), 16);
    EXPECT_EQ(r.rad_n_gamma, 2u);
    EXPECT_TRUE(r.eight_divides);
    EXPECT_EQ(r.q_mod_4, 1u);
    EXPECT_TRUE(r.is_ed);
    EXPECT_TRUE(is_equal_difference_criterion(cc(3888, 5, 2187)).is_ed);
}

TEST(EdSet, DefinitionCheck) {
    EXPECT_TRUE(is_equal_difference_set(std::vector<u64>{1, 9, 17, 25}, 32));
    EXPECT_FALSE(is_equal_difference_set(std::vector<u64>{1, 3, 9, 11}, 32));
    EXPECT_TRUE(is_equal_difference_set(std::vector<u64>{5}, 32));
    EXPECT_FALSE(is_equal_difference_set(std::vector<u64>{1, 2, 3}, 32));  // 3 does not divide 32
}

// Both sides of the criterion and the definition agree, prime-power q included.
TEST(EdCriterion, EquivalenceSweep) {
    for (u64 q : {2, 3, 5, 7, 9, 11, 13})
        for (u64 n = 1; n <= 512; ++n) {
            if (std::gcd(n, q) != 1) continue;
            bool all = true;
            for_each_coset(CosetContext::make(n, q), [&](CyclotomicCoset&& c) {
                const bool d = is_equal_difference_direct(c).is_ed;
                ASSERT_EQ(d, is_equal_difference_criterion(c).is_ed) << "q=" << q << " n=" << n << " " << c.leader();
                ASSERT_EQ(d, oracle::is_ap(c.elements(), n));
                if (d) {
                    EXPECT_EQ(is_equal_difference_direct(c).common_difference,
                              is_equal_difference_criterion(c).common_difference);
                }
                all = all && d;
            });
            const auto ctx = CosetContext::make(n, q);
            EXPECT_EQ(all_cosets_ed(ctx).all_ed, all) << "q=" << q << " n=" << n;
            if (n > 1) {
                EXPECT_EQ(is_equal_difference_direct(coset_of(ctx, 1)).is_ed, all);
            }
        }
}

TEST(AllCosetsEd, ReferenceValues) {
    EXPECT_TRUE(all_cosets_ed(CosetContext::make(32, 5)).all_ed);
    const auto v = all_cosets_ed(CosetContext::make(32, 3));
    EXPECT_FALSE(v.all_ed);
    EXPECT_TRUE(v.radical_divides);
    EXPECT_FALSE(v.mod4_condition);
    EXPECT_NE(v.reason.find("(ii)"), std::string::npos);
    EXPECT_TRUE(all_cosets_ed(CosetContext::make(1, 2)).all_ed);
    const auto w = all_cosets_ed(CosetContext::make(9, 2));
    EXPECT_FALSE(w.radical_divides);
    EXPECT_NE(w.reason.find("(i)"), std::string::npos);
}

TEST(Omega, ReferenceValues) {
    EXPECT_EQ(omega_gamma(cc(3888, 5, 1001)), 2u);
    EXPECT_EQ(omega_gamma(cc(3888, 5, 2187)), 1u);
    EXPECT_EQ(omega_gamma(cc(32, 3, 1)), 2u);
    EXPECT_EQ(omega_gamma(cc(32, 3, 0)), 1u);
    EXPECT_EQ(omega_global(CosetContext::make(3888, 5)), 2u);
    EXPECT_EQ(omega_global(CosetContext::make(32, 5)), 1u);
    EXPECT_EQ(omega_global(CosetContext::make(1, 5)), 1u);
}

TEST(Omega, GlobalEqualsPrimitiveCoset) {
    for (u64 q : {2, 3, 4, 5, 7, 9, 11, 13})
        for (u64 n = 2; n <= 400; ++n) {
            if (std::gcd(n, q) != 1) continue;
            const auto ctx = CosetContext::make(n, q);
            EXPECT_EQ(omega_global(ctx), omega_gamma(coset_of(ctx, 1)));
        }
}

TEST(Decomposition, ReferenceValues) {
    const auto c = cc(32, 3, 1);
    const auto d = cyclotomic_decomposition(c, 2);
    ASSERT_EQ(d.components.size(), 2u);
    EXPECT_EQ(d.components[0].elements(), (std::vector<u64>{1, 9, 17, 25}));
    EXPECT_EQ(d.components[1].elements(), (std::vector<u64>{3, 11, 19, 27}));
    EXPECT_TRUE(d.components[1].contains(3));
    const auto one = cyclotomic_decomposition(c, 1);
    ASSERT_EQ(one.components.size(), 1u);
    EXPECT_EQ(one.components[0].elements(), c.elements());
    const auto e = cyclotomic_decomposition(cc(32, 5, 1), 8);
    EXPECT_EQ(e.components.size(), 8u);
    for (const auto& comp : e.components) EXPECT_EQ(comp.size(), 1u);
    EXPECT_THROW(cyclotomic_decomposition(c, 0), std::invalid_argument);
}

TEST(Decomposition, Layout) {
    for (u64 q : {2, 3, 5, 7})
        for (u64 n = 1; n <= 150; ++n) {
            if (std::gcd(n, q) != 1) continue;
            for (const auto& c : enumerate_cosets(CosetContext::make(n, q)))
                for (u64 t = 1; t <= c.size() + 2; ++t) {
                    const auto d = cyclotomic_decomposition(c, t);
                    EXPECT_EQ(d.t_prime, std::gcd(t, c.size()));
                    std::vector<u64> all;
                    u64 x = c.representative();
                    for (const auto& comp : d.components) {
                        EXPECT_EQ(comp.size(), c.size() / d.t_prime);
                        EXPECT_TRUE(comp.contains(x));
                        x = x * q % n;
                        all.insert(all.end(), comp.elements().begin(), comp.elements().end());
                    }
                    std::sort(all.begin(), all.end());
                    EXPECT_EQ(all, c.elements());
                    // all components ED exactly when omega_gamma | gcd(t, tau)
                    if (c.size() <= 24) {
                        EXPECT_EQ(d.all_ed(), d.t_prime % omega_gamma(c) == 0);
                    }
                }
        }
}

TEST(CoarsestMer, ReferenceValues) {
    const auto d = coarsest_mer(cc(32, 3, 1));
    EXPECT_EQ(d.t, 2u);
    EXPECT_EQ(d.canonical_blocks(), (std::vector<std::vector<u64>>{{1, 9, 17, 25}, {3, 11, 19, 27}}));
    EXPECT_EQ(d.component_status[0].common_difference, u64{8});
    const auto e = coarsest_mer(cc(32, 5, 1));
    ASSERT_EQ(e.components.size(), 1u);
    EXPECT_EQ(e.component_status[0].common_difference, u64{4});
    EXPECT_EQ(coarsest_mer(cc(32, 3, 0)).components.size(), 1u);
}

// Each coarsest component is a longest progression inside the coset with its step.
TEST(CoarsestMer, ComponentsAreMaximalProgressions) {
    for (u64 q : {3, 5, 7})
        for (u64 n = 1; n <= 200; ++n) {
            if (std::gcd(n, q) != 1) continue;
            for (const auto& c : enumerate_cosets(CosetContext::make(n, q))) {
                const auto d = coarsest_mer(c);
                for (const auto& comp : d.components) {
                    // no progression in c with more terms than the component
                    for (u64 s = comp.size() + 1; s <= c.size(); ++s) {
                        if (n % s != 0) continue;
                        for (u64 x : c.elements()) {
                            bool inside = true;
                            for (u64 i = 0; i < s && inside; ++i) inside = c.contains((x + i * (n / s)) % n);
                            EXPECT_FALSE(inside) << "q=" << q << " n=" << n << " leader " << c.leader();
                        }
                    }
                }
            }
        }
}

TEST(Sigma, ReferenceValues) {
    EXPECT_EQ(mer_set(cc(32, 5, 1)).sigma.members, (std::vector<u64>{1, 2, 4, 8}));
    EXPECT_EQ(mer_set(cc(32, 5, 1)).representations.size(), 4u);
    EXPECT_EQ(mer_set(cc(32, 3, 1)).sigma.members, (std::vector<u64>{2, 4, 8}));
    EXPECT_EQ(mer_set(cc(32, 3, 0)).sigma.members, (std::vector<u64>{1}));
}

TEST(Coarser, ReferenceValues) {
    const auto c = cc(32, 3, 1);
    const auto d2 = cyclotomic_decomposition(c, 2), d4 = cyclotomic_decomposition(c, 4),
               d8 = cyclotomic_decomposition(c, 8);
    EXPECT_TRUE(is_coarser(d2, d4));
    EXPECT_TRUE(is_coarser(d4, d4));
    EXPECT_FALSE(is_coarser(d8, d2));
    EXPECT_THROW(is_coarser(d2, cyclotomic_decomposition(cc(32, 3, 5), 2)), std::invalid_argument);
}

TEST(Coarser, AntiOrderLaw) {
    for (u64 q : {2, 3, 5, 7, 11, 13})
        for (u64 n = 1; n <= 120; ++n) {
            if (std::gcd(n, q) != 1) continue;
            for (const auto& c : enumerate_cosets(CosetContext::make(n, q))) {
                const auto ms = mer_set(c);
                EXPECT_EQ(ms.sigma.members.front(), omega_gamma(c));
                EXPECT_EQ(ms.sigma.members.back(), c.size());
                const auto coarse = coarsest_mer(c);
                for (const auto& [t1, a] : ms.representations) {
                    EXPECT_TRUE(is_coarser(coarse, a));
                    for (const auto& [t2, b] : ms.representations) EXPECT_EQ(is_coarser(a, b), t2 % t1 == 0);
                }
            }
        }
}

TEST(ValidateEd, ReferenceValues) {
    const auto c = cc(32, 3, 1);
    const auto v = validate_ed_decomposition(c, {{1, 9, 17, 25}, {3, 11, 19, 27}});
    EXPECT_TRUE(v.valid);
    ASSERT_EQ(v.blocks.size(), 2u);
    for (const auto& b : v.blocks) EXPECT_EQ(b.t, 2u);
    Partition singles;
    for (u64 x : c.elements()) singles.push_back({x});
    EXPECT_TRUE(validate_ed_decomposition(c, singles).valid);
    const auto bad = validate_ed_decomposition(c, {{1, 3, 9, 11, 17, 19, 25, 27}});
    EXPECT_FALSE(bad.valid);
}

TEST(ValidateEd, RejectsNonPartitions) {
    const auto c = cc(32, 3, 1);
    EXPECT_THROW(validate_ed_decomposition(c, {{1, 9, 17, 25}, {3, 11, 19}}), std::invalid_argument);
    EXPECT_THROW(validate_ed_decomposition(c, {{1, 9, 17, 25}, {1, 3, 11, 19, 27}}), std::invalid_argument);
    EXPECT_THROW(validate_ed_decomposition(c, {{1, 9, 17, 25}, {3, 11, 19, 27, 2}}), std::invalid_argument);
    EXPECT_THROW(validate_ed_decomposition(c, {{1, 9, 17, 25}, {3, 11, 19, 27}, {}}), std::invalid_argument);
}

TEST(EnumerateEd, ReferenceValues) {
    const auto single = enumerate_ed_decompositions(cc(32, 3, 0));
    EXPECT_EQ(single.size(), 1u);
    const auto c = cc(32, 3, 1);
    const auto all = enumerate_ed_decompositions(c);
    for (const auto& p : all) EXPECT_TRUE(validate_ed_decomposition(c, p).valid);
    const std::set<Partition> s(all.begin(), all.end());
    EXPECT_TRUE(s.count(canonical_partition({{1, 9, 17, 25}, {3, 11, 19, 27}})));
    Partition singles;
    for (u64 x : c.elements()) singles.push_back({x});
    EXPECT_TRUE(s.count(canonical_partition(singles)));
    EXPECT_THROW(enumerate_ed_decompositions(cc(3888, 5, 1001)), std::invalid_argument);
}

TEST(EnumerateEd, MatchesSetPartitionOracle) {
    for (u64 q : {2, 3, 5, 7, 9})
        for (u64 n = 1; n <= 130; ++n) {
            if (std::gcd(n, q) != 1) continue;
            for (const auto& c : enumerate_cosets(CosetContext::make(n, q))) {
                if (c.size() > 10) continue;
                const auto mine = enumerate_ed_decompositions(c);
                ASSERT_EQ(mine, oracle::ap_partitions(c.elements(), n)) << "q=" << q << " n=" << n;
                for (const auto& p : mine) {
                    const auto v = validate_ed_decomposition(c, p);
                    EXPECT_TRUE(v.valid);
                    for (const auto& b : v.blocks) EXPECT_EQ(b.t % omega_gamma(c), 0u);
                }
            }
        }
}

TEST(GlobalMer, ReferenceValues) {
    const auto g = global_mer(CosetContext::make(32, 3), 2);
    EXPECT_EQ(g.decompositions.size(), 9u);
    for (const auto& d : g.decompositions) EXPECT_TRUE(d.all_ed());
    const auto h = global_mer(CosetContext::make(32, 5), 1);
    for (const auto& d : h.decompositions) EXPECT_EQ(d.components.size(), 1u);
    try {
        global_mer(CosetContext::make(32, 3), 3);
        FAIL();
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("does not divide"), std::string::npos);
    }
}
