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

#include <random>
#include <sstream>
#include <vector>

#include "cyclo/fields.hpp"
#include "cyclo/polynomial.hpp"
#include "oracles.hpp"

using namespace cyclo;

TEST(DensePoly, Normalization) {
    const DensePoly z(3, {0, 0});
    EXPECT_TRUE(z.is_zero());
    EXPECT_EQ(z.degree(), -1);
    const DensePoly f(3, {4, 0, 5, 0, 0});
    EXPECT_EQ(f.coefficients(), (std::vector<u64>{1, 0, 2}));
    EXPECT_EQ(f.degree(), 2);
    EXPECT_THROW(DensePoly(4, {1}), std::invalid_argument);
}

TEST(DensePoly, ReferenceArithmetic) {
    const DensePoly a(3, {1, 1}), b(3, {2, 1});  // X+1, X-1
    EXPECT_EQ(a * b, DensePoly(3, {2, 0, 1}));
    EXPECT_EQ(poly_gcd(DensePoly::x_pow_minus_one(3, 8), DensePoly::x_pow_minus_one(3, 2)),
              DensePoly::x_pow_minus_one(3, 2));
    EXPECT_TRUE(is_irreducible(DensePoly(3, {1, 0, 1})));
    EXPECT_TRUE(is_irreducible_fast(DensePoly(3, {1, 0, 1})));
    EXPECT_FALSE(is_irreducible(DensePoly(5, {1, 0, 1})));
    EXPECT_THROW(a * DensePoly(5, {1}), std::invalid_argument);
    EXPECT_THROW(a % DensePoly(3), std::domain_error);
}

TEST(DensePoly, DivisionIdentity) {
    std::mt19937_64 gen(505);
    for (int i = 0; i < 500; ++i) {
        const u64 p = std::vector<u64>{2, 3, 5, 7, 65537, 2147483647}[gen() % 6];
        std::vector<u64> ca(gen() % 20), cb(1 + gen() % 10);
        for (auto& x : ca) x = gen() % p;
        for (auto& x : cb) x = gen() % p;
        cb.back() = 1 + gen() % (p - 1);
        const DensePoly a(p, ca), b(p, cb);
        const auto [qt, r] = divmod(a, b);
        EXPECT_EQ(qt * b + r, a);
        EXPECT_LT(r.degree(), b.degree());
        EXPECT_EQ(DensePoly(p, oracle::mul(a.coefficients(), b.coefficients(), p)), a * b);
    }
}

TEST(DensePoly, IrreducibilityAgreesWithTrialDivision) {
    for (u64 p : {2, 3, 5})
        for (int deg = 1; deg <= (p == 2 ? 8 : 4); ++deg) {
            u64 count = 1;
            for (int i = 0; i < deg; ++i) count *= p;
            for (u64 code = 0; code < count; ++code) {
                std::vector<u64> c(deg + 1);
                u64 x = code;
                for (int i = 0; i < deg; ++i) {
                    c[i] = x % p;
                    x /= p;
                }
                c[deg] = 1;
                const DensePoly f(p, c);
                const bool ref = oracle::irreducible_by_trial(c, p);
                ASSERT_EQ(is_irreducible(f), ref) << f;
                ASSERT_EQ(is_irreducible_fast(f), ref) << f;
            }
        }
}

TEST(DensePoly, FrobeniusPower) {
    // X^(p^m) = X mod an irreducible of degree m
    const DensePoly f(3, {2, 2, 0, 1});  // X^3 + 2X + 2
    ASSERT_TRUE(is_irreducible(f));
    EXPECT_EQ(frobenius_power(f, 3), DensePoly(3, {0, 1}));
    EXPECT_NE(frobenius_power(f, 1), DensePoly(3, {0, 1}));
}

TEST(DensePoly, ProductAndPrinting) {
    const auto prod = poly_product({DensePoly(5, {4, 1}), DensePoly(5, {1, 1})}, 5);
    EXPECT_EQ(prod, DensePoly(5, {4, 0, 1}));
    EXPECT_EQ(poly_product({}, 5), DensePoly(5, {1}));
    std::ostringstream os;
    os << DensePoly(3, {1, 0, 1});
    EXPECT_EQ(os.str(), "X^2 + 1");
}

TEST(DensePoly, PowModBigExponent) {
    const DensePoly m(7, {3, 1, 1});
    const DensePoly x(7, {0, 1});
    BigInt e = BigInt(1) << 100;
    // x^(2^100) by 100 squarings
    DensePoly acc = x;
    for (int i = 0; i < 100; ++i) acc = mul_mod_poly(acc, acc, m);
    EXPECT_EQ(pow_mod_poly(x, e, m), acc);
}
