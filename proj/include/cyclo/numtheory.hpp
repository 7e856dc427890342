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

#ifndef CYCLO_NUMTHEORY_HPP
#define CYCLO_NUMTHEORY_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cyclo {

using u64 = std::uint64_t;
using i64 = std::int64_t;
__extension__ typedef unsigned __int128 u128;
__extension__ typedef __int128 i128;
using BigInt = boost::multiprecision::cpp_int;

/// Raised when a computed object contradicts a proven identity. Never expected to fire.
class TheoryViolation : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

/// Raised when a requested computation exceeds a configured resource bound.
class ResourceLimitExceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

inline u64 checked_mul(u64 a, u64 b) {
    u64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("64-bit multiplication overflow");
    return r;
}

inline u64 checked_add(u64 a, u64 b) {
    u64 r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("64-bit addition overflow");
    return r;
}

inline u64 checked_pow(u64 base, u64 exp) {
    u64 r = 1;
    for (u64 i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

inline u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

inline u64 pow_mod(u64 base, u64 exp, u64 m) {
    if (m == 1) return 0;
    u64 r = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return r;
}

/// Residue of a signed integer in [0, m).
inline u64 reduce_signed(i64 value, u64 m) {
    i128 r = static_cast<i128>(value) % static_cast<i128>(m);
    if (r < 0) r += m;
    return static_cast<u64>(r);
}

namespace detail {

inline bool miller_rabin_witness(u64 n, u64 a, u64 d, unsigned s) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned r = 1; r < s; ++r) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return false;
    }
    return true;
}

}  // namespace detail

/// Deterministic for all 64-bit inputs (first twelve prime bases).
inline bool is_prime(u64 n) {
    if (n < 2) return false;
    static constexpr u64 small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (u64 p : small) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : small) {
        if (detail::miller_rabin_witness(n, a, d, s)) return false;
    }
    return true;
}

struct PrimeFactor {
    u64 prime;
    unsigned exponent;
    friend bool operator==(const PrimeFactor&, const PrimeFactor&) = default;
};

/// Exact factorization n = prod p_i^e_i with strictly increasing primes. The integer 1 has no factors.
class PrimeFactorization {
   public:
    PrimeFactorization() = default;
    explicit PrimeFactorization(std::vector<PrimeFactor> factors) : factors_(std::move(factors)) {
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (factors_[i].exponent == 0 || !is_prime(factors_[i].prime))
                throw std::invalid_argument("factorization entries must be primes with positive exponent");
            if (i > 0 && factors_[i - 1].prime >= factors_[i].prime)
                throw std::invalid_argument("factorization primes must be strictly increasing");
        }
    }

    const std::vector<PrimeFactor>& factors() const& noexcept { return factors_; }
    std::vector<PrimeFactor> factors() && noexcept { return std::move(factors_); }
    auto begin() const noexcept { return factors_.begin(); }
    auto end() const noexcept { return factors_.end(); }
    std::size_t size() const noexcept { return factors_.size(); }
    bool empty() const noexcept { return factors_.empty(); }

    u64 value() const {
        u64 r = 1;
        for (const auto& f : factors_) r = checked_mul(r, checked_pow(f.prime, f.exponent));
        return r;
    }

    u64 radical() const {
        u64 r = 1;
        for (const auto& f : factors_) r *= f.prime;
        return r;
    }

    unsigned exponent_of(u64 prime) const noexcept {
        for (const auto& f : factors_)
            if (f.prime == prime) return f.exponent;
        return 0;
    }

    std::vector<u64> primes() const {
        std::vector<u64> r;
        r.reserve(factors_.size());
        for (const auto& f : factors_) r.push_back(f.prime);
        return r;
    }

    /// All positive divisors, sorted ascending.
    std::vector<u64> divisors() const {
        std::vector<u64> ds{1};
        for (const auto& f : factors_) {
            const std::size_t count = ds.size();
            u64 pk = 1;
            for (unsigned e = 1; e <= f.exponent; ++e) {
                pk *= f.prime;
                for (std::size_t i = 0; i < count; ++i) ds.push_back(ds[i] * pk);
            }
        }
        std::sort(ds.begin(), ds.end());
        return ds;
    }

    friend bool operator==(const PrimeFactorization&, const PrimeFactorization&) = default;

   private:
    std::vector<PrimeFactor> factors_;
};

namespace detail {

// Brent's variant of Pollard rho with a fixed sequence of increments, so results are reproducible.
inline u64 pollard_brent(u64 n) {
    if (n % 2 == 0) return 2;
    for (u64 c = 1;; ++c) {
        auto f = [&](u64 x) { return (mul_mod(x, x, n) + c) % n; };
        u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
        const u64 block = 128;
        for (u64 r = 1; g == 1; r <<= 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = f(y);
            for (u64 k = 0; k < r && g == 1; k += block) {
                ys = y;
                for (u64 i = 0; i < std::min(block, r - k); ++i) {
                    y = f(y);
                    q = mul_mod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
            }
        }
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

inline void factor_into(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    const u64 d = pollard_brent(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace detail

/// Trial division by small primes, then Pollard-Brent on the cofactor.
inline PrimeFactorization factorize(u64 n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be positive");
    std::vector<u64> primes;
    for (u64 p : {2ULL, 3ULL, 5ULL}) {
        while (n % p == 0) {
            primes.push_back(p);
            n /= p;
        }
    }
    // wheel mod 30
    static constexpr u64 steps[] = {4, 2, 4, 2, 4, 6, 2, 6};
    u64 p = 7;
    for (std::size_t i = 0; p <= 1000 && p * p <= n; p += steps[i++ % 8]) {
        while (n % p == 0) {
            primes.push_back(p);
            n /= p;
        }
    }
    detail::factor_into(n, primes);
    std::sort(primes.begin(), primes.end());

    std::vector<PrimeFactor> factors;
    for (u64 q : primes) {
        if (!factors.empty() && factors.back().prime == q)
            ++factors.back().exponent;
        else
            factors.push_back({q, 1});
    }
    return PrimeFactorization(std::move(factors));
}

inline u64 radical(u64 n) { return factorize(n).radical(); }

/// Largest e with ell^e | n.
inline unsigned padic_valuation(u64 ell, u64 n) {
    if (!is_prime(ell)) throw std::invalid_argument("padic_valuation: " + std::to_string(ell) + " is not prime");
    if (n == 0) throw std::invalid_argument("padic_valuation: n must be positive");
    unsigned e = 0;
    while (n % ell == 0) {
        n /= ell;
        ++e;
    }
    return e;
}

inline unsigned padic_valuation(u64 ell, const BigInt& n) {
    if (!is_prime(ell)) throw std::invalid_argument("padic_valuation: " + std::to_string(ell) + " is not prime");
    if (n == 0) throw std::invalid_argument("padic_valuation: n must be nonzero");
    BigInt m = boost::multiprecision::abs(n);
    unsigned e = 0;
    while (m % ell == 0) {
        m /= ell;
        ++e;
    }
    return e;
}

inline u64 euler_phi(const PrimeFactorization& f) {
    u64 r = 1;
    for (const auto& [p, e] : f.factors()) r = checked_mul(r, checked_mul(checked_pow(p, e - 1), p - 1));
    return r;
}

/// Exponent of the unit group (Z/nZ)*.
inline u64 carmichael_lambda(const PrimeFactorization& f) {
    u64 r = 1;
    for (const auto& [p, e] : f.factors()) {
        u64 l;
        if (p == 2)
            l = e <= 2 ? (u64{1} << (e - 1)) : (u64{1} << (e - 2));
        else
            l = checked_mul(checked_pow(p, e - 1), p - 1);
        r = std::lcm(r, l);
    }
    return r;
}

/// Smallest r >= 1 with m^r = 1 (mod n); descends from the group exponent over its prime factors.
inline u64 multiplicative_order(u64 m, u64 n) {
    if (n == 0) throw std::invalid_argument("multiplicative_order: modulus must be positive");
    if (n == 1) return 1;
    m %= n;
    if (std::gcd(m, n) != 1)
        throw std::invalid_argument("multiplicative_order: gcd(" + std::to_string(m) + ", " + std::to_string(n) +
                                    ") != 1");
    u64 order = carmichael_lambda(factorize(n));
    for (const auto& [ell, e] : factorize(order).factors()) {
        (void)e;
        while (order % ell == 0 && pow_mod(m, order / ell, n) == 1) order /= ell;
    }
    return order;
}

inline u64 multiplicative_order_signed(i64 m, u64 n) {
    if (n == 0) throw std::invalid_argument("multiplicative_order: modulus must be positive");
    return multiplicative_order(reduce_signed(m, n), n);
}

/// v_ell(m^d - 1) by the lift-the-exponent closed forms; m^d is never formed.
inline unsigned lte_valuation(u64 ell, i64 m, u64 d) {
    if (!is_prime(ell)) throw std::invalid_argument("lte_valuation: " + std::to_string(ell) + " is not prime");
    if (d == 0) throw std::invalid_argument("lte_valuation: d must be positive");
    const i128 m_minus = static_cast<i128>(m) - 1;
    const i128 m_plus = static_cast<i128>(m) + 1;
    auto val = [](u64 l, i128 x) {
        unsigned e = 0;
        if (x < 0) x = -x;
        while (x % l == 0) {
            x /= l;
            ++e;
        }
        return e;
    };
    if (ell != 2) {
        if (m_minus == 0) throw std::invalid_argument("lte_valuation: m = 1 gives m^d - 1 = 0");
        if (m_minus % static_cast<i128>(ell) != 0)
            throw std::invalid_argument("lte_valuation: hypothesis ell | m - 1 fails");
        return val(ell, m_minus) + padic_valuation(ell, d);
    }
    if (m % 2 == 0) throw std::invalid_argument("lte_valuation: hypothesis m odd fails for ell = 2");
    const u64 m_mod4 = reduce_signed(m, 4);
    if (m_mod4 == 1) {
        if (m_minus == 0) throw std::invalid_argument("lte_valuation: m = 1 gives m^d - 1 = 0");
        return val(2, m_minus) + padic_valuation(2, d);
    }
    if (d % 2 == 1) return 1;
    if (m_plus == 0) throw std::invalid_argument("lte_valuation: m = -1 with d even gives m^d - 1 = 0");
    return val(2, m_plus) + padic_valuation(2, d);
}

}  // namespace cyclo

#endif  // CYCLO_NUMTHEORY_HPP
