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

#ifndef CYCLO_COSETS_HPP
#define CYCLO_COSETS_HPP

#include <algorithm>
#include <concepts>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "numtheory.hpp"

namespace cyclo {

/// Modulus n and base q = p^k with gcd(n, q) = 1.
///
/// The base is held symbolically as (p, k) so that powers q^t never overflow; every
/// combinatorial quantity only needs q modulo a divisor of n (or modulo 4 when 4 | n).
class CosetContext {
   public:
    static constexpr u64 max_modulus = u64{1} << 62;

    static CosetContext make(u64 n, u64 q) {
        if (q < 2) throw std::invalid_argument("q must be a prime power >= 2, got " + std::to_string(q));
        const auto f = factorize(q);
        if (f.size() != 1) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
        return from_prime_power(n, f.factors()[0].prime, f.factors()[0].exponent);
    }

    static CosetContext from_prime_power(u64 n, u64 p, u64 k) {
        if (n == 0) throw std::invalid_argument("n must be positive");
        if (n >= max_modulus) throw std::invalid_argument("n must be below 2^62");
        if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
        if (k == 0) throw std::invalid_argument("q must be a prime power >= 2");
        if (n % p == 0)
            throw std::invalid_argument("gcd(n, q) != 1: " + std::to_string(p) + " divides n = " + std::to_string(n));
        return CosetContext(n, p, k);
    }

    u64 n() const noexcept { return n_; }
    u64 characteristic() const noexcept { return p_; }
    u64 exponent() const noexcept { return k_; }
    /// q mod n, the multiplier that generates the orbits.
    u64 multiplier() const noexcept { return mult_; }
    u64 q_mod(u64 m) const { return pow_mod(p_, k_, m); }
    bool q_is_prime() const noexcept { return k_ == 1; }

    /// q itself when it fits in 64 bits.
    std::optional<u64> q() const {
        try {
            return checked_pow(p_, k_);
        } catch (const std::overflow_error&) {
            return std::nullopt;
        }
    }

    std::string q_string() const {
        if (auto v = q()) return std::to_string(*v);
        return std::to_string(p_) + "^" + std::to_string(k_);
    }

    /// Context with base q^t over the same modulus.
    CosetContext power(u64 t) const {
        if (t == 0) throw std::invalid_argument("extension exponent t must be positive");
        return CosetContext(n_, p_, checked_mul(k_, t));
    }

    /// Same base over a different modulus (used for primitive forms).
    CosetContext with_modulus(u64 m) const { return from_prime_power(m, p_, k_); }

    friend bool operator==(const CosetContext& a, const CosetContext& b) noexcept {
        return a.n_ == b.n_ && a.p_ == b.p_ && a.k_ == b.k_;
    }

   private:
    CosetContext(u64 n, u64 p, u64 k) : n_(n), p_(p), k_(k), mult_(pow_mod(p, k, n)) {}

    u64 n_;
    u64 p_;
    u64 k_;
    u64 mult_;
};

template <std::integral T>
u64 reduce_residue(T value, u64 n) {
    if constexpr (std::is_signed_v<T>)
        return reduce_signed(static_cast<i64>(value), n);
    else
        return static_cast<u64>(value) % n;
}

/// The orbit {g, g q, g q^2, ...} modulo n. Equality compares context and element set only;
/// the representative used for construction is kept for algorithms that start from it.
class CyclotomicCoset {
   public:
    const CosetContext& context() const noexcept { return ctx_; }
    const std::vector<u64>& elements() const noexcept { return elements_; }
    u64 size() const noexcept { return elements_.size(); }
    u64 leader() const noexcept { return elements_.front(); }
    u64 representative() const noexcept { return gamma_; }
    u64 n_gamma() const noexcept { return n_gamma_; }
    u64 gamma_tilde() const noexcept { return gamma_tilde_; }
    bool is_primitive() const noexcept { return n_gamma_ == ctx_.n(); }
    bool contains(u64 x) const { return std::binary_search(elements_.begin(), elements_.end(), x); }

    /// Elements in orbit order gamma, gamma q, gamma q^2, ...
    std::vector<u64> orbit() const {
        std::vector<u64> r;
        r.reserve(elements_.size());
        u64 x = gamma_;
        do {
            r.push_back(x);
            x = mul_mod(x, ctx_.multiplier(), ctx_.n());
        } while (x != gamma_);
        return r;
    }

    friend bool operator==(const CyclotomicCoset& a, const CyclotomicCoset& b) {
        return a.ctx_ == b.ctx_ && a.elements_ == b.elements_;
    }

   private:
    template <std::integral T>
    friend CyclotomicCoset coset_of(const CosetContext& ctx, T gamma);

    CyclotomicCoset(const CosetContext& ctx, u64 gamma) : ctx_(ctx), gamma_(gamma) {
        const u64 n = ctx.n();
        u64 x = gamma;
        do {
            elements_.push_back(x);
            x = mul_mod(x, ctx.multiplier(), n);
        } while (x != gamma);
        std::sort(elements_.begin(), elements_.end());
        const u64 g = std::gcd(gamma, n);
        n_gamma_ = n / g;
        gamma_tilde_ = (gamma / g) % n_gamma_;
        if (multiplicative_order(ctx.multiplier(), n_gamma_) != elements_.size())
            throw TheoryViolation("coset size differs from ord_{n_gamma}(q)");
    }

    CosetContext ctx_;
    u64 gamma_;
    std::vector<u64> elements_;
    u64 n_gamma_ = 1;
    u64 gamma_tilde_ = 0;
};

/// q-cyclotomic coset of gamma (any integer, reduced mod n).
template <std::integral T>
CyclotomicCoset coset_of(const CosetContext& ctx, T gamma) {
    return CyclotomicCoset(ctx, reduce_residue(gamma, ctx.n()));
}

/// Upper bound on n for routines that keep an n-entry visited mask.
inline constexpr u64 default_enumeration_limit = u64{1} << 32;

/// Visits every coset in leader order without materializing the full list.
template <class Fn>
void for_each_coset(const CosetContext& ctx, Fn&& fn, u64 limit = default_enumeration_limit) {
    const u64 n = ctx.n();
    if (n > limit)
        throw ResourceLimitExceeded("coset enumeration for n = " + std::to_string(n) + " exceeds the limit " +
                                    std::to_string(limit));
    std::vector<bool> seen(n, false);
    for (u64 g = 0; g < n; ++g) {
        if (seen[g]) continue;
        auto c = coset_of(ctx, g);
        for (u64 x : c.elements()) seen[x] = true;
        fn(std::move(c));
    }
}

/// All cosets modulo n ordered by leader; they partition {0, ..., n-1}.
inline std::vector<CyclotomicCoset> enumerate_cosets(const CosetContext& ctx,
                                                     u64 limit = default_enumeration_limit) {
    std::vector<CyclotomicCoset> out;
    for_each_coset(ctx, [&](CyclotomicCoset&& c) { out.push_back(std::move(c)); }, limit);
    return out;
}

/// The coset of gamma / gcd(gamma, n) modulo n / gcd(gamma, n).
inline CyclotomicCoset primitive_form(const CyclotomicCoset& c) {
    const auto ctx = c.context().with_modulus(c.n_gamma());
    auto r = coset_of(ctx, c.gamma_tilde());
    if (r.size() != c.size()) throw TheoryViolation("primitive form changed the coset size");
    return r;
}

}  // namespace cyclo

#endif  // CYCLO_COSETS_HPP
