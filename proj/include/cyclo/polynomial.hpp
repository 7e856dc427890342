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

#ifndef CYCLO_POLYNOMIAL_HPP
#define CYCLO_POLYNOMIAL_HPP

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "numtheory.hpp"

namespace cyclo {

/// Polynomial over F_p, coefficients lowest degree first with no trailing zeros.
class DensePoly {
   public:
    explicit DensePoly(u64 p) : p_(p) { check_characteristic(p); }
    DensePoly(u64 p, std::vector<u64> coeffs) : p_(p), c_(std::move(coeffs)) {
        check_characteristic(p);
        for (auto& x : c_) x %= p_;
        normalize();
    }
    DensePoly(u64 p, std::initializer_list<u64> coeffs) : DensePoly(p, std::vector<u64>(coeffs)) {}

    static DensePoly monomial(u64 p, u64 coeff, std::size_t degree) {
        std::vector<u64> c(degree + 1, 0);
        c[degree] = coeff;
        return DensePoly(p, std::move(c));
    }

    /// X^n - 1.
    static DensePoly x_pow_minus_one(u64 p, std::size_t n) {
        std::vector<u64> c(n + 1, 0);
        c[0] = p - 1;
        c[n] = (c[n] + 1) % p;
        return DensePoly(p, std::move(c));
    }

    u64 characteristic() const noexcept { return p_; }
    const std::vector<u64>& coefficients() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    u64 coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
    u64 leading() const noexcept { return c_.empty() ? 0 : c_.back(); }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }

    std::size_t nonzero_terms() const noexcept {
        return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](u64 x) { return x != 0; }));
    }

    u64 evaluate(u64 x) const {
        u64 r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = (mul_mod(r, x % p_, p_) + *it) % p_;
        return r;
    }

    friend bool operator==(const DensePoly&, const DensePoly&) = default;

    DensePoly& operator+=(const DensePoly& o) {
        same_field(o);
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = (c_[i] + o.c_[i]) % p_;
        normalize();
        return *this;
    }
    DensePoly& operator-=(const DensePoly& o) {
        same_field(o);
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = (c_[i] + p_ - o.c_[i]) % p_;
        normalize();
        return *this;
    }
    friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
    friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }

    friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
        a.same_field(b);
        if (a.is_zero() || b.is_zero()) return DensePoly(a.p_);
        std::vector<u64> r(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = (r[i + j] + mul_mod(a.c_[i], b.c_[j], a.p_)) % a.p_;
        }
        return DensePoly(a.p_, std::move(r));
    }
    DensePoly& operator*=(const DensePoly& o) { return *this = *this * o; }

    DensePoly scaled(u64 s) const {
        std::vector<u64> r(c_);
        for (auto& x : r) x = mul_mod(x, s % p_, p_);
        return DensePoly(p_, std::move(r));
    }

    /// (quotient, remainder) with deg remainder < deg divisor.
    friend std::pair<DensePoly, DensePoly> divmod(const DensePoly& a, const DensePoly& b) {
        a.same_field(b);
        if (b.is_zero()) throw std::domain_error("polynomial division by zero");
        const u64 p = a.p_;
        std::vector<u64> r = a.c_;
        if (r.size() < b.c_.size()) return {DensePoly(p), a};
        std::vector<u64> q(r.size() - b.c_.size() + 1, 0);
        const u64 inv = inverse_mod(b.leading(), p);
        const std::size_t db = b.c_.size() - 1;
        for (std::size_t i = r.size(); i-- > db;) {
            const u64 coef = mul_mod(r[i], inv, p);
            if (coef == 0) continue;
            q[i - db] = coef;
            for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = (r[i - db + j] + p - mul_mod(coef, b.c_[j], p)) % p;
        }
        r.resize(db);
        return {DensePoly(p, std::move(q)), DensePoly(p, std::move(r))};
    }
    friend DensePoly operator%(const DensePoly& a, const DensePoly& b) { return divmod(a, b).second; }
    friend DensePoly operator/(const DensePoly& a, const DensePoly& b) { return divmod(a, b).first; }

    DensePoly monic() const {
        if (is_zero()) return *this;
        return scaled(inverse_mod(leading(), p_));
    }

    static u64 inverse_mod(u64 a, u64 p) {
        if (a % p == 0) throw std::domain_error("inverse of zero in F_p");
        return pow_mod(a, p - 2, p);
    }

   private:
    static void check_characteristic(u64 p) {
        if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
    }
    void same_field(const DensePoly& o) const {
        if (p_ != o.p_)
            throw std::invalid_argument("characteristic mismatch: " + std::to_string(p_) + " vs " +
                                        std::to_string(o.p_));
    }
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    u64 p_;
    std::vector<u64> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
inline DensePoly poly_gcd(DensePoly a, DensePoly b) {
    while (!b.is_zero()) {
        auto r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

inline DensePoly poly_mod(const DensePoly& a, const DensePoly& m) { return a % m; }

inline DensePoly poly_product(const std::vector<DensePoly>& factors, u64 p) {
    DensePoly r(p, {1});
    for (const auto& f : factors) r *= f;
    return r;
}

inline DensePoly mul_mod_poly(const DensePoly& a, const DensePoly& b, const DensePoly& m) { return (a * b) % m; }

inline DensePoly pow_mod_poly(DensePoly base, BigInt exp, const DensePoly& m) {
    DensePoly r = DensePoly(m.characteristic(), {1}) % m;
    base = base % m;
    while (exp > 0) {
        if (boost::multiprecision::bit_test(exp, 0)) r = mul_mod_poly(r, base, m);
        exp >>= 1;
        if (exp > 0) base = mul_mod_poly(base, base, m);
    }
    return r;
}

/// X^(p^i) mod f.
inline DensePoly frobenius_power(const DensePoly& f, std::size_t i) {
    const u64 p = f.characteristic();
    DensePoly h = DensePoly(p, {0, 1}) % f;
    for (std::size_t k = 0; k < i; ++k) h = pow_mod_poly(h, p, f);
    return h;
}

/// Irreducibility over F_p: gcd(X^(p^i) - X, f) = 1 for i <= deg/2, and f | X^(p^deg) - X.
inline bool is_irreducible(const DensePoly& f) {
    const long m = f.degree();
    if (m < 1) return false;
    if (m == 1) return true;
    const u64 p = f.characteristic();
    const DensePoly x = DensePoly(p, {0, 1}) % f;
    DensePoly h = x;
    for (long i = 1; i <= m; ++i) {
        h = pow_mod_poly(h, p, f);
        if (2 * i <= m && poly_gcd(h - x, f).degree() != 0) return false;
        if (2 * i > m) {
            // remaining powers only needed for the final divisibility check
            for (long k = i + 1; k <= m; ++k) h = pow_mod_poly(h, p, f);
            break;
        }
    }
    return h == x;
}

inline std::ostream& operator<<(std::ostream& os, const DensePoly& f) {
    if (f.is_zero()) return os << "0";
    bool first = true;
    for (std::size_t i = f.coefficients().size(); i-- > 0;) {
        const u64 c = f.coefficients()[i];
        if (c == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || c != 1) os << c;
        if (i >= 1) os << (c != 1 ? "*" : "") << "X";
        if (i >= 2) os << "^" << i;
    }
    return os;
}

}  // namespace cyclo

#endif  // CYCLO_POLYNOMIAL_HPP
