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

#ifndef CYCLO_FIELDS_HPP
#define CYCLO_FIELDS_HPP

#include <algorithm>
#include <limits>
#include <numeric>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cosets.hpp"
#include "equal_difference.hpp"
#include "numtheory.hpp"
#include "polynomial.hpp"

namespace cyclo {

/// Bound on splitting-field size: construction is refused when p^L > 2^max_field_bits.
struct FieldLimits {
    unsigned max_field_bits = 64;
};

using Residue = std::vector<u64>;

namespace detail {

// Arithmetic in F_p[X]/(f) for monic f of degree m >= 1 and p < 2^32.
class ModRing {
   public:
    ModRing(u64 p, const std::vector<u64>& monic_coeffs) : p_(p), m_(monic_coeffs.size() - 1) {
        if (p >= (u64{1} << 32)) throw std::invalid_argument("concrete field arithmetic requires p < 2^32");
        if (monic_coeffs.size() < 2 || monic_coeffs.back() != 1)
            throw std::invalid_argument("modulus must be monic of positive degree");
        lazy_ = p < (u64{1} << 16);
        for (std::size_t j = 0; j < m_; ++j)
            if (monic_coeffs[j] % p != 0) neg_low_.emplace_back(j, (p - monic_coeffs[j] % p) % p);
    }

    u64 p() const noexcept { return p_; }
    std::size_t m() const noexcept { return m_; }

    Residue mul(const Residue& a, const Residue& b) const {
        const std::size_t m = m_;
        std::vector<u64> acc(2 * m - 1, 0);
        if (lazy_) {
            for (std::size_t i = 0; i < m; ++i) {
                const u64 ai = a[i];
                if (ai == 0) continue;
                u64* dst = acc.data() + i;
                for (std::size_t j = 0; j < m; ++j) dst[j] += ai * b[j];
            }
            for (std::size_t i = 2 * m - 1; i-- > m;) {
                const u64 c = acc[i] % p_;
                if (c == 0) continue;
                for (const auto& [j, nf] : neg_low_) acc[i - m + j] += c * nf;
            }
        } else {
            for (std::size_t i = 0; i < m; ++i) {
                if (a[i] == 0) continue;
                for (std::size_t j = 0; j < m; ++j) acc[i + j] = (acc[i + j] + a[i] * b[j] % p_) % p_;
            }
            for (std::size_t i = 2 * m - 1; i-- > m;) {
                const u64 c = acc[i] % p_;
                if (c == 0) continue;
                for (const auto& [j, nf] : neg_low_) acc[i - m + j] = (acc[i - m + j] + c * nf % p_) % p_;
            }
        }
        Residue r(m);
        for (std::size_t i = 0; i < m; ++i) r[i] = acc[i] % p_;
        return r;
    }

    Residue one() const {
        Residue r(m_, 0);
        r[0] = 1 % p_;
        return r;
    }

    Residue pow(Residue base, const BigInt& exp) const {
        Residue r = one();
        if (exp == 0) return r;
        const auto top = boost::multiprecision::msb(exp);
        for (std::size_t i = top + 1; i-- > 0;) {
            r = mul(r, r);
            if (boost::multiprecision::bit_test(exp, i)) r = mul(r, base);
        }
        return r;
    }

    Residue pow(const Residue& base, u64 exp) const { return pow(base, BigInt(exp)); }

    Residue add(const Residue& a, const Residue& b) const {
        Residue r(m_);
        for (std::size_t i = 0; i < m_; ++i) r[i] = (a[i] + b[i]) % p_;
        return r;
    }
    Residue sub(const Residue& a, const Residue& b) const {
        Residue r(m_);
        for (std::size_t i = 0; i < m_; ++i) r[i] = (a[i] + p_ - b[i]) % p_;
        return r;
    }
    Residue neg(const Residue& a) const {
        Residue r(m_);
        for (std::size_t i = 0; i < m_; ++i) r[i] = (p_ - a[i]) % p_;
        return r;
    }

    /// The class of X (for m = 1 this is the root of the linear modulus).
    Residue x() const {
        Residue r(m_, 0);
        if (m_ >= 2)
            r[1] = 1;
        else
            r[0] = neg_low_.empty() ? 0 : neg_low_.front().second;
        return r;
    }

    Residue reduce(const DensePoly& f, const DensePoly& modulus) const {
        const auto red = f % modulus;
        Residue r(m_, 0);
        for (std::size_t i = 0; i < red.coefficients().size(); ++i) r[i] = red.coefficients()[i];
        return r;
    }

   private:
    u64 p_;
    std::size_t m_;
    bool lazy_ = true;
    std::vector<std::pair<std::size_t, u64>> neg_low_;
};

}  // namespace detail

/// Ben-Or irreducibility test using fast modular powers; same contract as is_irreducible.
inline bool is_irreducible_fast(const DensePoly& f) {
    const long m = f.degree();
    if (m < 1) return false;
    if (m == 1) return true;
    if (!f.is_monic()) return is_irreducible_fast(f.monic());
    const u64 p = f.characteristic();
    detail::ModRing ring(p, f.coefficients());
    const Residue x = ring.x();
    Residue h = x;
    for (long i = 1; i <= m; ++i) {
        h = ring.pow(h, p);
        if (2 * i <= m) {
            DensePoly diff(p, ring.sub(h, x));
            if (poly_gcd(diff, f).degree() != 0) return false;
        }
    }
    return h == x;
}

class ExtensionField;
class FieldElement;

namespace detail {

struct FieldData {
    u64 p;
    std::size_t m;
    DensePoly modulus;
    ModRing ring;
    BigInt size;  // p^m
};

}  // namespace detail

/// F_{p^m} as F_p[X]/(f) with f the lexicographically smallest monic irreducible of degree m
/// (coefficient tuples compared constant term first).
class ExtensionField {
   public:
    static ExtensionField build(u64 p, std::size_t m, const FieldLimits& limits = {}) {
        if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
        if (m == 0) throw std::invalid_argument("field degree must be positive");
        check_size(p, m, limits);
        return with_modulus(smallest_irreducible(p, m), limits);
    }

    static ExtensionField with_modulus(const DensePoly& f, const FieldLimits& limits = {}) {
        if (!f.is_monic()) throw std::invalid_argument("field modulus must be monic");
        const auto m = static_cast<std::size_t>(f.degree());
        check_size(f.characteristic(), m, limits);
        if (!is_irreducible_fast(f)) throw std::invalid_argument("field modulus is not irreducible");
        BigInt size = boost::multiprecision::pow(BigInt(f.characteristic()), static_cast<unsigned>(m));
        auto data = std::make_shared<const detail::FieldData>(
            detail::FieldData{f.characteristic(), m, f, detail::ModRing(f.characteristic(), f.coefficients()), size});
        return ExtensionField(std::move(data));
    }

    /// Lexicographically smallest monic irreducible of degree m over F_p.
    static DensePoly smallest_irreducible(u64 p, std::size_t m) {
        if (m == 1) return DensePoly(p, {0, 1});
        // digits[0] is the constant term and the most significant position in the order
        std::vector<u64> digits(m, 0);
        digits[0] = 1;
        for (;;) {
            std::vector<u64> c(digits);
            c.push_back(1);
            DensePoly f(p, std::move(c));
            if (is_irreducible_fast(f)) return f;
            std::size_t i = m;
            while (i-- > 0) {
                if (++digits[i] < p) break;
                digits[i] = 0;
            }
            if (digits[0] == 0) throw TheoryViolation("no irreducible polynomial found");
        }
    }

    u64 characteristic() const noexcept { return data_->p; }
    std::size_t degree() const noexcept { return data_->m; }
    const DensePoly& modulus() const noexcept { return data_->modulus; }
    const BigInt& size() const noexcept { return data_->size; }
    const detail::ModRing& ring() const noexcept { return data_->ring; }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement element(Residue r) const;
    FieldElement from_poly(const DensePoly& f) const;
    FieldElement constant(u64 c) const;
    /// Element with base-p digit expansion of `code` as coefficients (constant term least significant).
    FieldElement from_code(u64 code) const;

    /// Smallest element (by code) of multiplicative order p^m - 1, when p^m - 1 fits in 64 bits.
    std::optional<FieldElement> generator() const;

    friend bool operator==(const ExtensionField& a, const ExtensionField& b) {
        return a.data_ == b.data_ || (a.data_->p == b.data_->p && a.data_->modulus == b.data_->modulus);
    }

    std::shared_ptr<const detail::FieldData> data() const noexcept { return data_; }

    static void check_size(u64 p, std::size_t m, const FieldLimits& limits) {
        const BigInt size = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(m));
        const BigInt bound = BigInt(1) << limits.max_field_bits;
        if (size > bound)
            throw ResourceLimitExceeded("splitting field F_" + std::to_string(p) + "^" + std::to_string(m) +
                                        " exceeds the size guard 2^" + std::to_string(limits.max_field_bits) +
                                        " (L = " + std::to_string(m) + ")");
    }

   private:
    explicit ExtensionField(std::shared_ptr<const detail::FieldData> d) : data_(std::move(d)) {}
    std::shared_ptr<const detail::FieldData> data_;
};

class FieldElement {
   public:
    FieldElement(std::shared_ptr<const detail::FieldData> f, Residue r) : f_(std::move(f)), r_(std::move(r)) {}

    const Residue& residue() const noexcept { return r_; }
    DensePoly as_poly() const { return DensePoly(f_->p, r_); }
    bool is_zero() const noexcept {
        return std::all_of(r_.begin(), r_.end(), [](u64 x) { return x == 0; });
    }
    /// Whether the element lies in the prime field (only the constant coordinate is nonzero).
    bool in_prime_field() const noexcept {
        return f_->m == 1 || std::all_of(r_.begin() + 1, r_.end(), [](u64 x) { return x == 0; });
    }
    u64 prime_field_value() const {
        if (!in_prime_field()) throw std::domain_error("element is not in the prime field");
        return r_[0];
    }

    FieldElement pow(const BigInt& e) const { return {f_, f_->ring.pow(r_, e)}; }
    FieldElement pow(u64 e) const { return {f_, f_->ring.pow(r_, e)}; }

    /// Image under x -> x^(p^i).
    FieldElement frobenius(std::size_t i) const {
        return pow(boost::multiprecision::pow(BigInt(f_->p), static_cast<unsigned>(i)));
    }

    /// Whether the multiplicative order is exactly n.
    bool has_order(u64 n) const {
        if (n == 0 || is_zero()) return false;
        const auto one = f_->ring.one();
        if (f_->ring.pow(r_, n) != one) return false;
        for (u64 ell : factorize(n).primes())
            if (f_->ring.pow(r_, n / ell) == one) return false;
        return true;
    }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        a.same(b);
        return {a.f_, a.f_->ring.add(a.r_, b.r_)};
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        a.same(b);
        return {a.f_, a.f_->ring.sub(a.r_, b.r_)};
    }
    friend FieldElement operator-(const FieldElement& a) { return {a.f_, a.f_->ring.neg(a.r_)}; }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        a.same(b);
        return {a.f_, a.f_->ring.mul(a.r_, b.r_)};
    }
    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return (a.f_ == b.f_ || a.f_->modulus == b.f_->modulus) && a.r_ == b.r_;
    }

    const std::shared_ptr<const detail::FieldData>& field_data() const noexcept { return f_; }

   private:
    void same(const FieldElement& o) const {
        if (f_ != o.f_ && !(f_->p == o.f_->p && f_->modulus == o.f_->modulus))
            throw std::invalid_argument("field mismatch between elements");
    }
    std::shared_ptr<const detail::FieldData> f_;
    Residue r_;
};

inline FieldElement ExtensionField::zero() const { return {data_, Residue(data_->m, 0)}; }
inline FieldElement ExtensionField::one() const { return {data_, data_->ring.one()}; }
inline FieldElement ExtensionField::element(Residue r) const {
    if (r.size() != data_->m) throw std::invalid_argument("residue length must equal the field degree");
    for (auto& x : r) x %= data_->p;
    return {data_, std::move(r)};
}
inline FieldElement ExtensionField::from_poly(const DensePoly& f) const {
    if (f.characteristic() != data_->p) throw std::invalid_argument("characteristic mismatch");
    return {data_, data_->ring.reduce(f, data_->modulus)};
}
inline FieldElement ExtensionField::constant(u64 c) const { return from_poly(DensePoly(data_->p, {c})); }
inline FieldElement ExtensionField::from_code(u64 code) const {
    std::vector<u64> c;
    while (code > 0) {
        c.push_back(code % data_->p);
        code /= data_->p;
    }
    return from_poly(DensePoly(data_->p, std::move(c)));
}

inline std::optional<FieldElement> ExtensionField::generator() const {
    if (data_->size - 1 > BigInt(std::numeric_limits<u64>::max())) return std::nullopt;
    const u64 order = static_cast<u64>(data_->size - 1);
    if (order == 1) return one();
    const auto primes = factorize(order).primes();
    for (u64 code = 1;; ++code) {
        auto g = from_code(code);
        bool ok = true;
        for (u64 ell : primes)
            if (g.pow(order / ell) == one()) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
}

/// Primitive n-th root of unity zeta_n in a field containing mu_n.
class RootOfUnity {
   public:
    RootOfUnity(ExtensionField field, u64 n, FieldElement zeta) : field_(std::move(field)), n_(n), zeta_(std::move(zeta)) {
        if (!zeta_.has_order(n_)) throw TheoryViolation("root of unity does not have exact order n");
    }

    /// zeta_n = a^((p^m - 1)/n) for the smallest code a giving an element of exact order n.
    static RootOfUnity find(const ExtensionField& field, u64 n) {
        if (n == 0) throw std::invalid_argument("root of unity order must be positive");
        const BigInt group = field.size() - 1;
        if (group % n != 0)
            throw std::invalid_argument("F_" + std::to_string(field.characteristic()) + "^" +
                                        std::to_string(field.degree()) + " contains no primitive " +
                                        std::to_string(n) + "-th root of unity");
        const BigInt cof = group / n;
        for (u64 code = 1;; ++code) {
            auto z = field.from_code(code).pow(cof);
            if (z.has_order(n)) return RootOfUnity(field, n, std::move(z));
        }
    }

    const ExtensionField& field() const noexcept { return field_; }
    u64 n() const noexcept { return n_; }
    const FieldElement& zeta() const noexcept { return zeta_; }

    /// zeta_n^e for any integer exponent (reduced mod n).
    FieldElement power(u64 e) const {
        if (!table_.empty()) return table_[e % n_];
        return zeta_.pow(e % n_);
    }

    /// Precompute all n powers; worthwhile when many cosets are expanded.
    void tabulate() {
        table_.clear();
        table_.reserve(n_);
        FieldElement x = field_.one();
        for (u64 i = 0; i < n_; ++i) {
            table_.push_back(x);
            x = x * zeta_;
        }
    }

    /// zeta_m = zeta_n^(n/m) for m | n.
    RootOfUnity derive(u64 m) const {
        if (m == 0 || n_ % m != 0) throw std::invalid_argument("derive: m must divide n");
        return RootOfUnity(field_, m, zeta_.pow(n_ / m));
    }

   private:
    ExtensionField field_;
    u64 n_;
    FieldElement zeta_;
    std::vector<FieldElement> table_;
};

struct SplittingContext {
    ExtensionField field;
    RootOfUnity root;
};

inline void require_prime_base(const CosetContext& ctx) {
    if (!ctx.q_is_prime())
        throw std::domain_error("concrete field operations require prime q; got q = " + ctx.q_string());
}

/// F_{p^L} with L = ord_n(p) together with zeta_n.
inline SplittingContext build_splitting_context(const CosetContext& ctx, const FieldLimits& limits = {}) {
    require_prime_base(ctx);
    const u64 p = ctx.characteristic();
    const u64 L = multiplicative_order(p, ctx.n());
    auto field = ExtensionField::build(p, L, limits);
    auto root = RootOfUnity::find(field, ctx.n());
    return {std::move(field), std::move(root)};
}

/// Same, reusing a field that already contains mu_n.
inline SplittingContext build_splitting_context(const CosetContext& ctx, const ExtensionField& field) {
    require_prime_base(ctx);
    if (field.characteristic() != ctx.characteristic()) throw std::invalid_argument("characteristic mismatch");
    return {field, RootOfUnity::find(field, ctx.n())};
}

/// Polynomial with coefficients in an extension field, lowest degree first, normalized.
class FieldPoly {
   public:
    FieldPoly(ExtensionField field, std::vector<FieldElement> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    const ExtensionField& field() const noexcept { return field_; }
    const std::vector<FieldElement>& coefficients() const noexcept { return c_; }
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    std::size_t nonzero_terms() const {
        return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](const auto& x) { return !x.is_zero(); }));
    }
    bool in_prime_field() const {
        return std::all_of(c_.begin(), c_.end(), [](const auto& x) { return x.in_prime_field(); });
    }
    /// Coefficients fixed by x -> x^(p^s), i.e. lying in F_{p^s}.
    bool in_subfield(std::size_t s) const {
        return std::all_of(c_.begin(), c_.end(), [&](const auto& x) { return x.frobenius(s) == x; });
    }
    DensePoly to_prime_field() const {
        std::vector<u64> v;
        for (const auto& x : c_) v.push_back(x.prime_field_value());
        return DensePoly(field_.characteristic(), std::move(v));
    }

    friend FieldPoly operator*(const FieldPoly& a, const FieldPoly& b) {
        if (a.c_.empty() || b.c_.empty()) return FieldPoly(a.field_, {});
        std::vector<FieldElement> r(a.c_.size() + b.c_.size() - 1, a.field_.zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        }
        return FieldPoly(a.field_, std::move(r));
    }

    friend bool operator==(const FieldPoly& a, const FieldPoly& b) { return a.c_ == b.c_; }

    static FieldPoly from_prime_field(const ExtensionField& field, const DensePoly& f) {
        std::vector<FieldElement> c;
        for (u64 x : f.coefficients()) c.push_back(field.constant(x));
        return FieldPoly(field, std::move(c));
    }

   private:
    ExtensionField field_;
    std::vector<FieldElement> c_;
};

/// prod over e in exponents of (X - zeta^e), expanded in the splitting field.
inline FieldPoly root_product(const RootOfUnity& root, const std::vector<u64>& exponents) {
    const auto& ring = root.field().ring();
    std::vector<Residue> acc{ring.one()};
    for (u64 e : exponents) {
        const Residue r = root.power(e).residue();
        acc.push_back(acc.back());
        for (std::size_t k = acc.size() - 2; k >= 1; --k) acc[k] = ring.sub(acc[k - 1], ring.mul(r, acc[k]));
        acc[0] = ring.neg(ring.mul(r, acc[0]));
    }
    std::vector<FieldElement> c;
    c.reserve(acc.size());
    const auto data = root.field().data();
    for (auto& x : acc) c.emplace_back(data, std::move(x));
    return FieldPoly(root.field(), std::move(c));
}

namespace detail {

inline void check_root(const CyclotomicCoset& c, const RootOfUnity& root) {
    if (root.n() != c.context().n())
        throw std::invalid_argument("root of unity has order " + std::to_string(root.n()) + " but the coset modulus is " +
                                    std::to_string(c.context().n()));
    if (root.field().characteristic() != c.context().characteristic())
        throw std::invalid_argument("characteristic mismatch between root and coset");
}

}  // namespace detail

/// M_c(X) = prod_{e in c} (X - zeta_n^e) over the field generated by q = p^k; coefficients are
/// checked to be fixed by the k-th power of Frobenius (restricted to the splitting field).
inline FieldPoly minimal_polynomial_in_field(const CyclotomicCoset& c, const RootOfUnity& root) {
    detail::check_root(c, root);
    auto f = root_product(root, c.elements());
    const std::size_t s = std::gcd(static_cast<std::size_t>(c.context().exponent()), root.field().degree());
    if (s != root.field().degree() && !f.in_subfield(s))
        throw TheoryViolation("minimal polynomial coefficients are not fixed by Frobenius");
    return f;
}

/// M_c(X) over the prime field F_q (q prime).
inline DensePoly minimal_polynomial(const CyclotomicCoset& c, const RootOfUnity& root) {
    require_prime_base(c.context());
    detail::check_root(c, root);
    auto f = root_product(root, c.elements());
    if (!f.in_prime_field()) throw TheoryViolation("minimal polynomial has coefficients outside F_p");
    return f.to_prime_field();
}

/// X^degree - sign * zeta_n^constant_exponent.
struct SymbolicBinomial {
    u64 degree = 1;
    u64 constant_exponent = 0;
    int sign = 1;
    friend bool operator==(const SymbolicBinomial&, const SymbolicBinomial&) = default;

    FieldPoly expand(const RootOfUnity& root) const {
        const auto& F = root.field();
        std::vector<FieldElement> c(degree + 1, F.zero());
        c[degree] = F.one();
        auto z = root.power(constant_exponent);
        c[0] = sign > 0 ? -z : z;
        return FieldPoly(F, std::move(c));
    }
};

/// Closed form for an equal-difference coset: degree tau, exponent gamma (q^tau - 1)/(q - 1) mod n,
/// sign (-1)^(tau+1) so that the constant term matches the expanded product.
inline SymbolicBinomial binomial_of_ed_coset(const CyclotomicCoset& c) {
    if (!is_equal_difference_direct(c).is_ed)
        throw std::invalid_argument("binomial_of_ed_coset: coset of " + std::to_string(c.representative()) +
                                    " is not equal-difference");
    const u64 n = c.context().n();
    const u64 q = c.context().multiplier();
    u64 geometric = 0, power = 1 % n;
    for (u64 j = 0; j < c.size(); ++j) {
        geometric = (geometric + power) % n;
        power = mul_mod(power, q, n);
    }
    SymbolicBinomial b;
    b.degree = c.size();
    b.constant_exponent = mul_mod(c.representative() % n, geometric, n);
    b.sign = c.size() % 2 == 1 ? 1 : -1;
    return b;
}

struct Factor {
    u64 leader = 0;
    u64 degree = 0;
    std::optional<FieldPoly> poly;
    std::optional<DensePoly> base_poly;  ///< when all coefficients lie in F_p
    std::optional<SymbolicBinomial> binomial;
    bool is_binomial = false;
};

struct FactorReport {
    u64 n = 1;
    CosetContext ctx = CosetContext::make(1, 2);
    u64 t = 1;
    u64 effective_t = 1;  ///< gcd(t, ord_n(q))
    u64 omega = 1;
    bool concrete = false;
    std::optional<ExtensionField> field;
    std::vector<Factor> factors;
    bool all_binomial = false;
    bool predicted_all_binomial = false;  ///< omega | t
    bool verified = false;
};

namespace detail {

inline FactorReport factor_skeleton(const CosetContext& ctx, u64 t) {
    if (t == 0) throw std::invalid_argument("extension exponent t must be positive");
    FactorReport r;
    r.n = ctx.n();
    r.ctx = ctx;
    r.t = t;
    r.effective_t = std::gcd(t, multiplicative_order(ctx.multiplier(), ctx.n()));
    r.omega = omega_global(ctx);
    r.predicted_all_binomial = t % r.omega == 0;
    return r;
}

}  // namespace detail

/// Irreducible factorization of X^n - 1 over F_{q^t} using the q^t-cosets modulo n and a
/// prebuilt splitting context.
inline FactorReport factor_xn_minus_1(const CosetContext& ctx, u64 t, SplittingContext& sc) {
    auto r = detail::factor_skeleton(ctx, t);
    require_prime_base(ctx);
    if (sc.root.n() != ctx.n()) throw std::invalid_argument("splitting context built for a different n");
    r.concrete = true;
    r.field = sc.field;
    if (ctx.n() <= (u64{1} << 16)) sc.root.tabulate();
    const auto ext = ctx.power(t);
    for_each_coset(ext, [&](CyclotomicCoset&& c) {
        Factor f;
        f.leader = c.leader();
        f.degree = c.size();
        auto poly = minimal_polynomial_in_field(c, sc.root);
        f.is_binomial = poly.nonzero_terms() == 2;
        if (poly.in_prime_field()) f.base_poly = poly.to_prime_field();
        if (is_equal_difference_direct(c).is_ed) {
            f.binomial = binomial_of_ed_coset(c);
            if (!(f.binomial->expand(sc.root) == poly))
                throw TheoryViolation("symbolic binomial differs from the expanded product for leader " +
                                      std::to_string(c.leader()));
        }
        f.poly = std::move(poly);
        r.factors.push_back(std::move(f));
    });
    r.all_binomial = std::all_of(r.factors.begin(), r.factors.end(), [](const Factor& f) { return f.is_binomial; });

    const u64 p = ctx.characteristic();
    const bool prime_field = std::all_of(r.factors.begin(), r.factors.end(), [](const Factor& f) { return f.base_poly.has_value(); });
    if (prime_field) {
        DensePoly prod(p, {1});
        for (const auto& f : r.factors) prod *= *f.base_poly;
        r.verified = prod == DensePoly::x_pow_minus_one(p, ctx.n());
    } else {
        FieldPoly prod(sc.field, {sc.field.one()});
        for (const auto& f : r.factors) prod = prod * *f.poly;
        r.verified = prod == FieldPoly::from_prime_field(sc.field, DensePoly::x_pow_minus_one(p, ctx.n()));
    }
    return r;
}

/// Factorization without a concrete field: one record per q^t-coset, carrying the symbolic binomial
/// exactly when the coset is equal-difference.
inline FactorReport symbolic_factorization(const CosetContext& ctx, u64 t) {
    auto r = detail::factor_skeleton(ctx, t);
    for_each_coset(ctx.power(t), [&](CyclotomicCoset&& c) {
        Factor f;
        f.leader = c.leader();
        f.degree = c.size();
        if (is_equal_difference_direct(c).is_ed) {
            f.binomial = binomial_of_ed_coset(c);
            f.is_binomial = true;
        }
        r.factors.push_back(std::move(f));
    });
    r.all_binomial = std::all_of(r.factors.begin(), r.factors.end(), [](const Factor& f) { return f.is_binomial; });
    return r;
}

/// Builds the splitting context itself. For q = p^k with k > 1 only the all-binomial case is
/// available, and only symbolically.
inline FactorReport factor_xn_minus_1(const CosetContext& ctx, u64 t, const FieldLimits& limits = {}) {
    if (!ctx.q_is_prime()) {
        auto r = symbolic_factorization(ctx, t);
        if (!r.predicted_all_binomial)
            throw std::domain_error("concrete expansion requires prime q (q = " + ctx.q_string() +
                                    "), and the factorization is not in binomial form");
        if (!r.all_binomial) throw TheoryViolation("predicted binomial factorization has a non-binomial factor");
        return r;
    }
    auto sc = build_splitting_context(ctx, limits);
    return factor_xn_minus_1(ctx, t, sc);
}

/// Extension exponents t | tau over which M_c splits into irreducible binomials.
inline std::vector<u64> binomial_splitting_exponents(const CyclotomicCoset& c) {
    return sigma_set(c.size(), omega_gamma(c)).members;
}

/// Extension exponents t | ord_n(q) over which X^n - 1 splits into irreducible binomials.
inline std::vector<u64> binomial_splitting_exponents(const CosetContext& ctx) {
    return sigma_set(multiplicative_order(ctx.multiplier(), ctx.n()), omega_global(ctx)).members;
}

}  // namespace cyclo

#endif  // CYCLO_FIELDS_HPP
