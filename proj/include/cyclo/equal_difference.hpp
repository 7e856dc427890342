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

#ifndef CYCLO_EQUAL_DIFFERENCE_HPP
#define CYCLO_EQUAL_DIFFERENCE_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "cosets.hpp"
#include "numtheory.hpp"

namespace cyclo {

struct EdStatus {
    bool is_ed = false;
    /// n / tau; present iff is_ed (equals n for singletons).
    std::optional<u64> common_difference;
    friend bool operator==(const EdStatus&, const EdStatus&) = default;
};

inline EdStatus make_ed_status(bool is_ed, u64 n, u64 tau) {
    if (!is_ed) return {};
    return {true, n / tau};
}

/// Whether a sorted residue set is a full arithmetic progression x0, x0 + n/s, ..., x0 + (s-1) n/s.
inline bool is_equal_difference_set(std::span<const u64> sorted, u64 n) {
    const u64 s = sorted.size();
    if (s == 0) return false;
    if (s == 1) return true;
    if (n % s != 0) return false;
    const u64 d = n / s;
    for (u64 i = 0; i < s; ++i)
        if (sorted[i] != sorted[0] + i * d) return false;
    return true;
}

/// Direct check on the orbit: tau | n and gamma q = gamma (mod n / tau).
inline EdStatus is_equal_difference_direct(const CyclotomicCoset& c) {
    const u64 n = c.context().n();
    const u64 tau = c.size();
    if (tau == 1) return make_ed_status(true, n, tau);
    if (n % tau != 0) return {};
    const u64 d = n / tau;
    const u64 g = c.representative();
    const bool ok = mul_mod(g, c.context().multiplier(), n) % d == g % d;
    return make_ed_status(ok, n, tau);
}

/// Diagnostics for the two arithmetic conditions on (q, n_gamma).
struct EdCriterionReport {
    u64 n_gamma = 1;
    u64 rad_n_gamma = 1;
    u64 q_mod_4 = 0;
    bool radical_divides = true;  ///< rad(n_gamma) | q - 1
    bool eight_divides = false;   ///< 8 | n_gamma
    bool mod4_condition = true;   ///< q = 1 (mod 4) whenever 8 | n_gamma
    bool is_ed = true;
    u64 tau = 1;
    std::optional<u64> common_difference;
    u64 omega = 1;
};

/// omega for a modulus m: ord_{rad m}(q), doubled when that power of q is 3 mod 4 and 8 | m.
inline u64 omega_for_modulus(const CosetContext& ctx, u64 m) {
    if (m == 1) return 1;
    const u64 r = radical(m);
    const u64 o = multiplicative_order(ctx.q_mod(r), r);
    if (m % 8 == 0 && pow_mod(ctx.q_mod(4), o, 4) == 3) return 2 * o;
    return o;
}

inline EdCriterionReport ed_criterion_report(const CosetContext& ctx, u64 n_gamma) {
    EdCriterionReport r;
    r.n_gamma = n_gamma;
    r.rad_n_gamma = radical(n_gamma);
    r.q_mod_4 = ctx.q_mod(4);
    r.radical_divides = ctx.q_mod(r.rad_n_gamma) == 1 % r.rad_n_gamma;
    r.eight_divides = n_gamma % 8 == 0;
    r.mod4_condition = !r.eight_divides || r.q_mod_4 == 1;
    r.is_ed = r.radical_divides && r.mod4_condition;
    r.tau = multiplicative_order(ctx.q_mod(n_gamma), n_gamma);
    if (r.is_ed) r.common_difference = ctx.n() / r.tau;
    r.omega = omega_for_modulus(ctx, n_gamma);
    return r;
}

/// Verdict from (q, n_gamma) alone: rad(n_gamma) | q - 1, and q = 1 (mod 4) if 8 | n_gamma.
inline EdStatus is_equal_difference_criterion(const CyclotomicCoset& c) {
    const auto r = ed_criterion_report(c.context(), c.n_gamma());
    return {r.is_ed, r.common_difference};
}

struct AllEdVerdict {
    bool all_ed = true;
    bool radical_divides = true;  ///< condition (i): rad(n) | q - 1
    bool mod4_condition = true;   ///< condition (ii): q = 1 (mod 4) if 8 | n
    std::string reason;
};

/// Whether every q-coset modulo n is equal-difference.
inline AllEdVerdict all_cosets_ed(const CosetContext& ctx) {
    const auto r = ed_criterion_report(ctx, ctx.n());
    AllEdVerdict v;
    v.radical_divides = r.radical_divides;
    v.mod4_condition = r.mod4_condition;
    v.all_ed = r.is_ed;
    if (!r.radical_divides)
        v.reason = "condition (i) fails: rad(n) = " + std::to_string(r.rad_n_gamma) + " does not divide q - 1";
    else if (!r.mod4_condition)
        v.reason = "condition (ii) fails: 8 | n but q = " + std::to_string(r.q_mod_4) + " (mod 4)";
    return v;
}

inline u64 omega_gamma(const CyclotomicCoset& c) {
    const u64 w = omega_for_modulus(c.context(), c.n_gamma());
    if (c.size() % w != 0) throw TheoryViolation("omega_gamma does not divide the coset size");
    return w;
}

inline u64 omega_global(const CosetContext& ctx) { return omega_for_modulus(ctx, ctx.n()); }

/// Partition of a q-coset into gcd(t, tau) orbits under multiplication by q^t.
/// Component j is the orbit of gamma q^j.
struct MerDecomposition {
    CyclotomicCoset parent;
    u64 t = 1;
    u64 t_prime = 1;
    std::vector<CyclotomicCoset> components;
    std::vector<EdStatus> component_status;

    bool all_ed() const {
        return std::all_of(component_status.begin(), component_status.end(),
                           [](const EdStatus& s) { return s.is_ed; });
    }

    /// Blocks as sorted residue sets, blocks ordered by smallest element.
    std::vector<std::vector<u64>> canonical_blocks() const {
        std::vector<std::vector<u64>> b;
        for (const auto& c : components) b.push_back(c.elements());
        std::sort(b.begin(), b.end());
        return b;
    }
};

inline MerDecomposition cyclotomic_decomposition(const CyclotomicCoset& c, u64 t) {
    if (t == 0) throw std::invalid_argument("extension exponent t must be positive");
    const auto& ctx = c.context();
    const u64 tp = std::gcd(t, c.size());
    const auto ext = ctx.power(t);
    MerDecomposition d{c, t, tp, {}, {}};
    u64 x = c.representative();
    for (u64 j = 0; j < tp; ++j) {
        auto comp = coset_of(ext, x);
        d.component_status.push_back(is_equal_difference_direct(comp));
        d.components.push_back(std::move(comp));
        x = mul_mod(x, ctx.multiplier(), ctx.n());
    }
    if (d.components.front().size() * tp != c.size()) throw TheoryViolation("q^t-components do not tile the coset");
    return d;
}

/// Decomposition at t = omega_gamma; every component is certified equal-difference.
inline MerDecomposition coarsest_mer(const CyclotomicCoset& c) {
    auto d = cyclotomic_decomposition(c, omega_gamma(c));
    if (!d.all_ed()) throw TheoryViolation("coarsest decomposition has a non-equal-difference component");
    return d;
}

/// Divisors of tau that are multiples of omega_gamma.
struct SigmaSet {
    u64 tau = 1;
    u64 omega = 1;
    std::vector<u64> members;
};

inline SigmaSet sigma_set(u64 tau, u64 omega) {
    SigmaSet s{tau, omega, {}};
    for (u64 d : factorize(tau).divisors())
        if (d % omega == 0) s.members.push_back(d);
    return s;
}

struct MerSet {
    SigmaSet sigma;
    std::map<u64, MerDecomposition> representations;
};

/// Every multiple equal-difference representation, indexed by t in Sigma(tau; omega_gamma).
inline MerSet mer_set(const CyclotomicCoset& c) {
    MerSet r{sigma_set(c.size(), omega_gamma(c)), {}};
    for (u64 t : r.sigma.members) {
        auto d = cyclotomic_decomposition(c, t);
        if (!d.all_ed()) throw TheoryViolation("Sigma member t = " + std::to_string(t) + " gave a non-ED component");
        r.representations.emplace(t, std::move(d));
    }
    return r;
}

namespace detail {

inline std::unordered_map<u64, std::size_t> block_index(const std::vector<CyclotomicCoset>& comps) {
    std::unordered_map<u64, std::size_t> idx;
    for (std::size_t i = 0; i < comps.size(); ++i)
        for (u64 x : comps[i].elements()) idx.emplace(x, i);
    return idx;
}

}  // namespace detail

/// True iff every component of b lies inside a single component of a.
inline bool is_coarser(const MerDecomposition& a, const MerDecomposition& b) {
    if (!(a.parent == b.parent)) throw std::invalid_argument("is_coarser: decompositions of different cosets");
    const auto idx = detail::block_index(a.components);
    bool coarser = true;
    for (const auto& comp : b.components) {
        const auto home = idx.at(comp.elements().front());
        for (u64 x : comp.elements())
            if (idx.at(x) != home) coarser = false;
    }
    if (a.all_ed() && b.all_ed() && coarser != (b.t_prime % a.t_prime == 0))
        throw TheoryViolation("containment order disagrees with divisibility of extension exponents");
    return coarser;
}

/// A partition into residue sets, each block sorted, blocks sorted by first element.
using Partition = std::vector<std::vector<u64>>;

inline Partition canonical_partition(Partition p) {
    for (auto& b : p) std::sort(b.begin(), b.end());
    std::sort(p.begin(), p.end());
    return p;
}

struct BlockReport {
    bool is_ed = false;
    u64 t = 0;                    ///< the block is a q^t-coset (when ED)
    std::size_t coarse_index = 0; ///< which coarsest component contains it (when ED)
};

struct EdDecompositionVerdict {
    bool valid = false;
    std::vector<BlockReport> blocks;
};

/// Checks that `blocks` is an equal-difference decomposition of c.
inline EdDecompositionVerdict validate_ed_decomposition(const CyclotomicCoset& c, const Partition& blocks) {
    const u64 n = c.context().n();
    std::map<u64, int> count;
    for (const auto& b : blocks) {
        if (b.empty()) throw std::invalid_argument("validate_ed_decomposition: empty block");
        for (u64 x : b) {
            if (!c.contains(x))
                throw std::invalid_argument("validate_ed_decomposition: " + std::to_string(x) + " is not in the coset");
            if (++count[x] > 1)
                throw std::invalid_argument("validate_ed_decomposition: " + std::to_string(x) +
                                            " appears in two blocks");
        }
    }
    for (u64 x : c.elements())
        if (!count.count(x))
            throw std::invalid_argument("validate_ed_decomposition: " + std::to_string(x) + " is not covered");

    const auto coarse = coarsest_mer(c);
    const auto where = detail::block_index(coarse.components);
    EdDecompositionVerdict v{true, {}};
    for (const auto& raw : blocks) {
        auto b = raw;
        std::sort(b.begin(), b.end());
        BlockReport r;
        r.is_ed = is_equal_difference_set(b, n);
        if (r.is_ed) {
            // smallest t with x q^t = x (mod n / |b|)
            const u64 modulus = n / b.size();
            const u64 x = b.front();
            const u64 m = modulus / std::gcd(x, modulus);
            r.t = multiplicative_order(c.context().q_mod(m), m);
            if (coset_of(c.context().power(r.t), x).elements() != b)
                throw TheoryViolation("equal-difference block is not a q^t-coset");
            r.coarse_index = where.at(x);
            for (u64 y : b)
                if (where.at(y) != r.coarse_index)
                    throw TheoryViolation("equal-difference block straddles coarsest components");
        } else {
            v.valid = false;
        }
        v.blocks.push_back(r);
    }
    return v;
}

inline constexpr u64 default_ed_enumeration_cap = 12;

namespace detail {

// All partitions of `remaining` (sorted) into equal-difference subsets of Z/nZ.
inline void ed_partitions_of(std::vector<u64> remaining, u64 n, Partition& current,
                             std::vector<Partition>& out) {
    if (remaining.empty()) {
        out.push_back(current);
        return;
    }
    const u64 x = remaining.front();
    for (u64 s = 1; s <= remaining.size(); ++s) {
        if (n % s != 0) continue;
        const u64 d = n / s;
        std::vector<u64> block;
        bool inside = true;
        for (u64 i = 0; i < s && inside; ++i) {
            const u64 y = (x + i * d) % n;
            inside = std::binary_search(remaining.begin(), remaining.end(), y);
            block.push_back(y);
        }
        if (!inside) continue;
        std::sort(block.begin(), block.end());
        std::vector<u64> rest;
        std::set_difference(remaining.begin(), remaining.end(), block.begin(), block.end(), std::back_inserter(rest));
        current.push_back(block);
        ed_partitions_of(std::move(rest), n, current, out);
        current.pop_back();
    }
}

}  // namespace detail

/// Every equal-difference decomposition of c, built by refining the coarsest components independently.
inline std::vector<Partition> enumerate_ed_decompositions(const CyclotomicCoset& c,
                                                          u64 cap = default_ed_enumeration_cap) {
    if (c.size() > cap)
        throw std::invalid_argument("enumerate_ed_decompositions: tau = " + std::to_string(c.size()) +
                                    " exceeds cap " + std::to_string(cap));
    const u64 n = c.context().n();
    std::vector<Partition> acc{Partition{}};
    for (const auto& comp : coarsest_mer(c).components) {
        std::vector<Partition> local;
        Partition cur;
        detail::ed_partitions_of(comp.elements(), n, cur, local);
        std::vector<Partition> next;
        for (const auto& a : acc)
            for (const auto& l : local) {
                Partition p = a;
                p.insert(p.end(), l.begin(), l.end());
                next.push_back(std::move(p));
            }
        acc = std::move(next);
    }
    for (auto& p : acc) p = canonical_partition(std::move(p));
    std::sort(acc.begin(), acc.end());
    return acc;
}

struct GlobalMer {
    u64 t = 1;
    u64 omega = 1;
    u64 order = 1;  ///< ord_n(q)
    std::vector<MerDecomposition> decompositions;
};

/// The q^t-decomposition of every coset modulo n, for t in Sigma(ord_n(q); omega).
inline GlobalMer global_mer(const CosetContext& ctx, u64 t) {
    if (t == 0) throw std::invalid_argument("extension exponent t must be positive");
    const u64 w = omega_global(ctx);
    const u64 ord = multiplicative_order(ctx.multiplier(), ctx.n());
    if (t % w != 0)
        throw std::invalid_argument("t = " + std::to_string(t) + " is not in Sigma: omega = " + std::to_string(w) +
                                    " does not divide t");
    if (ord % t != 0)
        throw std::invalid_argument("t = " + std::to_string(t) + " is not in Sigma: t does not divide ord_n(q) = " +
                                    std::to_string(ord));
    GlobalMer g{t, w, ord, {}};
    for_each_coset(ctx, [&](CyclotomicCoset&& c) {
        auto d = cyclotomic_decomposition(c, t);
        if (!d.all_ed()) throw TheoryViolation("global MER component is not equal-difference");
        g.decompositions.push_back(std::move(d));
    });
    return g;
}

}  // namespace cyclo

#endif  // CYCLO_EQUAL_DIFFERENCE_HPP
