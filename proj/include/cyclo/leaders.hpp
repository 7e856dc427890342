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

#ifndef CYCLO_LEADERS_HPP
#define CYCLO_LEADERS_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cosets.hpp"
#include "equal_difference.hpp"
#include "numtheory.hpp"

namespace cyclo {

enum class LeaderMethod { ed_closed_form, omega_window, brute_force };

inline std::string to_string(LeaderMethod m) {
    switch (m) {
        case LeaderMethod::ed_closed_form:
            return "ed_closed_form";
        case LeaderMethod::omega_window:
            return "omega_window";
        case LeaderMethod::brute_force:
            return "brute_force";
    }
    throw std::invalid_argument("unknown leader method");
}

inline LeaderMethod leader_method_from_string(const std::string& s) {
    if (s == "ed_closed_form") return LeaderMethod::ed_closed_form;
    if (s == "omega_window") return LeaderMethod::omega_window;
    if (s == "brute_force") return LeaderMethod::brute_force;
    throw std::invalid_argument("unknown leader method '" + s + "'");
}

struct LeaderResult {
    u64 leader = 0;
    LeaderMethod method = LeaderMethod::brute_force;
    std::optional<u64> window_modulus;  ///< omega_gamma * n / tau for the window method
    u64 reductions = 0;                 ///< window reductions actually performed
    std::vector<u64> window_values;     ///< gamma q^j mod n mod W, j < omega_gamma
    std::optional<std::string> diagnostic;

    friend bool operator==(const LeaderResult&, const LeaderResult&) = default;
};

/// Minimum over the explicit element list.
inline LeaderResult leader_bruteforce(const CyclotomicCoset& c) {
    LeaderResult r;
    r.leader = *std::min_element(c.elements().begin(), c.elements().end());
    r.method = LeaderMethod::brute_force;
    return r;
}

/// Minimum over the orbit walked directly, without building a coset object.
inline LeaderResult leader_bruteforce(const CosetContext& ctx, u64 gamma) {
    const u64 n = ctx.n();
    const u64 g = gamma % n;
    u64 best = g, x = g;
    do {
        best = std::min(best, x);
        x = mul_mod(x, ctx.multiplier(), n);
    } while (x != g);
    LeaderResult r;
    r.leader = best;
    r.method = LeaderMethod::brute_force;
    return r;
}

/// Closed form gamma mod (n / tau) for an equal-difference coset.
inline LeaderResult leader_ed(const CyclotomicCoset& c) {
    if (!is_equal_difference_direct(c).is_ed)
        throw std::invalid_argument("leader_ed: coset of " + std::to_string(c.representative()) +
                                    " is not equal-difference");
    LeaderResult r;
    r.leader = c.representative() % (c.context().n() / c.size());
    r.method = LeaderMethod::ed_closed_form;
    return r;
}

/// Leader as min_j (gamma q^j mod n) mod (omega_gamma n / tau), j < omega_gamma. The orbit is never
/// materialized; tau and omega_gamma come from order computations modulo n_gamma.
inline LeaderResult leader_fast(const CosetContext& ctx, u64 gamma) {
    const u64 n = ctx.n();
    const u64 g = gamma % n;
    const u64 n_gamma = n / std::gcd(g, n);
    const u64 tau = multiplicative_order(ctx.q_mod(n_gamma), n_gamma);
    const u64 omega = omega_for_modulus(ctx, n_gamma);

    const u128 scaled = static_cast<u128>(omega) * n;
    if (tau < omega || scaled % tau != 0) {
        auto r = leader_bruteforce(ctx, g);
        r.diagnostic = "window omega*n/tau is degenerate (n = " + std::to_string(n) + ", tau = " +
                       std::to_string(tau) + ", omega = " + std::to_string(omega) + "); used brute force";
        return r;
    }
    const u64 w = static_cast<u64>(scaled / tau);

    LeaderResult r;
    r.method = LeaderMethod::omega_window;
    r.window_modulus = w;
    r.window_values.reserve(omega);
    u64 x = g;
    for (u64 j = 0; j < omega; ++j) {
        r.window_values.push_back(x % w);
        ++r.reductions;
        x = mul_mod(x, ctx.multiplier(), n);
    }
    r.leader = *std::min_element(r.window_values.begin(), r.window_values.end());
    return r;
}

inline LeaderResult leader_fast(const CyclotomicCoset& c) { return leader_fast(c.context(), c.representative()); }

}  // namespace cyclo

#endif  // CYCLO_LEADERS_HPP
