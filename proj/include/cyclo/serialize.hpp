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

#ifndef CYCLO_SERIALIZE_HPP
#define CYCLO_SERIALIZE_HPP

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "cosets.hpp"
#include "equal_difference.hpp"
#include "fields.hpp"
#include "leaders.hpp"

namespace cyclo {

/// Gates every payload layout below; bump on any field change.
inline constexpr const char* schema_version = "1";

using Json = nlohmann::json;  // std::map-backed, so keys serialize in sorted order

namespace detail {

template <class T>
void put_opt(Json& j, const char* key, const std::optional<T>& v) {
    j[key] = v ? Json(*v) : Json(nullptr);
}

template <class T>
void get_opt(const Json& j, const char* key, std::optional<T>& v) {
    if (!j.contains(key) || j.at(key).is_null())
        v.reset();
    else
        v = j.at(key).get<T>();
}

}  // namespace detail

// --- records -------------------------------------------------------------

struct CosetRecord {
    u64 leader = 0;
    u64 size = 1;
    std::vector<u64> elements;
    bool is_ed = false;
    std::optional<u64> common_difference;
    friend bool operator==(const CosetRecord&, const CosetRecord&) = default;
};

inline CosetRecord make_coset_record(const CyclotomicCoset& c) {
    const auto s = is_equal_difference_direct(c);
    return {c.leader(), c.size(), c.elements(), s.is_ed, s.common_difference};
}

inline void to_json(Json& j, const CosetRecord& r) {
    j = Json{{"leader", r.leader}, {"size", r.size}, {"elements", r.elements}, {"is_ed", r.is_ed}};
    detail::put_opt(j, "common_difference", r.common_difference);
}
inline void from_json(const Json& j, CosetRecord& r) {
    j.at("leader").get_to(r.leader);
    j.at("size").get_to(r.size);
    j.at("elements").get_to(r.elements);
    j.at("is_ed").get_to(r.is_ed);
    detail::get_opt(j, "common_difference", r.common_difference);
}

struct CosetsPayload {
    u64 n = 1;
    std::string q;
    std::vector<CosetRecord> cosets;
    friend bool operator==(const CosetsPayload&, const CosetsPayload&) = default;
};

inline void to_json(Json& j, const CosetsPayload& p) { j = Json{{"n", p.n}, {"q", p.q}, {"cosets", p.cosets}}; }
inline void from_json(const Json& j, CosetsPayload& p) {
    j.at("n").get_to(p.n);
    j.at("q").get_to(p.q);
    j.at("cosets").get_to(p.cosets);
}

struct EdRecord {
    u64 leader = 0;
    u64 tau = 1;
    u64 n_gamma = 1;
    u64 rad_n_gamma = 1;
    u64 q_mod_4 = 0;
    bool radical_divides = true;
    bool eight_divides = false;
    bool mod4_condition = true;
    bool is_ed = true;
    std::optional<u64> common_difference;
    u64 omega = 1;
    friend bool operator==(const EdRecord&, const EdRecord&) = default;
};

inline EdRecord make_ed_record(const CyclotomicCoset& c) {
    const auto r = ed_criterion_report(c.context(), c.n_gamma());
    return {c.leader(),          c.size(),        r.n_gamma, r.rad_n_gamma, r.q_mod_4,
            r.radical_divides,   r.eight_divides, r.mod4_condition, r.is_ed,
            r.common_difference, r.omega};
}

inline void to_json(Json& j, const EdRecord& r) {
    j = Json{{"leader", r.leader},
             {"tau", r.tau},
             {"n_gamma", r.n_gamma},
             {"rad_n_gamma", r.rad_n_gamma},
             {"q_mod_4", r.q_mod_4},
             {"radical_divides", r.radical_divides},
             {"eight_divides", r.eight_divides},
             {"mod4_condition", r.mod4_condition},
             {"is_ed", r.is_ed},
             {"omega", r.omega}};
    detail::put_opt(j, "common_difference", r.common_difference);
}
inline void from_json(const Json& j, EdRecord& r) {
    j.at("leader").get_to(r.leader);
    j.at("tau").get_to(r.tau);
    j.at("n_gamma").get_to(r.n_gamma);
    j.at("rad_n_gamma").get_to(r.rad_n_gamma);
    j.at("q_mod_4").get_to(r.q_mod_4);
    j.at("radical_divides").get_to(r.radical_divides);
    j.at("eight_divides").get_to(r.eight_divides);
    j.at("mod4_condition").get_to(r.mod4_condition);
    j.at("is_ed").get_to(r.is_ed);
    j.at("omega").get_to(r.omega);
    detail::get_opt(j, "common_difference", r.common_difference);
}

struct EdGlobalRecord {
    bool all_ed = true;
    bool radical_divides = true;
    bool mod4_condition = true;
    std::string reason;
    u64 omega = 1;
    u64 order = 1;
    friend bool operator==(const EdGlobalRecord&, const EdGlobalRecord&) = default;
};

inline void to_json(Json& j, const EdGlobalRecord& r) {
    j = Json{{"all_ed", r.all_ed}, {"radical_divides", r.radical_divides}, {"mod4_condition", r.mod4_condition},
             {"reason", r.reason}, {"omega", r.omega},                     {"order", r.order}};
}
inline void from_json(const Json& j, EdGlobalRecord& r) {
    j.at("all_ed").get_to(r.all_ed);
    j.at("radical_divides").get_to(r.radical_divides);
    j.at("mod4_condition").get_to(r.mod4_condition);
    j.at("reason").get_to(r.reason);
    j.at("omega").get_to(r.omega);
    j.at("order").get_to(r.order);
}

struct EdPayload {
    u64 n = 1;
    std::string q;
    std::optional<i64> gamma;
    std::optional<EdGlobalRecord> global;
    std::vector<EdRecord> cosets;
    friend bool operator==(const EdPayload&, const EdPayload&) = default;
};

inline void to_json(Json& j, const EdPayload& p) {
    j = Json{{"n", p.n}, {"q", p.q}, {"cosets", p.cosets}};
    detail::put_opt(j, "gamma", p.gamma);
    detail::put_opt(j, "global", p.global);
}
inline void from_json(const Json& j, EdPayload& p) {
    j.at("n").get_to(p.n);
    j.at("q").get_to(p.q);
    j.at("cosets").get_to(p.cosets);
    detail::get_opt(j, "gamma", p.gamma);
    detail::get_opt(j, "global", p.global);
}

struct DecompositionRecord {
    u64 t = 1;
    u64 t_prime = 1;
    bool all_ed = true;
    std::vector<CosetRecord> components;  ///< ordered by the power of q, as constructed
    friend bool operator==(const DecompositionRecord&, const DecompositionRecord&) = default;
};

inline DecompositionRecord make_decomposition_record(const MerDecomposition& d) {
    DecompositionRecord r{d.t, d.t_prime, d.all_ed(), {}};
    for (std::size_t i = 0; i < d.components.size(); ++i) {
        const auto& c = d.components[i];
        r.components.push_back({c.leader(), c.size(), c.elements(), d.component_status[i].is_ed,
                                d.component_status[i].common_difference});
    }
    return r;
}

inline void to_json(Json& j, const DecompositionRecord& r) {
    j = Json{{"t", r.t}, {"t_prime", r.t_prime}, {"all_ed", r.all_ed}, {"components", r.components}};
}
inline void from_json(const Json& j, DecompositionRecord& r) {
    j.at("t").get_to(r.t);
    j.at("t_prime").get_to(r.t_prime);
    j.at("all_ed").get_to(r.all_ed);
    j.at("components").get_to(r.components);
}

struct MerPayload {
    u64 n = 1;
    std::string q;
    i64 gamma = 0;
    u64 leader = 0;
    u64 tau = 1;
    u64 omega = 1;
    std::vector<u64> sigma;
    std::vector<DecompositionRecord> decompositions;
    friend bool operator==(const MerPayload&, const MerPayload&) = default;
};

inline void to_json(Json& j, const MerPayload& p) {
    j = Json{{"n", p.n},         {"q", p.q},         {"gamma", p.gamma}, {"leader", p.leader},
             {"tau", p.tau},     {"omega", p.omega}, {"sigma", p.sigma}, {"decompositions", p.decompositions}};
}
inline void from_json(const Json& j, MerPayload& p) {
    j.at("n").get_to(p.n);
    j.at("q").get_to(p.q);
    j.at("gamma").get_to(p.gamma);
    j.at("leader").get_to(p.leader);
    j.at("tau").get_to(p.tau);
    j.at("omega").get_to(p.omega);
    j.at("sigma").get_to(p.sigma);
    j.at("decompositions").get_to(p.decompositions);
}

inline void to_json(Json& j, const SymbolicBinomial& b) {
    j = Json{{"degree", b.degree}, {"constant_exponent", b.constant_exponent}, {"sign", b.sign}};
}
inline void from_json(const Json& j, SymbolicBinomial& b) {
    j.at("degree").get_to(b.degree);
    j.at("constant_exponent").get_to(b.constant_exponent);
    j.at("sign").get_to(b.sign);
}

struct FactorRecord {
    u64 leader = 0;
    u64 degree = 1;
    bool is_binomial = false;
    std::optional<std::vector<u64>> coefficients;  ///< over F_p, low degree first
    /// Over the splitting field: each coefficient as its residue vector in the field's basis.
    std::optional<std::vector<std::vector<u64>>> field_coefficients;
    std::optional<SymbolicBinomial> binomial;
    friend bool operator==(const FactorRecord&, const FactorRecord&) = default;
};

inline void to_json(Json& j, const FactorRecord& r) {
    j = Json{{"leader", r.leader}, {"degree", r.degree}, {"is_binomial", r.is_binomial}};
    detail::put_opt(j, "coefficients", r.coefficients);
    detail::put_opt(j, "field_coefficients", r.field_coefficients);
    detail::put_opt(j, "binomial", r.binomial);
}
inline void from_json(const Json& j, FactorRecord& r) {
    j.at("leader").get_to(r.leader);
    j.at("degree").get_to(r.degree);
    j.at("is_binomial").get_to(r.is_binomial);
    detail::get_opt(j, "coefficients", r.coefficients);
    detail::get_opt(j, "field_coefficients", r.field_coefficients);
    detail::get_opt(j, "binomial", r.binomial);
}

struct FactorPayload {
    u64 n = 1;
    std::string q;
    u64 t = 1;
    u64 effective_t = 1;
    u64 omega = 1;
    bool concrete = false;
    std::optional<std::vector<u64>> field_modulus;  ///< defining polynomial of the splitting field
    std::vector<FactorRecord> factors;
    bool all_binomial = false;
    bool predicted_all_binomial = false;
    bool verified = false;
    friend bool operator==(const FactorPayload&, const FactorPayload&) = default;
};

inline FactorPayload make_factor_payload(const FactorReport& r) {
    FactorPayload p;
    p.n = r.n;
    p.q = r.ctx.q_string();
    p.t = r.t;
    p.effective_t = r.effective_t;
    p.omega = r.omega;
    p.concrete = r.concrete;
    if (r.field) p.field_modulus = r.field->modulus().coefficients();
    for (const auto& f : r.factors) {
        FactorRecord fr;
        fr.leader = f.leader;
        fr.degree = f.degree;
        fr.is_binomial = f.is_binomial;
        fr.binomial = f.binomial;
        if (f.base_poly) {
            fr.coefficients = f.base_poly->coefficients();
        } else if (f.poly) {
            std::vector<std::vector<u64>> c;
            for (const auto& e : f.poly->coefficients()) c.push_back(e.residue());
            fr.field_coefficients = std::move(c);
        }
        p.factors.push_back(std::move(fr));
    }
    p.all_binomial = r.all_binomial;
    p.predicted_all_binomial = r.predicted_all_binomial;
    p.verified = r.verified;
    return p;
}

inline void to_json(Json& j, const FactorPayload& p) {
    j = Json{{"n", p.n},
             {"q", p.q},
             {"t", p.t},
             {"effective_t", p.effective_t},
             {"omega", p.omega},
             {"concrete", p.concrete},
             {"factors", p.factors},
             {"all_binomial", p.all_binomial},
             {"predicted_all_binomial", p.predicted_all_binomial},
             {"verified", p.verified}};
    detail::put_opt(j, "field_modulus", p.field_modulus);
}
inline void from_json(const Json& j, FactorPayload& p) {
    j.at("n").get_to(p.n);
    j.at("q").get_to(p.q);
    j.at("t").get_to(p.t);
    j.at("effective_t").get_to(p.effective_t);
    j.at("omega").get_to(p.omega);
    j.at("concrete").get_to(p.concrete);
    j.at("factors").get_to(p.factors);
    j.at("all_binomial").get_to(p.all_binomial);
    j.at("predicted_all_binomial").get_to(p.predicted_all_binomial);
    j.at("verified").get_to(p.verified);
    detail::get_opt(j, "field_modulus", p.field_modulus);
}

inline void to_json(Json& j, const LeaderResult& r) {
    j = Json{{"leader", r.leader},
             {"method", to_string(r.method)},
             {"reductions", r.reductions},
             {"window_values", r.window_values}};
    detail::put_opt(j, "window_modulus", r.window_modulus);
    detail::put_opt(j, "diagnostic", r.diagnostic);
}
inline void from_json(const Json& j, LeaderResult& r) {
    j.at("leader").get_to(r.leader);
    r.method = leader_method_from_string(j.at("method").get<std::string>());
    j.at("reductions").get_to(r.reductions);
    j.at("window_values").get_to(r.window_values);
    detail::get_opt(j, "window_modulus", r.window_modulus);
    detail::get_opt(j, "diagnostic", r.diagnostic);
}

struct LeaderPayload {
    u64 n = 1;
    std::string q;
    i64 gamma = 0;
    u64 tau = 1;
    u64 omega = 1;
    LeaderResult result;
    std::optional<u64> bruteforce_leader;  ///< present with --verify
    std::optional<bool> verified;
    friend bool operator==(const LeaderPayload&, const LeaderPayload&) = default;
};

inline void to_json(Json& j, const LeaderPayload& p) {
    j = Json{{"n", p.n}, {"q", p.q}, {"gamma", p.gamma}, {"tau", p.tau}, {"omega", p.omega}, {"result", p.result}};
    detail::put_opt(j, "bruteforce_leader", p.bruteforce_leader);
    detail::put_opt(j, "verified", p.verified);
}
inline void from_json(const Json& j, LeaderPayload& p) {
    j.at("n").get_to(p.n);
    j.at("q").get_to(p.q);
    j.at("gamma").get_to(p.gamma);
    j.at("tau").get_to(p.tau);
    j.at("omega").get_to(p.omega);
    j.at("result").get_to(p.result);
    detail::get_opt(j, "bruteforce_leader", p.bruteforce_leader);
    detail::get_opt(j, "verified", p.verified);
}

struct SurveyRecord {
    u64 n = 1;
    std::string q;
    u64 coset_count = 1;
    u64 ed_count = 1;
    u64 omega = 1;
    u64 order = 1;  ///< ord_n(q)
    u64 sigma_size = 1;
    bool all_binomial_t1 = true;
    friend bool operator==(const SurveyRecord&, const SurveyRecord&) = default;
};

inline SurveyRecord make_survey_record(const CosetContext& ctx) {
    SurveyRecord r;
    r.n = ctx.n();
    r.q = ctx.q_string();
    r.coset_count = 0;
    r.ed_count = 0;
    for_each_coset(ctx, [&](CyclotomicCoset&& c) {
        ++r.coset_count;
        if (is_equal_difference_criterion(c).is_ed) ++r.ed_count;
    });
    r.omega = omega_global(ctx);
    r.order = multiplicative_order(ctx.multiplier(), ctx.n());
    r.sigma_size = sigma_set(r.order, r.omega).members.size();
    // binomial factors are exactly the equal-difference cosets
    r.all_binomial_t1 = r.ed_count == r.coset_count;
    return r;
}

inline void to_json(Json& j, const SurveyRecord& r) {
    j = Json{{"n", r.n},
             {"q", r.q},
             {"coset_count", r.coset_count},
             {"ed_count", r.ed_count},
             {"omega", r.omega},
             {"order", r.order},
             {"sigma_size", r.sigma_size},
             {"all_binomial_t1", r.all_binomial_t1}};
}
inline void from_json(const Json& j, SurveyRecord& r) {
    j.at("n").get_to(r.n);
    j.at("q").get_to(r.q);
    j.at("coset_count").get_to(r.coset_count);
    j.at("ed_count").get_to(r.ed_count);
    j.at("omega").get_to(r.omega);
    j.at("order").get_to(r.order);
    j.at("sigma_size").get_to(r.sigma_size);
    j.at("all_binomial_t1").get_to(r.all_binomial_t1);
}

/// Envelope shared by every command: schema_version, command, echoed inputs, payload.
template <class Payload>
Json make_envelope(const std::string& command, const Json& inputs, const Payload& payload) {
    return Json{{"schema_version", schema_version}, {"command", command}, {"inputs", inputs}, {"payload", payload}};
}

}  // namespace cyclo

#endif  // CYCLO_SERIALIZE_HPP
