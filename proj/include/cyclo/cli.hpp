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

#ifndef CYCLO_CLI_HPP
#define CYCLO_CLI_HPP

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cosets.hpp"
#include "equal_difference.hpp"
#include "fields.hpp"
#include "leaders.hpp"
#include "serialize.hpp"

namespace cyclo::cli {

enum ExitCode : int { ok = 0, input_error = 2, resource_guard = 3, invariant_violation = 4 };

/// Lists longer than this are elided in human-readable output unless --full is given.
inline constexpr std::size_t elision_cap = 64;

/// The CLI refuses coset enumeration above this n (a seen-mask of n bits is kept).
inline constexpr u64 enumeration_limit = u64{1} << 28;

/// Rows per batch handed to the survey workers; output is flushed per batch, in order.
inline constexpr std::size_t survey_batch = 1024;

struct VerifyMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GlobalFlags {
    bool json = false;
    bool quiet = false;
    bool full = false;
};

inline std::string format_list(const std::vector<u64>& v, bool full) {
    std::ostringstream os;
    os << '{';
    const std::size_t shown = full ? v.size() : std::min(v.size(), elision_cap);
    for (std::size_t i = 0; i < shown; ++i) os << (i ? ", " : "") << v[i];
    if (shown < v.size()) os << ", ... (tau=" << v.size() << ")";
    os << '}';
    return os.str();
}

inline std::string format_binomial(const SymbolicBinomial& b) {
    std::ostringstream os;
    os << "X";
    if (b.degree != 1) os << '^' << b.degree;
    os << (b.sign > 0 ? " - " : " + ") << "zeta^" << b.constant_exponent;
    return os.str();
}

inline std::string format_field_poly(const FieldPoly& f) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = f.coefficients().size(); i-- > 0;) {
        const auto& c = f.coefficients()[i];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << '[';
        for (std::size_t k = 0; k < c.residue().size(); ++k) os << (k ? " " : "") << c.residue()[k];
        os << ']';
        if (i == 1) os << "*X";
        if (i > 1) os << "*X^" << i;
    }
    if (first) os << '0';
    return os.str();
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

inline Json context_inputs(u64 n, u64 q) { return Json{{"n", n}, {"q", q}}; }

// --- subcommands -----------------------------------------------------------

inline int cmd_cosets(u64 q, u64 n, const GlobalFlags& g, std::ostream& out) {
    const auto ctx = CosetContext::make(n, q);
    CosetsPayload p{n, ctx.q_string(), {}};
    for_each_coset(ctx, [&](CyclotomicCoset&& c) { p.cosets.push_back(make_coset_record(c)); }, enumeration_limit);
    if (g.json) {
        emit(out, make_envelope("cosets", context_inputs(n, q), p));
        return ok;
    }
    if (!g.quiet) out << "q = " << p.q << ", n = " << n << ": " << p.cosets.size() << " cosets\n";
    out << std::setw(10) << "leader" << std::setw(8) << "size" << std::setw(5) << "ED" << std::setw(10) << "diff"
        << "  elements\n";
    for (const auto& r : p.cosets) {
        out << std::setw(10) << r.leader << std::setw(8) << r.size << std::setw(5) << yes_no(r.is_ed) << std::setw(10)
            << (r.common_difference ? std::to_string(*r.common_difference) : "-") << "  "
            << format_list(r.elements, g.full) << '\n';
    }
    return ok;
}

inline void print_ed_record(std::ostream& out, const EdRecord& r) {
    out << "  leader " << r.leader << ": tau = " << r.tau << ", n_gamma = " << r.n_gamma
        << ", rad(n_gamma) = " << r.rad_n_gamma << ", q mod 4 = " << r.q_mod_4 << '\n'
        << "    rad(n_gamma) | q - 1: " << yes_no(r.radical_divides) << '\n'
        << "    8 | n_gamma: " << yes_no(r.eight_divides);
    if (r.eight_divides) out << ", so q = 1 (mod 4) must hold: " << yes_no(r.mod4_condition);
    out << '\n'
        << "    omega_gamma = " << r.omega << '\n'
        << "    verdict: " << (r.is_ed ? "equal-difference, common difference " + std::to_string(*r.common_difference)
                                      : std::string("not equal-difference"))
        << '\n';
}

inline int cmd_ed(u64 q, u64 n, std::optional<i64> gamma, const GlobalFlags& g, std::ostream& out) {
    const auto ctx = CosetContext::make(n, q);
    EdPayload p{n, ctx.q_string(), gamma, std::nullopt, {}};
    if (gamma) {
        p.cosets.push_back(make_ed_record(coset_of(ctx, *gamma)));
    } else {
        const auto v = all_cosets_ed(ctx);
        p.global = EdGlobalRecord{v.all_ed,           v.radical_divides, v.mod4_condition,
                                  v.reason,           omega_global(ctx), multiplicative_order(ctx.multiplier(), n)};
        for_each_coset(ctx, [&](CyclotomicCoset&& c) { p.cosets.push_back(make_ed_record(c)); }, enumeration_limit);
    }
    if (g.json) {
        auto in = context_inputs(n, q);
        in["gamma"] = gamma ? Json(*gamma) : Json(nullptr);
        emit(out, make_envelope("ed", in, p));
        return ok;
    }
    if (p.global) {
        out << "q = " << p.q << ", n = " << n << ": all cosets equal-difference: " << yes_no(p.global->all_ed) << '\n';
        out << "  rad(n) | q - 1: " << yes_no(p.global->radical_divides)
            << "; q = 1 (mod 4) if 8 | n: " << yes_no(p.global->mod4_condition) << '\n';
        if (!p.global->reason.empty()) out << "  " << p.global->reason << '\n';
        out << "  omega = " << p.global->omega << ", ord_n(q) = " << p.global->order << '\n';
        if (g.quiet) return ok;
    } else {
        out << "q = " << p.q << ", n = " << n << ", gamma = " << *gamma << '\n';
    }
    for (const auto& r : p.cosets) print_ed_record(out, r);
    return ok;
}

inline int cmd_mer(u64 q, u64 n, i64 gamma, std::optional<u64> t, const GlobalFlags& g, std::ostream& out) {
    const auto ctx = CosetContext::make(n, q);
    const auto c = coset_of(ctx, gamma);
    const u64 omega = omega_gamma(c);
    const auto sigma = sigma_set(c.size(), omega);
    MerPayload p{n, ctx.q_string(), gamma, c.leader(), c.size(), omega, sigma.members, {}};
    if (t) {
        if (*t == 0) throw std::invalid_argument("t must be positive");
        if (*t % omega != 0)
            throw std::invalid_argument("t = " + std::to_string(*t) + " is not in Sigma: omega_gamma = " +
                                        std::to_string(omega) + " does not divide t");
        if (c.size() % *t != 0)
            throw std::invalid_argument("t = " + std::to_string(*t) + " is not in Sigma: t does not divide tau = " +
                                        std::to_string(c.size()));
        auto d = cyclotomic_decomposition(c, *t);
        if (!d.all_ed()) throw TheoryViolation("decomposition at a Sigma member has a non-ED component");
        p.decompositions.push_back(make_decomposition_record(d));
    } else {
        for (const auto& [tt, d] : mer_set(c).representations) p.decompositions.push_back(make_decomposition_record(d));
    }
    if (g.json) {
        auto in = context_inputs(n, q);
        in["gamma"] = gamma;
        in["t"] = t ? Json(*t) : Json(nullptr);
        emit(out, make_envelope("mer", in, p));
        return ok;
    }
    if (!g.quiet)
        out << "coset of " << gamma << " (leader " << p.leader << "), q = " << p.q << ", n = " << n << ": tau = " << p.tau
            << ", omega_gamma = " << omega << '\n';
    out << "Sigma = " << format_list(p.sigma, true) << '\n';
    for (const auto& d : p.decompositions) {
        out << "t = " << d.t << ": " << d.t_prime << " components\n";
        for (const auto& r : d.components)
            out << "  leader " << r.leader << ", size " << r.size << ", diff "
                << (r.common_difference ? std::to_string(*r.common_difference) : "-") << "  "
                << format_list(r.elements, g.full) << '\n';
    }
    return ok;
}

inline int cmd_factor(u64 q, u64 n, u64 t, bool symbolic, unsigned max_bits, const GlobalFlags& g,
                      std::ostream& out) {
    const auto ctx = CosetContext::make(n, q);
    if (n > enumeration_limit)
        throw ResourceLimitExceeded("factorization for n = " + std::to_string(n) + " exceeds the enumeration limit");
    FactorReport r = symbolic ? symbolic_factorization(ctx, t) : factor_xn_minus_1(ctx, t, FieldLimits{max_bits});
    const auto p = make_factor_payload(r);
    if (g.json) {
        auto in = context_inputs(n, q);
        in["ext"] = t;
        in["symbolic"] = symbolic;
        emit(out, make_envelope("factor", in, p));
        return ok;
    }
    if (!g.quiet) {
        out << "X^" << n << " - 1 over F_(" << p.q << "^" << t << "): " << p.factors.size() << " factors\n";
        out << "  all binomial: " << yes_no(p.all_binomial) << " (omega = " << p.omega
            << ", predicted: " << yes_no(p.predicted_all_binomial) << ")";
        if (p.concrete) out << ", verified: " << yes_no(p.verified);
        out << '\n';
        if (r.field)
            out << "  splitting field F_" << r.field->characteristic() << "^" << r.field->degree() << " = F_"
                << r.field->characteristic() << "[a]/(" << r.field->modulus() << ")\n";
    }
    for (std::size_t i = 0; i < r.factors.size(); ++i) {
        const auto& f = r.factors[i];
        out << "  leader " << f.leader << ", degree " << f.degree << ": ";
        if (f.base_poly)
            out << *f.base_poly;
        else if (f.poly)
            out << format_field_poly(*f.poly);
        else if (f.binomial)
            out << format_binomial(*f.binomial);
        else
            out << "(not binomial)";
        if (f.binomial && (f.base_poly || f.poly)) out << "   = " << format_binomial(*f.binomial);
        out << '\n';
    }
    return ok;
}

inline int cmd_leader(u64 q, u64 n, i64 gamma, bool verify, const GlobalFlags& g, std::ostream& out,
                      std::ostream& err) {
    const auto ctx = CosetContext::make(n, q);
    const u64 g0 = reduce_residue(gamma, n);
    const u64 n_gamma = n / std::gcd(g0, n);
    LeaderPayload p;
    p.n = n;
    p.q = ctx.q_string();
    p.gamma = gamma;
    p.tau = multiplicative_order(ctx.q_mod(n_gamma), n_gamma);
    p.omega = omega_for_modulus(ctx, n_gamma);
    p.result = leader_fast(ctx, g0);
    if (p.result.diagnostic && !g.quiet) err << "warning: " << *p.result.diagnostic << '\n';
    if (verify) {
        p.bruteforce_leader = leader_bruteforce(ctx, g0).leader;
        p.verified = *p.bruteforce_leader == p.result.leader;
    }
    if (g.json) {
        auto in = context_inputs(n, q);
        in["gamma"] = gamma;
        in["verify"] = verify;
        emit(out, make_envelope("leader", in, p));
    } else if (g.quiet) {
        out << p.result.leader << '\n';
    } else {
        out << "leader of the coset of " << gamma << " (q = " << p.q << ", n = " << n << "): " << p.result.leader << '\n';
        out << "  tau = " << p.tau << ", omega_gamma = " << p.omega << ", method = " << to_string(p.result.method);
        if (p.result.window_modulus) out << ", window modulus = " << *p.result.window_modulus;
        out << '\n';
        if (!p.result.window_values.empty()) out << "  window values " << format_list(p.result.window_values, g.full) << '\n';
        if (verify) out << "  brute force: " << *p.bruteforce_leader << (*p.verified ? " (agrees)" : " (MISMATCH)") << '\n';
    }
    if (p.verified && !*p.verified)
        throw VerifyMismatch("fast leader " + std::to_string(p.result.leader) + " differs from brute force " +
                             std::to_string(*p.bruteforce_leader));
    return ok;
}

inline unsigned resolve_workers(std::optional<unsigned> flag) {
    if (flag) {
        if (*flag == 0) throw std::invalid_argument("--workers must be positive");
        return *flag;
    }
    if (const char* env = std::getenv("WORKERS"); env && *env) {
        try {
            std::size_t pos = 0;
            const long v = std::stol(env, &pos);
            if (pos != std::string(env).size() || v <= 0) throw std::invalid_argument("bad");
            return static_cast<unsigned>(v);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("WORKERS must be a positive integer, got '") + env + "'");
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// One line-delimited record per admissible n in [from, to], in increasing n regardless of workers.
inline void run_survey(u64 q, u64 from, u64 to, unsigned workers, std::ostream& sink, std::ostream& log, bool quiet,
                       u64* written = nullptr) {
    if (from == 0) throw std::invalid_argument("--n-from must be positive");
    if (from > to) throw std::invalid_argument("--n-from must not exceed --n-to");
    const auto probe = CosetContext::make(1, q);  // validates q
    const u64 p = probe.characteristic(), k = probe.exponent();
    u64 count = 0;
    std::vector<u64> batch;
    auto flush = [&] {
        std::vector<std::string> lines(batch.size());
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto work = [&] {
            for (std::size_t i = next++; i < batch.size(); i = next++) {
                try {
                    const auto ctx = CosetContext::from_prime_power(batch[i], p, k);
                    Json rec = make_survey_record(ctx);
                    rec["schema_version"] = schema_version;
                    lines[i] = rec.dump();
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            }
        };
        const unsigned w = std::min<std::size_t>(workers, batch.size());
        std::vector<std::thread> pool;
        for (unsigned i = 1; i < w; ++i) pool.emplace_back(work);
        work();
        for (auto& th : pool) th.join();
        if (failure) std::rethrow_exception(failure);
        for (const auto& l : lines) sink << l << '\n';
        count += batch.size();
        batch.clear();
    };
    for (u64 n = from;; ++n) {
        if (n % p == 0) {
            if (!quiet) log << "skip n = " << n << ": gcd(n, q) != 1\n";
        } else {
            if (n > enumeration_limit)
                throw ResourceLimitExceeded("survey n = " + std::to_string(n) + " exceeds the enumeration limit");
            batch.push_back(n);
            if (batch.size() == survey_batch) flush();
        }
        if (n == to) break;
    }
    if (!batch.empty()) flush();
    sink.flush();
    if (written) *written = count;
}

inline int cmd_survey(u64 q, u64 from, u64 to, const std::string& path, std::optional<unsigned> workers_flag,
                      const GlobalFlags& g, std::ostream& out, std::ostream& err) {
    const unsigned workers = resolve_workers(workers_flag);
    CosetContext::make(1, q);
    if (from == 0 || from > to) throw std::invalid_argument("require 1 <= --n-from <= --n-to");
    std::ofstream file(path, std::ios::out | std::ios::trunc);
    if (!file) throw std::invalid_argument("cannot open output path '" + path + "' for writing");
    u64 written = 0;
    run_survey(q, from, to, workers, file, err, g.quiet, &written);
    if (!file) throw std::invalid_argument("write to '" + path + "' failed");
    if (g.json)
        emit(out, Json{{"schema_version", schema_version},
                       {"command", "survey"},
                       {"inputs", Json{{"q", q}, {"n_from", from}, {"n_to", to}, {"out", path}}},
                       {"payload", Json{{"records", written}, {"workers", workers}}}});
    else if (!g.quiet)
        out << "wrote " << written << " records to " << path << " (" << workers << " workers)\n";
    return ok;
}

// --- dispatch ----------------------------------------------------------------

/// Parses argv and runs one subcommand. Returns the process exit code.
inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Cyclotomic cosets, equal-difference structure, factorization of X^n - 1, coset leaders", "cyclo"};
    app.require_subcommand(1);
    GlobalFlags g;
    app.add_flag("--json", g.json, "machine-readable output");
    app.add_flag("--quiet", g.quiet, "suppress headers and logs");
    app.add_flag("--full", g.full, "never elide long element lists");

    u64 q = 0, n = 0;
    i64 gamma = 0;
    auto add_qn = [&](CLI::App* sub) {
        sub->add_option("--q", q, "prime power base q")->required();
        sub->add_option("--n", n, "modulus n")->required();
    };

    auto* cosets = app.add_subcommand("cosets", "list the q-cyclotomic cosets modulo n")->fallthrough();
    add_qn(cosets);

    auto* ed = app.add_subcommand("ed", "equal-difference criterion report")->fallthrough();
    add_qn(ed);
    auto* ed_gamma = ed->add_option("--gamma", gamma, "coset representative (any integer)");

    auto* mer = app.add_subcommand("mer", "multiple equal-difference representations of one coset")->fallthrough();
    add_qn(mer);
    mer->add_option("--gamma", gamma, "coset representative (any integer)")->required();
    u64 mer_t = 0;
    auto* mer_t_opt = mer->add_option("--t", mer_t, "extension exponent in Sigma");

    auto* factor = app.add_subcommand("factor", "factor X^n - 1 over F_(q^t)")->fallthrough();
    add_qn(factor);
    u64 ext = 1;
    bool symbolic = false;
    unsigned max_bits = FieldLimits{}.max_field_bits;
    factor->add_option("--ext", ext, "extension exponent t (default 1)");
    factor->add_flag("--symbolic", symbolic, "binomial records only, no field arithmetic");
    factor->add_option("--max-field-bits", max_bits, "refuse splitting fields larger than 2^bits (default 64)")
        ->check(CLI::Range(1u, 100000u));

    auto* leader = app.add_subcommand("leader", "coset leader by the omega_gamma window")->fallthrough();
    add_qn(leader);
    leader->add_option("--gamma", gamma, "coset representative (any integer)")->required();
    bool verify = false;
    leader->add_flag("--verify", verify, "compare against brute force");

    auto* survey = app.add_subcommand("survey", "line-delimited statistics for a range of n")->fallthrough();
    survey->add_option("--q", q, "prime power base q")->required();
    u64 from = 0, to = 0;
    std::string path;
    unsigned workers = 0;
    survey->add_option("--n-from", from, "first modulus (inclusive)")->required();
    survey->add_option("--n-to", to, "last modulus (inclusive)")->required();
    survey->add_option("--out", path, "output file")->required();
    auto* workers_opt = survey->add_option("--workers", workers, "worker threads (default: WORKERS or all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    }

    try {
        if (cosets->parsed()) return cmd_cosets(q, n, g, out);
        if (ed->parsed()) return cmd_ed(q, n, ed_gamma->count() ? std::optional<i64>(gamma) : std::nullopt, g, out);
        if (mer->parsed()) return cmd_mer(q, n, gamma, mer_t_opt->count() ? std::optional<u64>(mer_t) : std::nullopt, g, out);
        if (factor->parsed()) return cmd_factor(q, n, ext, symbolic, max_bits, g, out);
        if (leader->parsed()) return cmd_leader(q, n, gamma, verify, g, out, err);
        if (survey->parsed())
            return cmd_survey(q, from, to, path, workers_opt->count() ? std::optional<unsigned>(workers) : std::nullopt,
                              g, out, err);
    } catch (const ResourceLimitExceeded& e) {
        err << "error: resource limit: " << e.what() << '\n';
        return resource_guard;
    } catch (const TheoryViolation& e) {
        err << "error: invariant violation: " << e.what() << '\n';
        return invariant_violation;
    } catch (const VerifyMismatch& e) {
        err << "error: verification failed: " << e.what() << '\n';
        return invariant_violation;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    }
    err << "error: no subcommand\n";
    return input_error;
}

}  // namespace cyclo::cli

#endif  // CYCLO_CLI_HPP
