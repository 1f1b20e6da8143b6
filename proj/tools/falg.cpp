/*
   Copyright 2026 The falg authors

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

// falg: batch front end for the seminorm-algebra library.
//
// Exit codes: 0 = all checked properties held, 1 = a violation was found,
// 2 = configuration or budget error.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "falg/falg.hpp"

namespace {

using namespace falg;

constexpr int kExitHeld = 0;
constexpr int kExitViolation = 1;
constexpr int kExitConfig = 2;

struct Common {
    uint64_t seed = 1;
    std::string out;   // generic output path (CSV for experiments, JSON for ops)
    std::string csv;   // explicit CSV path; wins over --out for experiments
    std::string mode = "exact";
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--seed", c.seed, "random seed (64-bit)");
    sub->add_option("--out", c.out, "output path");
    sub->add_option("--csv", c.csv, "CSV output path");
    sub->add_option("--mode", c.mode, "coefficient mode: exact|numeric")
        ->check(CLI::IsMember({"exact", "numeric"}));
}

std::string csv_path(const Common& c) { return c.csv.empty() ? c.out : c.csv; }

void emit_json(const Json& j, const std::string& out) {
    if (out.empty())
        std::cout << j.dump(2) << "\n";
    else
        save_json(out, j);
}

std::vector<Complex> parse_targets(const std::string& s) {
    std::vector<Complex> t;
    std::string cur;
    for (char ch : s + ",") {
        if (ch == ',') {
            if (!cur.empty()) t.emplace_back(std::stod(cur), 0.0);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (t.empty()) throw ConfigError("no targets given");
    return t;
}

// Derivation specs for module elements: "zero", "partial:<i>" (series-valued
// modules), "point1" (order-1 point derivation at 1, scalar-valued modules).
template <class C, class M>
Derivation<C, M> parse_derivation_self(const std::string& spec, const ModuleContext<C, M>& ctx) {
    if (spec == "zero") return zero_derivation(ctx);
    if (spec.rfind("partial:", 0) == 0) {
        const unsigned i = unsigned(std::stoul(spec.substr(8)));
        return partial_derivation<C>(i);
    }
    throw ConfigError("derivation '" + spec + "' is not valid for a series-valued module");
}

template <class C>
Derivation<C, C> parse_derivation_char(const std::string& spec, const ModuleContext<C, C>& ctx) {
    if (spec == "zero") return zero_derivation(ctx);
    if (spec == "point1") return point_derivation_order1<C>();
    throw ConfigError("derivation '" + spec + "' is not valid for a scalar-valued module");
}

// --- qkd / theta ----------------------------------------------------------

template <class C>
int qkd_on_file(const Json& j, unsigned k, const std::string& dspec,
                SeminormConvention conv, const std::string& out) {
    const std::string action = json_action(j);
    Json result{{"k", k}};
    if (action == "self") {
        SeminormFamily<C> fam = make_tau_c_family<C>();
        auto ctx = make_self_context<C>(fam, 16);
        const auto u = self_element_from_json<C>(j);
        const auto D = parse_derivation_self<C>(dspec, ctx);
        const auto a = q_k(u, k, ctx, conv);
        const auto b = q_kD(u, k, D, ctx, conv);
        result["family"] = family_kind_name(fam.kind);
        result["q_k"] = scalar_traits<C>::real_to_double(a);
        result["q_kD"] = scalar_traits<C>::real_to_double(b);
        if constexpr (scalar_traits<C>::is_exact) {
            result["q_k_exact"] = rational_string(a);
            result["q_kD_exact"] = rational_string(b);
        }
    } else {
        if constexpr (scalar_traits<C>::is_exact) {
            throw ConfigError("evaluation-at-1 modules use the sampled disc family; "
                              "re-encode the element in numeric mode");
        } else {
            auto fam = make_disc_sup_family();
            auto ctx = make_character_context<C>(fam, 16);
            const auto u = char_element_from_json<C>(j);
            const auto D = parse_derivation_char<C>(dspec, ctx);
            result["family"] = family_kind_name(fam.kind);
            result["q_k"] = q_k(u, k, ctx, conv);
            result["q_kD"] = q_kD(u, k, D, ctx, conv);
        }
    }
    result["derivation"] = dspec;
    emit_json(result, out);
    return kExitHeld;
}

template <class C>
int theta_on_file(const Json& j, const std::string& dspec, const std::string& out) {
    const std::string action = json_action(j);
    if (action == "self") {
        auto ctx = make_self_context<C>(make_tau_c_family<C>(), 16);
        const auto u = self_element_from_json<C>(j);
        const auto D = parse_derivation_self<C>(dspec, ctx);
        const auto v = theta_D(u, D);
        emit_json(module_to_json(v), out);
    } else {
        // The twist itself is exact in either mode; the seminorm family in
        // the context is irrelevant here, so tau_c serves both.
        auto ctx = make_character_context<C>(make_tau_c_family<C>(), 16);
        const auto u = char_element_from_json<C>(j);
        const auto D = parse_derivation_char<C>(dspec, ctx);
        emit_json(module_to_json(theta_D(u, D)), out);
    }
    return kExitHeld;
}

// --- leibniz-check --------------------------------------------------------

int leibniz_check(uint64_t seed, unsigned rank, unsigned trials, bool perturb) {
    const auto D = taylor_higher_derivation<ExactScalar>();
    auto Dp = perturb_higher_component<ExactScalar>(
        D, 2, Monomial::variable(0, 1), ExactScalar(1));
    Rng rng(seed * 1000003ULL + 12007ULL);
    const int trunc = 2 * 8 + 1;
    unsigned long nonzero = 0;
    for (unsigned t = 0; t < trials; ++t) {
        PowerSeries<ExactScalar> x = PowerSeries<ExactScalar>::zero(trunc);
        PowerSeries<ExactScalar> y = x;
        if (perturb && t == 0) {
            // Canonical witness pair: the perturbed second component differs
            // on the degree-1 monomial, so (z, z) exposes the defect at s = 2.
            x = PowerSeries<ExactScalar>::variable(0, trunc);
            y = x;
        } else {
            x = random_univariate<ExactScalar>(rng, 8, trunc);
            y = random_univariate<ExactScalar>(rng, 8, trunc);
        }
        for (unsigned s = 1; s <= rank; ++s) {
            const ExactScalar defect =
                higher_leibniz_defect(perturb ? Dp : D, x, y, s);
            if (!scalar_traits<ExactScalar>::is_zero(defect)) ++nonzero;
        }
    }
    std::cout << "trials=" << trials << " rank=" << rank
              << " nonzero_defects=" << nonzero << "\n";
    return nonzero == 0 ? kExitHeld : kExitViolation;
}

// --- armul ----------------------------------------------------------------

template <class C>
int armul_typed(const Json& jx, const Json& jy, const std::string& out) {
    const auto x = ar_from_json<C>(jx);
    const auto y = ar_from_json<C>(jy);
    emit_json(ar_to_json(ar_mul(x, y)), out);
    return kExitHeld;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"falg: graded seminorms, module extensions, derivation twists"};
    app.require_subcommand(1);

    // submult / submult-probe
    Common c_sub, c_probe;
    unsigned sub_trials = 10000, probe_trials = 400;
    bool sub_control = false, probe_control = false;
    auto* sub = app.add_subcommand("submult", "submultiplicativity suite");
    add_common(sub, c_sub);
    sub->add_option("--trials", sub_trials, "total random pairs");
    sub->add_flag("--negative-control", sub_control, "inject a non-submultiplicative functional");
    auto* probe = app.add_subcommand("submult-probe", "quick submultiplicativity probe");
    add_common(probe, c_probe);
    probe->add_option("--trials", probe_trials, "total random pairs");
    probe->add_flag("--negative-control", probe_control,
                    "inject a non-submultiplicative functional");

    // dichotomy
    Common c_dich;
    unsigned dich_n = 20;
    auto* dich = app.add_subcommand("dichotomy", "twisted vs untwisted seminorm demo");
    add_common(dich, c_dich);
    dich->add_option("--n", dich_n, "witness stages");

    // radical
    Common c_rad;
    unsigned rad_rank = 6, rad_square = 1000, rad_R = 16;
    auto* rad = app.add_subcommand("radical", "nilpotency and quasinilpotency report");
    add_common(rad, c_rad);
    rad->add_option("--rank-max", rad_rank, "largest finite rank");
    rad->add_option("--square-trials", rad_square, "random square-zero checks");
    rad->add_option("--R", rad_R, "certificate truncation");

    // gamma
    Common c_gam;
    std::string gam_rule;
    unsigned gam_K = 32, gam_lo = 1, gam_hi = 10;
    auto* gam = app.add_subcommand("gamma", "weight-sequence classifier tables");
    add_common(gam, c_gam);
    gam->add_option("--rule", gam_rule,
                    "factorial | k_pow_i_factorial:k0 | factorial_power:e | explicit:a,b,...");
    gam->add_option("--K", gam_K, "table depth");
    gam->add_option("--k0-lo", gam_lo, "doubly indexed family: lowest k0");
    gam->add_option("--k0-hi", gam_hi, "doubly indexed family: highest k0");

    // approx
    Common c_apx;
    std::string apx_targets = "1,-2,3";
    unsigned apx_n = 10;
    auto* apx = app.add_subcommand("approx", "constrained min-norm approximation table");
    add_common(apx, c_apx);
    apx->add_option("--targets", apx_targets, "comma-separated derivative targets");
    apx->add_option("--n", apx_n, "number of levels");

    // spectral
    Common c_spec;
    std::string spec_elem;
    unsigned spec_k = 8, spec_n = 32;
    auto* spc = app.add_subcommand("spectral", "spectral radius root-sequence table");
    add_common(spc, c_spec);
    spc->add_option("--element", spec_elem, "series JSON file")->required();
    spc->add_option("--k", spec_k, "top seminorm level");
    spc->add_option("--n", spec_n, "power count per level");

    // qkd
    Common c_qkd;
    std::string qkd_elem, qkd_deriv = "zero", qkd_conv = "plain";
    unsigned qkd_k = 1;
    auto* qkd = app.add_subcommand("qkd", "evaluate q_k and q_{k,D} on a module element");
    add_common(qkd, c_qkd);
    qkd->add_option("--element", qkd_elem, "module element JSON file")->required();
    qkd->add_option("--k", qkd_k, "seminorm level");
    qkd->add_option("--derivation", qkd_deriv, "zero | partial:<i> | point1");
    qkd->add_option("--conv", qkd_conv, "seminorm convention: plain|scaled")
        ->check(CLI::IsMember({"plain", "scaled"}));

    // theta
    Common c_th;
    std::string th_elem, th_deriv = "zero";
    auto* th = app.add_subcommand("theta", "apply the graph twist to a module element");
    add_common(th, c_th);
    th->add_option("--element", th_elem, "module element JSON file")->required();
    th->add_option("--derivation", th_deriv, "zero | partial:<i> | point1");

    // armul
    Common c_ar;
    std::string ar_x, ar_y;
    auto* ar = app.add_subcommand("armul", "multiply two tail-extension elements");
    add_common(ar, c_ar);
    ar->add_option("--x", ar_x, "left factor JSON file")->required();
    ar->add_option("--y", ar_y, "right factor JSON file")->required();

    // leibniz-check
    Common c_lz;
    unsigned lz_rank = 6, lz_trials = 200;
    bool lz_perturb = false;
    auto* lz = app.add_subcommand("leibniz-check", "higher Leibniz rule on random pairs");
    add_common(lz, c_lz);
    lz->add_option("--rank", lz_rank, "highest order checked");
    lz->add_option("--trials", lz_trials, "random pairs");
    lz->add_flag("--perturb", lz_perturb, "perturb one component (negative control)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sub->parsed() || probe->parsed()) {
            const Common& c = sub->parsed() ? c_sub : c_probe;
            ExperimentConfig cfg;
            cfg.name = sub->parsed() ? "submult" : "submult-probe";
            cfg.mode = c.mode;
            cfg.seed = c.seed;
            cfg.trials = sub->parsed() ? sub_trials : probe_trials;
            cfg.negative_control = sub->parsed() ? sub_control : probe_control;
            cfg.out_csv = csv_path(c);
            const SubmultSummary s = run_submult_suite(cfg);
            std::cout << "pairs=" << s.pairs << " violations=" << s.violations
                      << " max_rel_violation=" << fmt_g(s.max_rel_violation) << "\n";
            return s.violations == 0 ? kExitHeld : kExitViolation;
        }
        if (dich->parsed()) {
            ExperimentConfig cfg;
            cfg.name = "dichotomy";
            cfg.mode = c_dich.mode;
            cfg.seed = c_dich.seed;
            cfg.n_max = dich_n;
            cfg.out_csv = csv_path(c_dich);
            const DichotomySummary s = run_dichotomy_demo(cfg);
            std::cout << "untwisted_last=" << fmt_g(s.untwisted_last)
                      << " twisted_min=" << fmt_g(s.twisted_min)
                      << " control_last=" << fmt_g(s.control_last)
                      << " partial_control_ok=" << (s.partial_control_ok ? 1 : 0) << "\n";
            const bool held = s.partial_control_ok &&
                              s.untwisted_last < 1.0 / double(dich_n) &&
                              s.twisted_min >= 0.9;
            return held ? kExitHeld : kExitViolation;
        }
        if (rad->parsed()) {
            ExperimentConfig cfg;
            cfg.name = "radical";
            cfg.mode = c_rad.mode;
            cfg.seed = c_rad.seed;
            cfg.rank_max = rad_rank;
            cfg.square_trials = rad_square;
            cfg.R = rad_R;
            cfg.out_csv = csv_path(c_rad);
            const RadicalSummary s = run_radical_report(cfg);
            std::cout << "ranks_ok=" << (s.ranks_ok ? 1 : 0)
                      << " square_zero_failures=" << s.square_zero_failures
                      << " quasinil_certified=" << (s.quasinil_certified ? 1 : 0) << "\n";
            const bool held = s.ranks_ok && s.square_zero_failures == 0 && s.quasinil_certified;
            return held ? kExitHeld : kExitViolation;
        }
        if (gam->parsed()) {
            ExperimentConfig cfg;
            cfg.name = "gamma";
            cfg.mode = c_gam.mode;
            cfg.seed = c_gam.seed;
            cfg.rule = gam_rule;
            cfg.K = gam_K;
            cfg.k0_lo = gam_lo;
            cfg.k0_hi = gam_hi;
            cfg.out_csv = csv_path(c_gam);
            const GammaTableSummary s = run_gamma_table(cfg);
            for (const GammaReport& rep : s.reports)
                std::cout << rep.rule << " verdict=" << gamma_class_name(rep.verdict)
                          << (rep.exact ? " gamma=" + rational_string(rep.gamma_exact) : "")
                          << "\n";
            return kExitHeld;
        }
        if (apx->parsed()) {
            ExperimentConfig cfg;
            cfg.name = "approx";
            cfg.mode = c_apx.mode;
            cfg.seed = c_apx.seed;
            cfg.n_max = apx_n;
            cfg.out_csv = csv_path(c_apx);
            const auto targets = parse_targets(apx_targets);
            const ApproxTableSummary s = run_approx_table(cfg, targets);
            std::cout << "levels=" << s.certs.size() << " all_met=" << (s.all_met ? 1 : 0)
                      << "\n";
            return s.all_met ? kExitHeld : kExitViolation;
        }
        if (spc->parsed()) {
            ExperimentConfig cfg;
            cfg.name = "spectral";
            cfg.mode = c_spec.mode;
            cfg.seed = c_spec.seed;
            cfg.out_csv = csv_path(c_spec);
            const Json j = load_json(spec_elem);
            const AnySeries any = any_series_from_json(j);
            return std::visit(
                [&](const auto& x) {
                    using C = typename std::decay_t<decltype(x)>::coeff_type;
                    const auto sum = run_spectral_table<C>(cfg, x, spec_k, spec_n);
                    for (const SpectralReport& rep : sum.reports)
                        std::cout << "verdict=" << verdict_name(rep.verdict)
                                  << " estimate=" << fmt_g(rep.estimate) << "\n";
                    return kExitHeld;
                },
                any);
        }
        if (qkd->parsed()) {
            const Json j = load_json(qkd_elem);
            const SeminormConvention conv =
                qkd_conv == "scaled" ? SeminormConvention::scaled : SeminormConvention::plain;
            const std::string mode = json_need(j, "a").value("mode", "exact");
            if (mode == "numeric")
                return qkd_on_file<Complex>(j, qkd_k, qkd_deriv, conv, c_qkd.out);
            return qkd_on_file<ExactScalar>(j, qkd_k, qkd_deriv, conv, c_qkd.out);
        }
        if (th->parsed()) {
            const Json j = load_json(th_elem);
            const std::string mode = json_need(j, "a").value("mode", "exact");
            if (mode == "numeric") return theta_on_file<Complex>(j, th_deriv, c_th.out);
            return theta_on_file<ExactScalar>(j, th_deriv, c_th.out);
        }
        if (ar->parsed()) {
            const Json jx = load_json(ar_x);
            const Json jy = load_json(ar_y);
            const std::string mode = json_need(jx, "a").value("mode", "exact");
            if (mode == "numeric") return armul_typed<Complex>(jx, jy, c_ar.out);
            return armul_typed<ExactScalar>(jx, jy, c_ar.out);
        }
        if (lz->parsed()) return leibniz_check(c_lz.seed, lz_rank, lz_trials, lz_perturb);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitConfig;
}
