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

// Acceptance gate: every release-blocking property of the library, checked
// end to end at full advertised sizes. One line per criterion; the process
// exits nonzero if any criterion fails or overruns its time budget.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include "oracle.hpp"

using namespace falg;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void criterion(int idx, const std::string& label, double budget_s,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    const double dt =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (ok && budget_s > 0.0 && dt >= budget_s) {
        ok = false;
        detail = "runtime " + std::to_string(dt) + " s exceeds budget";
    }
    std::printf("criterion %d [%s] (%.2f s) %s%s%s\n", idx, ok ? "PASS" : "FAIL", dt,
                label.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_cli(const std::string& args, const fs::path& log) {
    const std::string cmd =
        std::string(FALG_BIN) + " " + args + " > " + log.string() + " 2>&1";
    const int raw = std::system(cmd.c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

// --- criterion bodies ------------------------------------------------------

bool weight_limit_exactness(std::string& detail) {
    for (unsigned k0 = 1; k0 <= 10; ++k0) {
        const WeightSequence M = WeightSequence::k_pow_i_factorial_rule(k0, 24);
        if (!validate_weights(M).valid) {
            detail = "weights invalid at k0=" + std::to_string(k0);
            return false;
        }
        const GammaReport rep = gamma_estimate(M, 24);
        if (!rep.exact || rational_string(rep.gamma_exact) != "1/" + std::to_string(k0) ||
            rep.verdict != GammaClass::semisimple) {
            detail = "limit not certified as 1/" + std::to_string(k0);
            return false;
        }
    }
    return true;
}

bool submultiplicativity_suite(std::string& detail) {
    ExperimentConfig cfg;
    cfg.name = "acceptance_submult";
    cfg.mode = "exact";
    cfg.seed = 2207;
    cfg.trials = 10000;
    const SubmultSummary s = run_submult_suite(cfg);
    if (s.pairs < 10000) {
        detail = "only " + std::to_string(s.pairs) + " pairs exercised";
        return false;
    }
    if (s.violations != 0) {
        detail = std::to_string(s.violations) + " violations, worst rel " +
                 std::to_string(s.max_rel_violation);
        return false;
    }
    return true;
}

bool twist_contract(std::string& detail) {
    const auto ctx = make_self_context<ExactScalar>(make_tau_c_family<ExactScalar>(), 12);
    const auto D = partial_derivation<ExactScalar>(0);
    const auto Dbad = perturb_on_monomial<ExactScalar, PowerSeries<ExactScalar>>(
        D, Monomial::variable(0), PowerSeries<ExactScalar>::one(12));
    Rng rng(314159);
    unsigned long breaks = 0;
    for (unsigned t = 0; t < 1000; ++t) {
        // Degrees <= 4 so products stay inside the window: the identities
        // below are about the algebra, not about truncation loss.
        const ModuleElement<ExactScalar, PowerSeries<ExactScalar>> u{
            random_series<ExactScalar>(rng, 2, 4, 4, 12),
            random_series<ExactScalar>(rng, 2, 4, 4, 12)};
        const ModuleElement<ExactScalar, PowerSeries<ExactScalar>> v{
            random_series<ExactScalar>(rng, 2, 4, 4, 12),
            random_series<ExactScalar>(rng, 2, 4, 4, 12)};
        for (unsigned k = 1; k <= 3; ++k) {
            if (q_k(theta_D(u, D), k, ctx) != q_kD(u, k, D, ctx) ||
                q_k(theta_D(v, D), k, ctx) != q_kD(v, k, D, ctx)) {
                detail = "isometry failed at trial " + std::to_string(t);
                return false;
            }
        }
        const auto uv = mod_mul(u, v, ctx, 12);
        if (!(theta_D(uv, D) == mod_mul(theta_D(u, D), theta_D(v, D), ctx, 12))) {
            detail = "multiplicativity failed at trial " + std::to_string(t);
            return false;
        }
        if (!(theta_D(uv, Dbad) == mod_mul(theta_D(u, Dbad), theta_D(v, Dbad), ctx, 12)))
            ++breaks;
    }
    if (breaks == 0) {
        detail = "negative control not detected";
        return false;
    }
    return true;
}

bool higher_leibniz_exactness(std::string& detail) {
    const auto D = taylor_higher_derivation<ExactScalar>();
    Rng rng(271828);
    for (unsigned t = 0; t < 1000; ++t) {
        const auto x = random_univariate<ExactScalar>(rng, 8, 17);
        const auto y = random_univariate<ExactScalar>(rng, 8, 17);
        for (unsigned s = 1; s <= 8; ++s) {
            if (!scalar_traits<ExactScalar>::is_zero(higher_leibniz_defect(D, x, y, s))) {
                detail = "nonzero defect at trial " + std::to_string(t) + ", order " +
                         std::to_string(s);
                return false;
            }
        }
    }
    return true;
}

bool radical_structure(std::string& detail) {
    ExperimentConfig cfg;
    cfg.name = "acceptance_radical";
    cfg.seed = 500;
    cfg.rank_max = 6;
    cfg.square_trials = 1000;
    cfg.R = 32;
    const RadicalSummary s = run_radical_report(cfg);
    if (!s.ranks_ok) {
        detail = "a tail generator missed its nilpotency index";
        return false;
    }
    if (s.square_zero_trials != 1000 || s.square_zero_failures != 0) {
        detail = std::to_string(s.square_zero_failures) + " square-zero failures";
        return false;
    }
    // The certificate must both rule nilpotency out within the budget and
    // certify every tail seminorm zero through level 32.
    const SpectralReport rep = quasinil_nonnil_certificate<ExactScalar>(32);
    if (!s.quasinil_certified || rep.verdict != SpectralVerdict::quasinilpotent_certified ||
        rep.nilpotency != 0 || rep.budget < 33 || rep.rows.size() != 32 * 33) {
        detail = "certificate incomplete: verdict " + verdict_name(rep.verdict);
        return false;
    }
    return true;
}

bool approximation_decay(std::string& detail) {
    const std::vector<Complex> targets{Complex(1.0, 0.0), Complex(-2.0, 0.0),
                                       Complex(3.0, 0.0)};
    const auto certs = diagonal_sequence(targets, 20);
    for (unsigned k = 1; k <= 20; ++k) {
        const ApproxCertificate& c = certs[k - 1];
        const double bound = 1.0 / double(k);
        if (!c.meets_bound || c.sup_measured * 1.01 >= bound) {
            detail = "sup bound missed at level " + std::to_string(k);
            return false;
        }
        if (c.residuals.size() != std::min<size_t>(k, targets.size())) {
            detail = "wrong residual count at level " + std::to_string(k);
            return false;
        }
        for (double r : c.residuals) {
            if (!(r < 1e-8)) {
                detail = "target residual " + std::to_string(r) + " at level " +
                         std::to_string(k);
                return false;
            }
        }
    }
    return true;
}

bool dichotomy_demo(std::string& detail) {
    ExperimentConfig cfg;
    cfg.name = "acceptance_dichotomy";
    cfg.seed = 707;
    cfg.n_max = 20;
    const DichotomySummary s = run_dichotomy_demo(cfg);
    if (s.stages != 20 || !s.partial_control_ok) {
        detail = "level-shift control rows failed";
        return false;
    }
    // First target is 1, so the twisted column must stay above 0.9 while the
    // untwisted column (and the zero-derivation control) fall below 1/20.
    if (!(s.untwisted_last < 1.0 / 20.0) || !(s.twisted_min >= 0.9) ||
        !(s.control_last < 1.0 / 20.0)) {
        detail = "columns: untwisted " + std::to_string(s.untwisted_last) + ", twisted min " +
                 std::to_string(s.twisted_min) + ", control " + std::to_string(s.control_last);
        return false;
    }
    return true;
}

bool oracle_equivalence(std::string& detail) {
    Rng rng(161803);
    for (unsigned t = 0; t < 500; ++t) {
        const auto f = random_series<ExactScalar>(rng, 3, 4, 5, 8);
        const auto g = random_series<ExactScalar>(rng, 3, 4, 5, 8);
        const auto F = oracle::DenseBox<ExactScalar>::from_series(f, 3, 9);
        const auto G = oracle::DenseBox<ExactScalar>::from_series(g, 3, 9);
        if (!oracle::box_add(F, G).matches(add(f, g))) {
            detail = "sum mismatch at trial " + std::to_string(t);
            return false;
        }
        if (!oracle::box_mul(F, G, 8).matches(mul(f, g, 8))) {
            detail = "product mismatch at trial " + std::to_string(t);
            return false;
        }
        const auto h = random_series<ExactScalar>(rng, 3, 4, 5, 12);
        const unsigned n = 2 + t % 2;
        const auto H = oracle::DenseBox<ExactScalar>::from_series(h, 3, 13);
        if (!oracle::box_pow(H, n, 12).matches(pow_certified(h, n))) {
            detail = "power mismatch at trial " + std::to_string(t);
            return false;
        }
        const unsigned r = 1 + t % 6;
        std::vector<ExactScalar> m(r), nn(r);
        for (unsigned i = 0; i < r; ++i) {
            m[i] = random_exact_scalar(rng);
            nn[i] = random_exact_scalar(rng);
        }
        const auto x = make_ar_element(PowerSeries<ExactScalar>::zero(4), m,
                                       RankSpec::finite(r));
        const auto y = make_ar_element(PowerSeries<ExactScalar>::zero(4), nn,
                                       RankSpec::finite(r));
        const auto expect = oracle::tail_convolve(m, nn, r);
        const auto got = ar_mul(x, y);
        if (!got.a.is_zero() || got.tail != expect) {
            detail = "tail convolution mismatch at trial " + std::to_string(t);
            return false;
        }
    }
    return true;
}

bool cli_determinism(std::string& detail) {
    const fs::path dir = fs::temp_directory_path() / "falg_acceptance";
    fs::create_directories(dir);
    const fs::path elem = dir / "elem.json";
    save_json(elem.string(), series_to_json(PowerSeries<ExactScalar>::variable(0, 12)));

    const std::vector<std::pair<std::string, std::string>> experiments{
        {"submult", "submult --trials 400 --seed 33"},
        {"submult_probe", "submult-probe --trials 200 --seed 33"},
        {"dichotomy", "dichotomy --n 8 --seed 33"},
        {"radical", "radical --rank-max 4 --square-trials 100 --R 16 --seed 33"},
        {"gamma_rule", "gamma --rule k_pow_i_factorial:2 --K 12 --seed 33"},
        {"gamma_family", "gamma --K 8 --k0-lo 1 --k0-hi 4 --seed 33"},
        {"approx", "approx --targets 1,-2,3 --n 8 --seed 33"},
        {"spectral", "spectral --element " + elem.string() + " --k 3 --n 6 --seed 33"},
    };
    bool ok = true;
    for (const auto& [tag, args] : experiments) {
        const fs::path a = dir / (tag + "_a.csv");
        const fs::path b = dir / (tag + "_b.csv");
        const int ca = run_cli(args + " --csv " + a.string(), dir / "log_a.txt");
        const int cb = run_cli(args + " --csv " + b.string(), dir / "log_b.txt");
        if (ca != 0 || cb != 0) {
            detail = tag + " exited " + std::to_string(ca) + "/" + std::to_string(cb);
            ok = false;
            break;
        }
        const std::string ba = slurp(a), bb = slurp(b);
        if (ba.empty() || ba != bb) {
            detail = tag + " runs differ";
            ok = false;
            break;
        }
    }
    fs::remove_all(dir);
    return ok;
}

}  // namespace

int main() {
    criterion(1, "closed-form weight limits exact for k0 = 1..10", 1.0,
              weight_limit_exactness);
    criterion(2, "submultiplicativity holds on 10000 random pairs across four families",
              60.0, submultiplicativity_suite);
    criterion(3, "graph twist is an isometry and multiplicative on 1000 pairs", 30.0,
              twist_contract);
    criterion(4, "higher Leibniz defect vanishes exactly, 1000 trials, orders <= 8", 30.0,
              higher_leibniz_exactness);
    criterion(5, "nilpotency indices, square-zero ideal, depth-32 certificate", 30.0,
              radical_structure);
    criterion(6, "diagonal approximants beat 1/k sup bounds with 1e-8 residuals", 60.0,
              approximation_decay);
    criterion(7, "twisted seminorm stays bounded below while untwisted decays", 60.0,
              dichotomy_demo);
    criterion(8, "sparse arithmetic matches the dense oracle on 500 cases", 30.0,
              oracle_equivalence);
    criterion(9, "every CLI experiment is byte-identical across same-seed runs", 0.0,
              cli_determinism);
    if (g_failures > 0) {
        std::printf("acceptance: %d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("acceptance: all 9 criteria passed\n");
    return 0;
}
