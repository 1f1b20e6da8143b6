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

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <catch2/catch_amalgamated.hpp>

#include "oracle.hpp"

using namespace falg;

namespace {
namespace fs = std::filesystem;

struct RunResult {
    int code = -1;
    std::string output;  // stdout + stderr
};

struct CliFixture {
    fs::path dir;
    CliFixture() : dir(fs::temp_directory_path() / "falg_cli_test") {
        fs::create_directories(dir);
    }
    ~CliFixture() { fs::remove_all(dir); }

    fs::path file(const std::string& name) const { return dir / name; }

    RunResult run(const std::string& args) const {
        const fs::path log = dir / "run.log";
        const std::string cmd =
            std::string(FALG_BIN) + " " + args + " > " + log.string() + " 2>&1";
        const int raw = std::system(cmd.c_str());
        RunResult r;
        r.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
        std::ifstream in(log, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        r.output = ss.str();
        return r;
    }
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}
}  // namespace

TEST_CASE("cli: gamma tables") {
    CliFixture cli;

    SECTION("closed-form rule prints the exact limit and exits 0") {
        const auto csv = cli.file("gamma.csv");
        const auto r =
            cli.run("gamma --rule k_pow_i_factorial:3 --K 8 --csv " + csv.string());
        CHECK(r.code == 0);
        CHECK(r.output.find("verdict=semisimple") != std::string::npos);
        CHECK(r.output.find("gamma=1/3") != std::string::npos);
        CHECK(slurp(csv).rfind("k,M_k,ratio,bracket_lo,bracket_hi,verdict\n", 0) == 0);
    }

    SECTION("default sweep emits the doubly indexed table") {
        const auto csv = cli.file("gamma_family.csv");
        const auto r = cli.run("gamma --K 6 --k0-lo 1 --k0-hi 3 --csv " + csv.string());
        CHECK(r.code == 0);
        const std::string text = slurp(csv);
        CHECK(text.rfind("k0,k,M_k,ratio,bracket_lo,bracket_hi,verdict\n", 0) == 0);
        // 3 levels x 6 depths data rows.
        CHECK(std::count(text.begin(), text.end(), '\n') == 1 + 18);
    }

    SECTION("bad rule exits 2") {
        CHECK(cli.run("gamma --rule fibonacci --K 4").code == 2);
    }
}

TEST_CASE("cli: submultiplicativity probe") {
    CliFixture cli;

    SECTION("clean run holds") {
        const auto r = cli.run("submult-probe --trials 80 --seed 5 --csv " +
                               cli.file("probe.csv").string());
        CHECK(r.code == 0);
        CHECK(r.output.find("violations=0") != std::string::npos);
    }

    SECTION("negative control is caught and exits 1") {
        const auto r = cli.run("submult-probe --trials 80 --seed 5 --negative-control");
        CHECK(r.code == 1);
        CHECK(r.output.find("violations=0") == std::string::npos);
    }

    SECTION("same seed twice gives byte-identical CSV") {
        const auto a = cli.file("probe_a.csv");
        const auto b = cli.file("probe_b.csv");
        REQUIRE(cli.run("submult-probe --trials 60 --seed 11 --csv " + a.string()).code == 0);
        REQUIRE(cli.run("submult-probe --trials 60 --seed 11 --csv " + b.string()).code == 0);
        CHECK(slurp(a) == slurp(b));
    }
}

TEST_CASE("cli: seminorm evaluation on element files") {
    CliFixture cli;

    // a = X_0 + 3 X_1 + X_2, m = 0: the level-2 seminorm counts indices < 2.
    PowerSeries<ExactScalar> a(8);
    a.set_coefficient(Monomial::variable(0), ExactScalar(1));
    a.set_coefficient(Monomial::variable(1), ExactScalar(3));
    a.set_coefficient(Monomial::variable(2), ExactScalar(1));
    const ModuleElement<ExactScalar, PowerSeries<ExactScalar>> u{
        a, PowerSeries<ExactScalar>::zero(8)};
    const auto elem = cli.file("elem.json");
    save_json(elem.string(), module_to_json(u));

    SECTION("zero derivation: twisted equals untwisted") {
        const auto out = cli.file("qkd.json");
        const auto r = cli.run("qkd --element " + elem.string() +
                               " --k 2 --derivation zero --out " + out.string());
        CHECK(r.code == 0);
        const Json j = load_json(out.string());
        CHECK(j["q_k_exact"] == "4/1");
        CHECK(j["q_kD_exact"] == "4/1");
        CHECK(j["family"] == "tau_c");
    }

    SECTION("coordinate derivative shifts the twisted value") {
        const auto out = cli.file("qkd_partial.json");
        const auto r = cli.run("qkd --element " + elem.string() +
                               " --k 2 --derivation partial:0 --out " + out.string());
        CHECK(r.code == 0);
        const Json j = load_json(out.string());
        CHECK(j["q_k_exact"] == "4/1");
        CHECK(j["q_kD_exact"] == "5/1");  // adds p_2(derivative) = 1
    }

    SECTION("level 0 is refused with exit 2") {
        CHECK(cli.run("qkd --element " + elem.string() + " --k 0").code == 2);
    }

    SECTION("numeric character elements use the disc family") {
        PowerSeries<Complex> f(8);
        f.set_coefficient(Monomial::variable(0), Complex(1.0, 0.0));
        const ModuleElement<Complex, Complex> v{f, Complex(0.0, 0.0)};
        const auto cf = cli.file("char.json");
        save_json(cf.string(), module_to_json(v));
        const auto out = cli.file("qkd_char.json");
        const auto r = cli.run("qkd --element " + cf.string() +
                               " --k 1 --derivation point1 --out " + out.string());
        CHECK(r.code == 0);
        const Json j = load_json(out.string());
        CHECK(j["family"] == "disc_sup");
        // q_1(f, 0) = sup |z| on the unit-radius grid = 1; the twist adds
        // |f'(1) - 0| = 1.
        CHECK_THAT(j["q_k"].get<double>(), Catch::Matchers::WithinRel(1.0, 1e-9));
        CHECK_THAT(j["q_kD"].get<double>(), Catch::Matchers::WithinRel(2.0, 1e-9));
    }

    SECTION("exact character elements are refused with advice, exit 2") {
        const ModuleElement<ExactScalar, ExactScalar> v{a, ExactScalar(0)};
        const auto cf = cli.file("char_exact.json");
        save_json(cf.string(), module_to_json(v));
        const auto r = cli.run("qkd --element " + cf.string() + " --k 1");
        CHECK(r.code == 2);
        CHECK(r.output.find("numeric") != std::string::npos);
    }
}

TEST_CASE("cli: the graph twist round-trips through files") {
    CliFixture cli;
    Rng rng(101);
    const ModuleElement<ExactScalar, PowerSeries<ExactScalar>> u{
        random_series<ExactScalar>(rng, 2, 3, 4, 8),
        random_series<ExactScalar>(rng, 2, 3, 4, 8)};
    const auto elem = cli.file("u.json");
    save_json(elem.string(), module_to_json(u));

    const auto once = cli.file("theta1.json");
    const auto twice = cli.file("theta2.json");
    REQUIRE(cli.run("theta --element " + elem.string() + " --derivation partial:0 --out " +
                    once.string())
                .code == 0);
    REQUIRE(cli.run("theta --element " + once.string() + " --derivation partial:0 --out " +
                    twice.string())
                .code == 0);

    const auto back = self_element_from_json<ExactScalar>(load_json(twice.string()));
    CHECK(back == u);
    // And one application genuinely moved the module part.
    const auto mid = self_element_from_json<ExactScalar>(load_json(once.string()));
    CHECK(mid.a == u.a);
    CHECK(mid.m != u.m);
}

TEST_CASE("cli: tail-extension products") {
    CliFixture cli;
    const auto e1 = ar_unit_tail<ExactScalar>(1, RankSpec::finite(3), 4);
    const auto ef = cli.file("e1.json");
    save_json(ef.string(), ar_to_json(e1));

    SECTION("(0, e_1)^2 = (0, e_2)") {
        const auto out = cli.file("prod.json");
        const auto r = cli.run("armul --x " + ef.string() + " --y " + ef.string() +
                               " --out " + out.string());
        CHECK(r.code == 0);
        const auto prod = ar_from_json<ExactScalar>(load_json(out.string()));
        CHECK(prod == ar_unit_tail<ExactScalar>(2, RankSpec::finite(3), 4));
    }

    SECTION("rank mismatch exits 2") {
        const auto other = cli.file("e1r5.json");
        save_json(other.string(),
                  ar_to_json(ar_unit_tail<ExactScalar>(1, RankSpec::finite(5), 4)));
        const auto r = cli.run("armul --x " + ef.string() + " --y " + other.string());
        CHECK(r.code == 2);
        CHECK(r.output.find("rank") != std::string::npos);
    }
}

TEST_CASE("cli: higher Leibniz spot checks") {
    CliFixture cli;

    SECTION("genuine components hold on every pair") {
        const auto r = cli.run("leibniz-check --rank 4 --trials 20 --seed 3");
        CHECK(r.code == 0);
        CHECK(r.output.find("nonzero_defects=0") != std::string::npos);
    }

    SECTION("a perturbed component is detected, exit 1") {
        const auto r = cli.run("leibniz-check --rank 4 --trials 20 --seed 3 --perturb");
        CHECK(r.code == 1);
        CHECK(r.output.find("nonzero_defects=0") == std::string::npos);
    }
}

TEST_CASE("cli: spectral tables from series files") {
    CliFixture cli;
    const auto xf = cli.file("x.json");
    save_json(xf.string(), series_to_json(PowerSeries<ExactScalar>::variable(0, 12)));

    SECTION("the formal variable is certified at every level") {
        const auto csv = cli.file("spec.csv");
        const auto r =
            cli.run("spectral --element " + xf.string() + " --k 3 --n 6 --csv " + csv.string());
        CHECK(r.code == 0);
        // One verdict line per level.
        CHECK(std::count(r.output.begin(), r.output.end(), '\n') >= 3);
        CHECK(r.output.find("verdict=quasinilpotent-certified") != std::string::npos);
        CHECK(slurp(csv).rfind("k,n,norm,root\n", 0) == 0);
    }

    SECTION("missing element file exits 2") {
        CHECK(cli.run("spectral --element " + cli.file("nope.json").string()).code == 2);
    }

    SECTION("budget overruns exit 2 rather than truncating silently") {
        const auto small = cli.file("small.json");
        save_json(small.string(), series_to_json(PowerSeries<ExactScalar>::variable(0, 4)));
        const auto r = cli.run("spectral --element " + small.string() + " --k 2 --n 32");
        CHECK(r.code == 2);
        CHECK(r.output.find("truncation") != std::string::npos);
    }
}

TEST_CASE("cli: approximation and dichotomy tables") {
    CliFixture cli;

    SECTION("approx writes the pinned column layout") {
        const auto csv = cli.file("cert.csv");
        const auto r = cli.run("approx --targets 1,-2,3 --n 5 --csv " + csv.string());
        CHECK(r.code == 0);
        CHECK(r.output.find("all_met=1") != std::string::npos);
        const std::string text = slurp(csv);
        CHECK(text.rfind("n,degree,sup_norm,bound,resid_1,resid_2,resid_3\n", 0) == 0);
        CHECK(std::count(text.begin(), text.end(), '\n') == 1 + 5);
    }

    SECTION("dichotomy holds at modest depth") {
        const auto csv = cli.file("dich.csv");
        const auto r = cli.run("dichotomy --n 5 --csv " + csv.string());
        CHECK(r.code == 0);
        CHECK(r.output.find("partial_control_ok=1") != std::string::npos);
    }

    SECTION("radical report certifies and exits 0") {
        const auto r = cli.run("radical --rank-max 4 --square-trials 50 --R 8 --csv " +
                               cli.file("rad.csv").string());
        CHECK(r.code == 0);
        CHECK(r.output.find("quasinil_certified=1") != std::string::npos);
    }
}
