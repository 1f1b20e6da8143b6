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

#include <catch2/catch_amalgamated.hpp>

#include "oracle.hpp"

using namespace falg;

namespace {
PowerSeries<ExactScalar> X(unsigned i, int trunc = 8) {
    return PowerSeries<ExactScalar>::variable(i, trunc);
}
}  // namespace

TEST_CASE("series construction and coefficient access") {
    CHECK_THROWS_AS(PowerSeries<ExactScalar>::zero(0), ConfigError);
    CHECK_THROWS_AS(PowerSeries<ExactScalar>::zero(-3), ConfigError);

    auto f = PowerSeries<ExactScalar>::constant(ExactScalar(5), 4);
    CHECK(f.coefficient(Monomial()) == ExactScalar(5));
    CHECK(f.support_degree() == 0);

    auto x = X(0, 4);
    CHECK(x.coefficient(Monomial::variable(0)) == ExactScalar(1));
    CHECK(x.support_degree() == 1);

    SECTION("explicit zeros are not stored") {
        x.set_coefficient(Monomial::variable(1), ExactScalar(0));
        CHECK(x.terms().size() == 1);
        x.add_to_coefficient(Monomial::variable(0), ExactScalar(-1));
        CHECK(x.terms().empty());
    }

    SECTION("terms beyond the truncation window are discarded") {
        auto g = PowerSeries<ExactScalar>::zero(3);
        g.set_coefficient(Monomial::variable(0, 4), ExactScalar(1));
        CHECK(g.terms().empty());
        g.set_coefficient(Monomial::variable(0, 3), ExactScalar(1));
        CHECK(g.terms().size() == 1);
    }

    SECTION("equality compares coefficients, not truncation orders") {
        auto a = PowerSeries<ExactScalar>::variable(0, 5);
        auto b = PowerSeries<ExactScalar>::variable(0, 9);
        CHECK(a == b);
    }
}

TEST_CASE("univariate factory lays out coefficients by exponent") {
    const auto f = PowerSeries<ExactScalar>::univariate(
        {ExactScalar(2), ExactScalar(0), ExactScalar(-7)}, 6);
    CHECK(f.coefficient(Monomial()) == ExactScalar(2));
    CHECK(f.coefficient(Monomial::variable(0, 1)) == ExactScalar(0));
    CHECK(f.coefficient(Monomial::variable(0, 2)) == ExactScalar(-7));
    const auto dense = dense_univariate(f);
    REQUIRE(dense.size() == 3);
    CHECK(dense[1] == ExactScalar(0));
}

TEST_CASE("addition, scaling, negation match the dense oracle") {
    Rng rng(2026);
    for (int t = 0; t < 100; ++t) {
        const auto f = random_series<ExactScalar>(rng, 3, 4, 5, 8);
        const auto g = random_series<ExactScalar>(rng, 3, 4, 5, 8);
        const auto bf = oracle::DenseBox<ExactScalar>::from_series(f, 3, 5);
        const auto bg = oracle::DenseBox<ExactScalar>::from_series(g, 3, 5);
        CHECK(oracle::box_add(bf, bg).matches(add(f, g)));
        CHECK(oracle::box_add(bf, bg).matches(add(g, f)));
    }
    const auto f = random_series<ExactScalar>(rng, 3, 4, 5, 8);
    CHECK(add(f, negate(f)).terms().empty());
    CHECK(sub(f, f).terms().empty());
}

TEST_CASE("multiplication matches the dense schoolbook oracle") {
    Rng rng(77);
    for (int t = 0; t < 100; ++t) {
        const auto f = random_series<ExactScalar>(rng, 3, 4, 5, 8);
        const auto g = random_series<ExactScalar>(rng, 3, 4, 5, 8);
        const auto bf = oracle::DenseBox<ExactScalar>::from_series(f, 3, 9);
        const auto bg = oracle::DenseBox<ExactScalar>::from_series(g, 3, 9);
        const auto prod = mul(f, g, 8);
        CHECK(oracle::box_mul(bf, bg, 8).matches(prod));
    }

    SECTION("product truncation is exactly the requested window") {
        auto f = PowerSeries<ExactScalar>::variable(0, 3);
        auto g = PowerSeries<ExactScalar>::variable(0, 9);
        CHECK(mul(f, g, 9).truncation() == 9);
        // X*X at window 1 has no representable terms.
        CHECK(mul(f, g, 1).terms().empty());
        // f * 1 reproduces f inside the requested window.
        const auto one = PowerSeries<ExactScalar>::one(9);
        CHECK(mul(f, one, 9) == f);
    }

    SECTION("bilinearity on random triples") {
        for (int t = 0; t < 25; ++t) {
            const auto f = random_series<ExactScalar>(rng, 2, 3, 4, 8);
            const auto g = random_series<ExactScalar>(rng, 2, 3, 4, 8);
            const auto h = random_series<ExactScalar>(rng, 2, 3, 4, 8);
            CHECK(mul(add(f, g), h, 8) == add(mul(f, h, 8), mul(g, h, 8)));
            CHECK(mul(f, g, 8) == mul(g, f, 8));
            CHECK(mul(mul(f, g, 8), h, 8) == mul(f, mul(g, h, 8), 8));
        }
    }
}

TEST_CASE("certified powers enforce the truncation budget") {
    const auto x = X(0, 2);
    CHECK_THROWS_AS(pow_certified(x, 3), BudgetError);

    const auto one_plus_x = add(PowerSeries<ExactScalar>::one(4), X(0, 4));
    const auto sq = pow_certified(one_plus_x, 2);
    CHECK(sq.coefficient(Monomial()) == ExactScalar(1));
    CHECK(sq.coefficient(Monomial::variable(0, 1)) == ExactScalar(2));
    CHECK(sq.coefficient(Monomial::variable(0, 2)) == ExactScalar(1));

    // (X_0 + X_1)^2 = X_0^2 + 2 X_0 X_1 + X_1^2
    const auto s = add(X(0, 4), X(1, 4));
    const auto s2 = pow_certified(s, 2);
    CHECK(s2.terms().size() == 3);
    CHECK(s2.coefficient(Monomial::variable(0, 2)) == ExactScalar(1));
    CHECK(s2.coefficient(Monomial::from_pairs({{0, 1}, {1, 1}})) == ExactScalar(2));
    CHECK(s2.coefficient(Monomial::variable(1, 2)) == ExactScalar(1));

    Rng rng(5);
    for (int t = 0; t < 40; ++t) {
        const auto f = random_series<ExactScalar>(rng, 3, 2, 4, 12);
        const auto bf = oracle::DenseBox<ExactScalar>::from_series(f, 3, 13);
        for (unsigned n = 1; n <= 3; ++n) {
            CAPTURE(t, n);
            CHECK(oracle::box_pow(bf, n, 12).matches(pow_certified(f, n)));
        }
    }
}

TEST_CASE("partial derivative") {
    // d/dX_0 (X_0^2 X_1 + X_1) = 2 X_0 X_1
    auto f = PowerSeries<ExactScalar>::zero(6);
    f.set_coefficient(Monomial::from_pairs({{0, 2}, {1, 1}}), ExactScalar(1));
    f.set_coefficient(Monomial::variable(1), ExactScalar(1));
    const auto df = partial(f, 0);
    CHECK(df.terms().size() == 1);
    CHECK(df.coefficient(Monomial::from_pairs({{0, 1}, {1, 1}})) == ExactScalar(2));

    Rng rng(11);
    for (int t = 0; t < 30; ++t) {
        const auto g = random_series<ExactScalar>(rng, 3, 4, 5, 8);
        const auto h = random_series<ExactScalar>(rng, 3, 4, 5, 8);
        // Linearity.
        CHECK(partial(add(g, h), 1) == add(partial(g, 1), partial(h, 1)));
        // Leibniz at a window wide enough for the visible degrees.
        const auto gh = mul(g, h, 8);
        const auto lhs = partial(gh, 0);
        const auto rhs = add(mul(partial(g, 0), h, 8), mul(g, partial(h, 0), 8));
        // Derivative of the degree-8 window loses its top layer; compare
        // through degree 7 by re-truncating both sides.
        CHECK(lhs.truncated(7) == rhs.truncated(7));
    }
}

TEST_CASE("univariate detection") {
    auto f = PowerSeries<ExactScalar>::zero(5);
    f.set_coefficient(Monomial::variable(1, 2), ExactScalar(3));
    f.set_coefficient(Monomial::variable(1, 1), ExactScalar(1));
    CHECK(univariate_index(f) == 1);

    f.set_coefficient(Monomial::variable(2, 1), ExactScalar(1));
    try {
        univariate_index(f);
        FAIL("expected NotUnivariateError");
    } catch (const NotUnivariateError& e) {
        const std::string msg = e.what();
        CHECK(msg.find('1') != std::string::npos);
        CHECK(msg.find('2') != std::string::npos);
    }

    const auto c = PowerSeries<ExactScalar>::constant(ExactScalar(4), 3);
    CHECK(univariate_index(c) == 0);
}

TEST_CASE("Taylor re-centering at 1 matches the composition oracle") {
    Rng rng(303);
    for (int t = 0; t < 200; ++t) {
        const auto f = random_univariate<ExactScalar>(rng, 8, 9);
        const auto shifted = taylor_at_one(f);
        const auto expect = oracle::shift_by_one(dense_univariate(f));
        REQUIRE(shifted.size() >= expect.size());
        for (size_t i = 0; i < shifted.size(); ++i) {
            const ExactScalar want = i < expect.size() ? expect[i] : ExactScalar(0);
            CHECK(shifted[i] == want);
        }
    }

    SECTION("numeric coefficients agree with the exact shift") {
        for (int t = 0; t < 50; ++t) {
            const auto f = random_univariate<ExactScalar>(rng, 6, 7);
            const auto exact = taylor_at_one(f);
            const auto num = taylor_at_one(to_numeric(f));
            REQUIRE(num.size() == exact.size());
            for (size_t i = 0; i < num.size(); ++i) {
                const Complex want = scalar_traits<ExactScalar>::to_complex(exact[i]);
                CHECK(std::abs(num[i] - want) < 1e-9);
            }
        }
    }
}

TEST_CASE("point values and point derivations") {
    // f = 2 + 3z + z^2: f(1) = 6, f'(1) = 5, f''(1)/2 = 1.
    const auto f = PowerSeries<ExactScalar>::univariate(
        {ExactScalar(2), ExactScalar(3), ExactScalar(1)}, 5);
    CHECK(poly_eval(f, ExactScalar(1)) == ExactScalar(6));
    CHECK(point_derivation(f, 0) == ExactScalar(6));
    CHECK(point_derivation(f, 1) == ExactScalar(5));
    CHECK(point_derivation(f, 2) == ExactScalar(1));
    CHECK(point_derivation(f, 3) == ExactScalar(0));

    // Horner evaluation at an arbitrary rational point vs direct powers.
    const ExactScalar z0(Rational(3, 2));
    ExactScalar direct(0);
    ExactScalar p(1);
    const auto dense = dense_univariate(f);
    for (size_t i = 0; i < dense.size(); ++i) {
        direct = direct + dense[i] * p;
        p = p * z0;
    }
    CHECK(poly_eval(f, z0) == direct);
}

TEST_CASE("numeric conversion preserves values") {
    Rng rng(44);
    const auto f = random_series<ExactScalar>(rng, 3, 4, 6, 8);
    const auto g = to_numeric(f);
    CHECK(g.truncation() == f.truncation());
    REQUIRE(g.terms().size() == f.terms().size());
    for (const auto& [m, c] : f.terms()) {
        const Complex want = scalar_traits<ExactScalar>::to_complex(c);
        CHECK(std::abs(g.coefficient(m) - want) == 0.0);
    }
}

TEST_CASE("seeded generator is stable across runs") {
    Rng a(99), b(99);
    for (int t = 0; t < 20; ++t) {
        CHECK(random_series<ExactScalar>(a, 3, 4, 5, 8) ==
              random_series<ExactScalar>(b, 3, 4, 5, 8));
        CHECK(a.next_u64() == b.next_u64());
    }
}
