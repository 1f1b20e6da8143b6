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

#ifndef FALG_RNG_HPP
#define FALG_RNG_HPP

#include <cstdint>
#include <random>

#include "power_series.hpp"

namespace falg {

/// Seeded generator with hand-rolled value mappings. std::mt19937_64 output
/// is specified by the standard, while the std distributions are not; mapping
/// bits ourselves keeps every experiment reproducible across toolchains.
class Rng {
  public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next_u64() { return eng_(); }

    /// Uniform integer in [lo, hi] (modulo mapping; bias is irrelevant here).
    int64_t uniform_int(int64_t lo, int64_t hi) {
        return lo + int64_t(next_u64() % uint64_t(hi - lo + 1));
    }

    /// Uniform double in [lo, hi) from the top 53 bits.
    double uniform_real(double lo, double hi) {
        const double u = double(next_u64() >> 11) * 0x1.0p-53;
        return lo + u * (hi - lo);
    }

    bool coin() { return (next_u64() & 1u) != 0; }

  private:
    std::mt19937_64 eng_;
};

/// Rational with numerator in [-bound, bound] and denominator in [1, bound].
inline Rational random_rational(Rng& rng, int bound = 9) {
    const int64_t num = rng.uniform_int(-bound, bound);
    const int64_t den = rng.uniform_int(1, bound);
    return Rational(num) / den;
}

/// Real rational scalar. Random exact elements keep coefficients on the real
/// axis so that coefficient magnitudes (and hence seminorms) stay rational.
inline ExactScalar random_exact_scalar(Rng& rng, int bound = 9) {
    return ExactScalar(random_rational(rng, bound));
}

inline Complex random_complex(Rng& rng, double bound = 1.0) {
    const double re = rng.uniform_real(-bound, bound);
    const double im = rng.uniform_real(-bound, bound);
    return Complex(re, im);
}

/// Monomial of total degree <= max_deg in indeterminates X_0..X_{max_vars-1}.
inline Monomial random_monomial(Rng& rng, unsigned max_vars, unsigned max_deg) {
    const unsigned deg = unsigned(rng.uniform_int(0, max_deg));
    std::vector<unsigned> exps(max_vars, 0);
    for (unsigned i = 0; i < deg; ++i)
        ++exps[size_t(rng.uniform_int(0, int64_t(max_vars) - 1))];
    std::vector<Monomial::Pair> pairs;
    for (unsigned v = 0; v < max_vars; ++v)
        if (exps[v] > 0) pairs.emplace_back(v, exps[v]);
    return Monomial::from_pairs(std::move(pairs));
}

template <class C>
C random_scalar(Rng& rng) {
    if constexpr (scalar_traits<C>::is_exact) {
        return random_exact_scalar(rng);
    } else {
        return random_complex(rng);
    }
}

/// Sparse series with up to n_terms random terms (collisions may merge).
template <class C>
PowerSeries<C> random_series(Rng& rng, unsigned max_vars, unsigned max_deg,
                             unsigned n_terms, int trunc) {
    PowerSeries<C> f(trunc);
    for (unsigned t = 0; t < n_terms; ++t) {
        const Monomial m = random_monomial(rng, max_vars, max_deg);
        f.add_to_coefficient(m, random_scalar<C>(rng));
    }
    return f;
}

/// Univariate polynomial in X_0 of degree <= max_deg.
template <class C>
PowerSeries<C> random_univariate(Rng& rng, unsigned max_deg, int trunc) {
    std::vector<C> coeffs(max_deg + 1, C{});
    for (auto& c : coeffs) c = random_scalar<C>(rng);
    return PowerSeries<C>::univariate(coeffs, trunc);
}

}  // namespace falg

#endif  // FALG_RNG_HPP
