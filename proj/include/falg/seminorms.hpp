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

#ifndef FALG_SEMINORMS_HPP
#define FALG_SEMINORMS_HPP

#include <cmath>
#include <functional>
#include <string>

#include "power_series.hpp"

namespace falg {

/// Coordinatewise-convergence seminorm: the sum of coefficient magnitudes
/// over monomials of total degree <= k involving only X_0..X_{k-1}.
/// Submultiplicative because the cut is an ideal complement under the
/// truncated product.
template <class C>
real_of<C> seminorm_tau_c(const PowerSeries<C>& f, unsigned k) {
    if (k < 1) throw ConfigError("seminorm level must be >= 1");
    real_of<C> acc{};
    for (const auto& [m, c] : f.terms()) {
        if (m.degree() > k || m.index_bound() > k) continue;
        acc += scalar_traits<C>::abs(c);
    }
    return acc;
}

/// Max of |p(z)| over `samples` equally spaced points on the circle
/// |z| = radius. The maximum-modulus principle makes boundary sampling
/// sufficient for the disc; the grid spacing is the documented tolerance.
template <class C>
double disc_sup_norm(const PowerSeries<C>& f, double radius, unsigned samples = 512) {
    if (radius <= 0.0) throw ConfigError("disc radius must be positive");
    if (samples < 8) throw ConfigError("disc sampling needs at least 8 points");
    const PowerSeries<Complex> g = to_numeric(f);
    const std::vector<Complex> coeffs = dense_univariate(g);  // rejects multivariate input
    double best = 0.0;
    constexpr double two_pi = 6.283185307179586476925286766559;
    for (unsigned j = 0; j < samples; ++j) {
        const double t = two_pi * double(j) / double(samples);
        const Complex z(radius * std::cos(t), radius * std::sin(t));
        Complex acc{};
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
        best = std::max(best, std::abs(acc));
    }
    return best;
}

/// Exhausting radii for the fixed neighbourhood: the open disc of radius 2,
/// approached through the closed discs |z| <= 2 - 1/k.
inline double disc_radius(unsigned k) {
    if (k < 1) throw ConfigError("seminorm level must be >= 1");
    return 2.0 - 1.0 / double(k);
}

inline Rational disc_radius_rational(unsigned k) {
    if (k < 1) throw ConfigError("seminorm level must be >= 1");
    return Rational(2 * int64_t(k) - 1) / int64_t(k);
}

enum class FamilyKind { tau_c, disc_sup, weighted, custom };

inline std::string family_kind_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::tau_c: return "tau_c";
        case FamilyKind::disc_sup: return "disc_sup";
        case FamilyKind::weighted: return "weighted";
        default: return "custom";
    }
}

/// Indexed family k -> p_k wrapped behind one evaluator; the kind tag lets
/// callers pick exact versus sampled code paths.
template <class C>
struct SeminormFamily {
    FamilyKind kind = FamilyKind::custom;
    std::string name = "custom";
    std::function<real_of<C>(unsigned, const PowerSeries<C>&)> eval;

    real_of<C> operator()(unsigned k, const PowerSeries<C>& f) const {
        return eval(k, f);
    }
};

template <class C>
SeminormFamily<C> make_tau_c_family() {
    SeminormFamily<C> fam;
    fam.kind = FamilyKind::tau_c;
    fam.name = "tau_c";
    fam.eval = [](unsigned k, const PowerSeries<C>& f) {
        return seminorm_tau_c(f, k);
    };
    return fam;
}

/// Sampled sup-norm family at radii 2 - 1/k. The evaluation grid is the
/// boundary circle plus the point 1: the true sup dominates both (maximum
/// modulus, and 1 lies in every disc), while keeping the point-evaluation
/// bound |f(1)| <= p_k(f) exact rather than up to grid error.
inline SeminormFamily<Complex> make_disc_sup_family(unsigned samples = 512) {
    SeminormFamily<Complex> fam;
    fam.kind = FamilyKind::disc_sup;
    fam.name = "disc_sup";
    fam.eval = [samples](unsigned k, const PowerSeries<Complex>& f) {
        const double boundary = disc_sup_norm(f, disc_radius(k), samples);
        return std::max(boundary, std::abs(poly_eval(f, Complex(1.0, 0.0))));
    };
    return fam;
}

}  // namespace falg

#endif  // FALG_SEMINORMS_HPP
