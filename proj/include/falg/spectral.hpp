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

#ifndef FALG_SPECTRAL_HPP
#define FALG_SPECTRAL_HPP

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "higher_derivations.hpp"

namespace falg {

enum class SpectralVerdict { nilpotent, quasinilpotent_certified, inconclusive };

inline std::string verdict_name(SpectralVerdict v) {
    switch (v) {
        case SpectralVerdict::nilpotent: return "nilpotent";
        case SpectralVerdict::quasinilpotent_certified: return "quasinilpotent-certified";
        default: return "inconclusive";
    }
}

struct SpectralRow {
    unsigned k = 0;
    unsigned n = 0;
    double norm = 0.0;  // p_k(x^n)
    double root = 0.0;  // p_k(x^n)^{1/n}
};

/// Outcome of a radical probe: the full root sequence (never a bare number),
/// the verdict, and the truncation budget the verdict is valid under.
struct SpectralReport {
    std::string element;
    std::vector<SpectralRow> rows;
    SpectralVerdict verdict = SpectralVerdict::inconclusive;
    unsigned nilpotency = 0;  // the index s when verdict == nilpotent
    double estimate = 0.0;    // final root, or exactly 0 when certified
    int budget = 0;
};

// ---------------------------------------------------------------------------
// Nilpotency index: smallest s with u^s = 0, within a verified budget
// ---------------------------------------------------------------------------

/// Plain series. The truncation must cover max_s stacked supports so a zero
/// power is a true zero rather than a truncation artifact.
template <class C>
std::optional<unsigned> nilpotency_index(const PowerSeries<C>& u, unsigned max_s) {
    if (max_s < 1) throw ConfigError("max_s must be >= 1");
    const unsigned need = max_s * u.support_degree();
    if (int(need) > u.truncation())
        throw BudgetError("nilpotency probe to " + std::to_string(max_s) +
                          " needs truncation >= " + std::to_string(need));
    PowerSeries<C> acc = u;
    for (unsigned s = 1; s <= max_s; ++s) {
        if (acc.is_zero()) return s;
        if (s < max_s) acc = mul(acc, u, u.truncation());
    }
    return std::nullopt;
}

/// Extension-algebra elements (a, m).
template <class C, class M>
std::optional<unsigned> nilpotency_index(const ModuleElement<C, M>& u, unsigned max_s,
                                         const ModuleContext<C, M>& ctx) {
    if (max_s < 1) throw ConfigError("max_s must be >= 1");
    unsigned deg = u.a.support_degree();
    if constexpr (std::is_same_v<M, PowerSeries<C>>) deg = std::max(deg, u.m.support_degree());
    const int t = std::min(ctx.trunc, std::min(u.a.truncation(), module_truncation(u.m)));
    if (int(max_s * deg) > t)
        throw BudgetError("nilpotency probe to " + std::to_string(max_s) +
                          " needs truncation >= " + std::to_string(max_s * deg));
    ModuleElement<C, M> acc = u;
    for (unsigned s = 1; s <= max_s; ++s) {
        if (acc.a.is_zero() && module_is_zero(acc.m)) return s;
        if (s < max_s) acc = mod_mul(acc, u, ctx, t);
    }
    return std::nullopt;
}

/// Rank-r elements. Tail arithmetic is exact in the quotient (indices past
/// the rank vanish by definition), so only the algebra part needs a budget.
template <class C>
std::optional<unsigned> nilpotency_index(const ArElement<C>& u, unsigned max_s) {
    if (max_s < 1) throw ConfigError("max_s must be >= 1");
    const unsigned need = max_s * u.a.support_degree();
    if (int(need) > u.a.truncation())
        throw BudgetError("nilpotency probe to " + std::to_string(max_s) +
                          " needs truncation >= " + std::to_string(need));
    auto tail_zero = [](const ArElement<C>& w) {
        for (const C& m : w.tail)
            if (!scalar_traits<C>::is_zero(m)) return false;
        return true;
    };
    ArElement<C> acc = u;
    for (unsigned s = 1; s <= max_s; ++s) {
        if (acc.a.is_zero() && tail_zero(acc)) return s;
        if (s < max_s) acc = ar_mul(acc, u);
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Spectral radius estimates
// ---------------------------------------------------------------------------

/// The root sequence p_k(x^n)^{1/n} for n = 1..N at one seminorm level.
/// Reports exact 0 (certified) when some power has seminorm exactly zero
/// within the budget; a vanishing power of the element itself additionally
/// certifies nilpotency.
template <class C>
SpectralReport spectral_radius_estimate(const PowerSeries<C>& x, unsigned k, unsigned N,
                                        const SeminormFamily<C>& family,
                                        std::string label = "series") {
    if (N < 1) throw ConfigError("N must be >= 1");
    const unsigned need = N * x.support_degree();
    if (int(need) > x.truncation())
        throw BudgetError("power sequence to " + std::to_string(N) +
                          " needs truncation >= " + std::to_string(need));

    SpectralReport rep;
    rep.element = std::move(label);
    rep.budget = x.truncation();
    bool certified_zero = false;
    PowerSeries<C> acc = x;
    for (unsigned n = 1; n <= N; ++n) {
        const double norm = scalar_traits<C>::real_to_double(family(k, acc));
        const double root = norm == 0.0 ? 0.0 : std::pow(norm, 1.0 / double(n));
        rep.rows.push_back(SpectralRow{k, n, norm, root});
        if (acc.is_zero() && rep.verdict != SpectralVerdict::nilpotent) {
            rep.verdict = SpectralVerdict::nilpotent;
            rep.nilpotency = n;
        }
        if (norm == 0.0) certified_zero = true;
        if (n < N) acc = mul(acc, x, x.truncation());
    }
    if (certified_zero) {
        rep.estimate = 0.0;
        if (rep.verdict != SpectralVerdict::nilpotent)
            rep.verdict = SpectralVerdict::quasinilpotent_certified;
    } else {
        rep.estimate = rep.rows.back().root;
        rep.verdict = rep.verdict == SpectralVerdict::nilpotent ? rep.verdict
                                                                : SpectralVerdict::inconclusive;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Quasinilpotent-non-nilpotent certificate
// ---------------------------------------------------------------------------

/// Tail seminorm at level k: the sum of tail magnitudes over indices <= k
/// (the algebra part must be zero here). Exact-zero detection works on the
/// stored values, independent of the reporting precision.
template <class C>
bool tail_seminorm_is_zero(const ArElement<C>& u, unsigned k) {
    const unsigned top = std::min<unsigned>(k, unsigned(u.tail.size()));
    for (unsigned i = 1; i <= top; ++i)
        if (!scalar_traits<C>::is_zero(u.tail[i - 1])) return false;
    return true;
}

template <class C>
double tail_seminorm_value(const ArElement<C>& u, unsigned k) {
    const unsigned top = std::min<unsigned>(k, unsigned(u.tail.size()));
    double acc = 0.0;
    for (unsigned i = 1; i <= top; ++i)
        acc += std::abs(scalar_traits<C>::to_complex(u.tail[i - 1]));
    return acc;
}

/// For a tail-ideal element of the infinite-kind algebra: certify u^n != 0
/// for all n <= R together with r_k(u) = 0 for all k <= R under the tail
/// seminorms. Powers are evaluated with the tail carried long enough that
/// every reported value is exact: entries at index <= R of any product are
/// unaffected by dropping indices beyond the carried length.
template <class C>
SpectralReport quasinil_nonnil_certificate(const ArElement<C>& u0, unsigned R,
                                           std::string label = "tail element") {
    if (R < 4) throw ConfigError("certificate truncation must be >= 4");
    if (!u0.a.is_zero())
        throw ConfigError("quasinilpotent witness must lie in the tail ideal");

    SpectralReport rep;
    rep.element = std::move(label);

    // Zero input: nilpotent of index 1, nothing to certify.
    bool zero_input = true;
    unsigned min_index = 0;
    for (unsigned i = 1; i <= u0.tail.size(); ++i) {
        if (!scalar_traits<C>::is_zero(u0.tail[i - 1])) {
            zero_input = false;
            min_index = i;
            break;
        }
    }
    if (zero_input) {
        rep.verdict = SpectralVerdict::nilpotent;
        rep.nilpotency = 1;
        rep.budget = int(u0.tail.size());
        return rep;
    }

    // Carry the tail far enough that u^n keeps its lowest entry (at index
    // n * min_index) for every n <= R, and one power past each level k <= R
    // stays representable.
    const unsigned L = std::max(min_index * R, R + 1);
    const RankSpec wide = RankSpec::inf_trunc(L);
    std::vector<C> tail(L, C{});
    for (unsigned i = 1; i <= u0.tail.size() && i <= L; ++i) tail[i - 1] = u0.tail[i - 1];
    const ArElement<C> u{PowerSeries<C>::zero(u0.a.truncation()), std::move(tail), wide};
    rep.budget = int(L);

    std::vector<ArElement<C>> powers;  // powers[n-1] = u^n for n = 1..R+1
    powers.push_back(u);
    for (unsigned n = 2; n <= R + 1; ++n) powers.push_back(ar_mul(powers.back(), u));

    bool nonzero_through_R = true;
    for (unsigned n = 1; n <= R; ++n)
        if (tail_seminorm_is_zero(powers[n - 1], L)) nonzero_through_R = false;

    bool all_levels_certified = true;
    for (unsigned k = 1; k <= R; ++k) {
        bool level_zero_found = false;
        for (unsigned n = 1; n <= R + 1; ++n) {
            const double norm = tail_seminorm_value(powers[n - 1], k);
            const double root = norm == 0.0 ? 0.0 : std::pow(norm, 1.0 / double(n));
            rep.rows.push_back(SpectralRow{k, n, norm, root});
            if (tail_seminorm_is_zero(powers[n - 1], k)) level_zero_found = true;
        }
        if (!level_zero_found) all_levels_certified = false;
    }

    rep.verdict = (nonzero_through_R && all_levels_certified)
                      ? SpectralVerdict::quasinilpotent_certified
                      : SpectralVerdict::inconclusive;
    rep.estimate = 0.0;
    return rep;
}

/// Convenience form for the canonical witness u = (0, e_1).
template <class C>
SpectralReport quasinil_nonnil_certificate(unsigned R) {
    if (R < 4) throw ConfigError("certificate truncation must be >= 4");
    return quasinil_nonnil_certificate(ar_unit_tail<C>(1, RankSpec::inf_trunc(R), 1), R,
                                       "e_1");
}

}  // namespace falg

#endif  // FALG_SPECTRAL_HPP
