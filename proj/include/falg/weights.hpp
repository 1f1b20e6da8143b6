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

#ifndef FALG_WEIGHTS_HPP
#define FALG_WEIGHTS_HPP

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "seminorms.hpp"

namespace falg {

enum class WeightRule { explicit_list, factorial, k_pow_i_factorial, factorial_power };

/// Positive weights M_1..M_K, exact rationals. Closed-form rules remember
/// how they were built so limits can be certified analytically.
struct WeightSequence {
    WeightRule rule = WeightRule::explicit_list;
    unsigned param = 1;  // k0 for k_pow_i_factorial, exponent for factorial_power
    std::vector<Rational> values;

    unsigned size() const { return unsigned(values.size()); }

    /// M_i, 1-based.
    const Rational& at(unsigned i) const {
        if (i < 1 || i > values.size())
            throw WeightError("weight index " + std::to_string(i) + " outside 1.." +
                              std::to_string(values.size()));
        return values[i - 1];
    }

    std::string rule_name() const {
        switch (rule) {
            case WeightRule::factorial: return "factorial";
            case WeightRule::k_pow_i_factorial:
                return "k_pow_i_factorial:" + std::to_string(param);
            case WeightRule::factorial_power:
                return "factorial_power:" + std::to_string(param);
            default: return "explicit";
        }
    }

    static WeightSequence from_list(std::vector<Rational> list) {
        WeightSequence M;
        M.rule = WeightRule::explicit_list;
        M.values = std::move(list);
        return M;
    }

    /// M_i = i!.
    static WeightSequence factorial_rule(unsigned K) {
        WeightSequence M;
        M.rule = WeightRule::factorial;
        for (unsigned i = 1; i <= K; ++i) M.values.emplace_back(factorial(i));
        return M;
    }

    /// M_i = k0^i * i!, the level-k0 member of the doubly indexed family.
    static WeightSequence k_pow_i_factorial_rule(unsigned k0, unsigned K) {
        if (k0 < 1) throw WeightError("k0 must be >= 1");
        WeightSequence M;
        M.rule = WeightRule::k_pow_i_factorial;
        M.param = k0;
        BigInt pw = 1;
        for (unsigned i = 1; i <= K; ++i) {
            pw *= k0;
            M.values.emplace_back(Rational(pw * factorial(i)));
        }
        return M;
    }

    /// M_i = (i!)^e; e >= 2 drives the ratio sequence to zero.
    static WeightSequence factorial_power_rule(unsigned e, unsigned K) {
        if (e < 1) throw WeightError("exponent must be >= 1");
        WeightSequence M;
        M.rule = WeightRule::factorial_power;
        M.param = e;
        for (unsigned i = 1; i <= K; ++i) {
            BigInt f = factorial(i);
            BigInt p = 1;
            for (unsigned j = 0; j < e; ++j) p *= f;
            M.values.emplace_back(Rational(p));
        }
        return M;
    }
};

/// Outcome of the exhaustive convexity scan; (i, k) is the first failing
/// pair in scan order (k ascending, then i).
struct WeightValidation {
    bool valid = true;
    unsigned i = 0;
    unsigned k = 0;
    std::string reason;
};

/// Checks positivity and factorial convexity M_k/k! >= (M_i/i!)(M_{k-i}/(k-i)!)
/// for all 1 <= i < k <= K, in exact arithmetic (cross-multiplied).
inline WeightValidation validate_weights(const WeightSequence& M) {
    for (unsigned i = 1; i <= M.size(); ++i) {
        if (M.at(i) <= 0)
            return WeightValidation{false, i, i, "weight M_" + std::to_string(i) +
                                                     " is not positive"};
    }
    for (unsigned k = 2; k <= M.size(); ++k) {
        for (unsigned i = 1; i < k; ++i) {
            const Rational lhs = M.at(k) * Rational(factorial(i) * factorial(k - i));
            const Rational rhs = M.at(i) * M.at(k - i) * Rational(factorial(k));
            if (lhs < rhs)
                return WeightValidation{false, i, k,
                                        "convexity fails at (i, k) = (" + std::to_string(i) +
                                            ", " + std::to_string(k) + ")"};
        }
    }
    return WeightValidation{};
}

/// Exact comparison ratio_k >= ratio_{k+1} via cross-powering:
/// (k!/M_k)^{k+1} >= ((k+1)!/M_{k+1})^k, no floating roots.
inline bool ratio_monotone_step(const WeightSequence& M, unsigned k) {
    const Rational a = Rational(factorial(k)) / M.at(k);
    const Rational b = Rational(factorial(k + 1)) / M.at(k + 1);
    return rational_pow(a, k + 1) >= rational_pow(b, k);
}

inline bool ratio_monotone(const WeightSequence& M) {
    for (unsigned k = 1; k + 1 <= M.size(); ++k)
        if (!ratio_monotone_step(M, k)) return false;
    return true;
}

enum class GammaClass { semisimple, natural, undetermined };

inline std::string gamma_class_name(GammaClass c) {
    switch (c) {
        case GammaClass::semisimple: return "semisimple";
        case GammaClass::natural: return "natural";
        default: return "undetermined";
    }
}

/// The ratio sequence (k!/M_k)^{1/k}, its limit bracket, and the
/// classification the limit supports. log(M_k/k!) is superadditive for
/// valid weights, so the running minimum of the ratios is a certified
/// upper bound for the limit; the lower bound is analytic (closed form)
/// or the trivial 0.
struct GammaReport {
    std::string rule;
    unsigned K = 0;
    std::vector<double> ratios;      // ratios[k-1] = (k!/M_k)^{1/k}
    std::vector<double> bracket_hi;  // running min through k
    double bracket_lo = 0.0;
    bool exact = false;       // limit certified by the rule's closed form
    Rational gamma_exact{0};  // meaningful when exact
    double gamma_value = 0.0;
    GammaClass verdict = GammaClass::undetermined;
};

/// ln M_k through the rule's closed form where possible, so huge weights
/// never pass through a double conversion.
inline double log_weight(const WeightSequence& M, unsigned k) {
    switch (M.rule) {
        case WeightRule::factorial: return std::lgamma(double(k) + 1.0);
        case WeightRule::k_pow_i_factorial:
            return double(k) * std::log(double(M.param)) + std::lgamma(double(k) + 1.0);
        case WeightRule::factorial_power:
            return double(M.param) * std::lgamma(double(k) + 1.0);
        default:
            return std::log(to_double(numerator(M.at(k)))) -
                   std::log(to_double(denominator(M.at(k))));
    }
}

inline GammaReport gamma_estimate(const WeightSequence& M, unsigned K) {
    if (K < 1 || K > M.size())
        throw WeightError("K must lie in 1.." + std::to_string(M.size()));
    const WeightValidation v = validate_weights(M);
    if (!v.valid) throw WeightError(v.reason);

    GammaReport rep;
    rep.rule = M.rule_name();
    rep.K = K;
    double running = std::numeric_limits<double>::infinity();
    for (unsigned k = 1; k <= K; ++k) {
        const double r = std::exp((std::lgamma(double(k) + 1.0) - log_weight(M, k)) / double(k));
        running = std::min(running, r);
        rep.ratios.push_back(r);
        rep.bracket_hi.push_back(running);
    }
    rep.gamma_value = rep.ratios.back();

    switch (M.rule) {
        case WeightRule::factorial:  // k!/M_k = 1 for every k
            rep.exact = true;
            rep.gamma_exact = 1;
            break;
        case WeightRule::k_pow_i_factorial:  // ratio constant at 1/k0
            rep.exact = true;
            rep.gamma_exact = Rational(1) / int64_t(M.param);
            break;
        case WeightRule::factorial_power:  // (k!)^{(1-e)/k}: 1 if e = 1, else -> 0
            rep.exact = true;
            rep.gamma_exact = (M.param == 1) ? Rational(1) : Rational(0);
            break;
        default:
            rep.exact = false;
            break;
    }
    if (rep.exact) {
        rep.bracket_lo = to_double(rep.gamma_exact);
        rep.gamma_value = to_double(rep.gamma_exact);
        rep.verdict = rep.gamma_exact > 0 ? GammaClass::semisimple : GammaClass::natural;
    } else {
        rep.bracket_lo = 0.0;
        rep.verdict = GammaClass::undetermined;  // finite data cannot certify a limit
    }
    return rep;
}

/// Classification comes from the certified limit only: a positive exact
/// gamma gives semisimple, an exact zero gives natural, anything else is
/// undetermined.
inline GammaClass classify(const WeightSequence& M) {
    return gamma_estimate(M, M.size()).verdict;
}

/// q_k(p) = p_k(p) + sum_i |p^(i)(1)| / M_i with p_k the sampled sup norm at
/// radius 2 - 1/k. The weights must cover the degree so no term is dropped.
template <class C>
double q_k_weighted(const PowerSeries<C>& p, unsigned k, const WeightSequence& M,
                    unsigned samples = 512) {
    const PowerSeries<Complex> q = to_numeric(p);
    const unsigned deg = q.support_degree();
    if (deg > M.size())
        throw WeightError("weight list covers 1.." + std::to_string(M.size()) +
                          " but the polynomial has degree " + std::to_string(deg));
    const SeminormFamily<Complex> fam = make_disc_sup_family(samples);
    double acc = fam(k, q);
    const std::vector<Complex> shifted = taylor_at_one(q);
    // shifted[i] = p^(i)(1)/i!, so the weight on |p^(i)(1)| becomes the
    // exact rational i!/M_i (kept exact so M_i = i! reduces the term to
    // |shifted[i]| with no rounding).
    for (unsigned i = 1; i < shifted.size(); ++i)
        acc += std::abs(shifted[i]) * to_double(Rational(factorial(i)) / M.at(i));
    return acc;
}

/// Reports for M_i = k0^i * i! across a k0 range, plus the aggregate limit
/// of the per-level gammas (1/k0 -> 0).
struct DoublyIndexedReport {
    std::vector<GammaReport> levels;
    bool aggregate_exact = true;
    double aggregate_limit = 0.0;
};

inline DoublyIndexedReport doubly_indexed_family(unsigned k0_lo, unsigned k0_hi, unsigned K) {
    if (k0_lo < 1 || k0_hi < k0_lo) throw WeightError("bad k0 range");
    DoublyIndexedReport rep;
    for (unsigned k0 = k0_lo; k0 <= k0_hi; ++k0)
        rep.levels.push_back(gamma_estimate(WeightSequence::k_pow_i_factorial_rule(k0, K), K));
    rep.aggregate_exact = true;
    rep.aggregate_limit = 0.0;  // lim_{k0} 1/k0, analytically
    return rep;
}

}  // namespace falg

#endif  // FALG_WEIGHTS_HPP
