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

#ifndef FALG_POWER_SERIES_HPP
#define FALG_POWER_SERIES_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "monomial.hpp"
#include "scalar.hpp"

namespace falg {

/// Truncated formal power series in countably many indeterminates, sparse.
///
/// Every stored monomial has total degree <= truncation() and no explicit
/// zero coefficients are kept. The truncation order is the degree window
/// within which the coefficients are meaningful; arithmetic discards terms
/// beyond it.
template <class C>
class PowerSeries {
  public:
    using coeff_type = C;
    using coeff_map = std::map<Monomial, C>;
    using traits = scalar_traits<C>;

    explicit PowerSeries(int truncation) : trunc_(truncation) {
        if (truncation < 1) throw ConfigError("truncation order must be >= 1");
    }

    static PowerSeries zero(int truncation) { return PowerSeries(truncation); }

    static PowerSeries constant(const C& value, int truncation) {
        PowerSeries f(truncation);
        f.set_coefficient(Monomial(), value);
        return f;
    }

    static PowerSeries one(int truncation) {
        return constant(traits::from_int(1), truncation);
    }

    /// The indeterminate X_index.
    static PowerSeries variable(unsigned index, int truncation) {
        PowerSeries f(truncation);
        f.set_coefficient(Monomial::variable(index), traits::from_int(1));
        return f;
    }

    /// Univariate polynomial sum coeffs[e] * X_index^e.
    static PowerSeries univariate(const std::vector<C>& coeffs, int truncation,
                                  unsigned index = 0) {
        PowerSeries f(truncation);
        for (size_t e = 0; e < coeffs.size(); ++e)
            f.set_coefficient(e == 0 ? Monomial() : Monomial::variable(index, unsigned(e)),
                              coeffs[e]);
        return f;
    }

    int truncation() const { return trunc_; }
    const coeff_map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    /// One past the largest indeterminate index present (0 when constant).
    unsigned variable_bound() const { return var_bound_; }

    /// Largest total degree present; 0 for the zero series.
    unsigned support_degree() const {
        return terms_.empty() ? 0u : terms_.rbegin()->first.degree();
    }

    C coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? C{} : it->second;
    }

    /// Inserts or overwrites one coefficient; zero values erase, terms past
    /// the truncation order are discarded.
    void set_coefficient(const Monomial& m, const C& value) {
        if (int(m.degree()) > trunc_) return;
        if (traits::is_zero(value)) {
            terms_.erase(m);
        } else {
            terms_[m] = value;
        }
        recompute_var_bound();
    }

    void add_to_coefficient(const Monomial& m, const C& value) {
        if (int(m.degree()) > trunc_) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (!traits::is_zero(value)) terms_.emplace(m, value);
        } else {
            it->second += value;
            if (traits::is_zero(it->second)) terms_.erase(it);
        }
        recompute_var_bound();
    }

    /// Re-truncates to a (possibly lower) order.
    PowerSeries truncated(int new_trunc) const {
        PowerSeries r(new_trunc);
        for (const auto& [m, c] : terms_)
            if (int(m.degree()) <= new_trunc) r.terms_.emplace(m, c);
        r.recompute_var_bound();
        return r;
    }

    friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
        return a.terms_ == b.terms_;  // truncations may differ; values decide
    }
    friend bool operator!=(const PowerSeries& a, const PowerSeries& b) { return !(a == b); }

  private:
    void recompute_var_bound() {
        var_bound_ = 0;
        for (const auto& [m, c] : terms_)
            var_bound_ = std::max(var_bound_, m.index_bound());
    }

    coeff_map terms_;
    int trunc_;
    unsigned var_bound_ = 0;

    template <class T>
    friend PowerSeries<T> add(const PowerSeries<T>&, const PowerSeries<T>&);
    template <class T>
    friend PowerSeries<T> mul(const PowerSeries<T>&, const PowerSeries<T>&, int);
};

/// Coefficientwise sum; result truncation is min of the operands'.
template <class C>
PowerSeries<C> add(const PowerSeries<C>& f, const PowerSeries<C>& g) {
    PowerSeries<C> r(std::min(f.truncation(), g.truncation()));
    for (const auto& [m, c] : f.terms())
        if (int(m.degree()) <= r.truncation()) r.terms_[m] = c;
    for (const auto& [m, c] : g.terms()) {
        if (int(m.degree()) > r.truncation()) continue;
        auto it = r.terms_.find(m);
        if (it == r.terms_.end()) {
            r.terms_.emplace(m, c);
        } else {
            it->second += c;
            if (scalar_traits<C>::is_zero(it->second)) r.terms_.erase(it);
        }
    }
    r.recompute_var_bound();
    return r;
}

template <class C>
PowerSeries<C> negate(const PowerSeries<C>& f) {
    PowerSeries<C> r(f.truncation());
    for (const auto& [m, c] : f.terms()) r.set_coefficient(m, -c);
    return r;
}

template <class C>
PowerSeries<C> sub(const PowerSeries<C>& f, const PowerSeries<C>& g) {
    return add(f, negate(g));
}

template <class C>
PowerSeries<C> scale(const PowerSeries<C>& f, const C& s) {
    PowerSeries<C> r(f.truncation());
    if (scalar_traits<C>::is_zero(s)) return r;
    for (const auto& [m, c] : f.terms()) r.set_coefficient(m, c * s);
    return r;
}

/// Cauchy product with every monomial of total degree > trunc discarded.
/// The result window is exactly `trunc` regardless of the operand windows;
/// operands are treated as the polynomials their term lists spell out.
template <class C>
PowerSeries<C> mul(const PowerSeries<C>& f, const PowerSeries<C>& g, int trunc) {
    PowerSeries<C> r(trunc);
    for (const auto& [ma, ca] : f.terms()) {
        if (int(ma.degree()) > trunc) continue;
        for (const auto& [mb, cb] : g.terms()) {
            if (int(ma.degree() + mb.degree()) > trunc) continue;
            const Monomial m = ma.times(mb);
            auto it = r.terms_.find(m);
            if (it == r.terms_.end()) {
                C v = ca * cb;
                if (!scalar_traits<C>::is_zero(v)) r.terms_.emplace(m, std::move(v));
            } else {
                it->second += ca * cb;
                if (scalar_traits<C>::is_zero(it->second)) r.terms_.erase(it);
            }
        }
    }
    r.recompute_var_bound();
    return r;
}

/// f^n with a verified degree budget: the operand's truncation must cover
/// the full support of the result, so a zero result is a true zero.
template <class C>
PowerSeries<C> pow_certified(const PowerSeries<C>& f, unsigned n) {
    if (n == 0) return PowerSeries<C>::one(f.truncation());
    const unsigned need = n * f.support_degree();
    if (int(need) > f.truncation())
        throw BudgetError("power " + std::to_string(n) + " needs truncation >= " +
                          std::to_string(need) + ", have " +
                          std::to_string(f.truncation()));
    PowerSeries<C> r = f;
    for (unsigned i = 1; i < n; ++i) r = mul(r, f, f.truncation());
    return r;
}

/// Formal partial derivative with respect to X_index.
template <class C>
PowerSeries<C> partial(const PowerSeries<C>& f, unsigned index) {
    PowerSeries<C> r(f.truncation());
    for (const auto& [m, c] : f.terms()) {
        const unsigned e = m.exponent(index);
        if (e == 0) continue;
        std::vector<Monomial::Pair> pairs;
        for (const auto& [idx, ex] : m.exponents())
            pairs.emplace_back(idx, idx == index ? ex - 1 : ex);
        r.add_to_coefficient(Monomial::from_pairs(std::move(pairs)),
                             c * scalar_traits<C>::from_int(e));
    }
    return r;
}

/// The single indeterminate index of a univariate series; constants report
/// index 0. Multivariate input throws.
template <class C>
unsigned univariate_index(const PowerSeries<C>& f) {
    std::optional<unsigned> idx;
    for (const auto& [m, c] : f.terms()) {
        for (const auto& [i, e] : m.exponents()) {
            if (idx && *idx != i)
                throw NotUnivariateError("series uses indeterminates " +
                                         std::to_string(*idx) + " and " + std::to_string(i));
            idx = i;
        }
    }
    return idx.value_or(0u);
}

/// Dense coefficient list of a univariate series: result[e] multiplies X^e.
template <class C>
std::vector<C> dense_univariate(const PowerSeries<C>& f) {
    const unsigned idx = univariate_index(f);
    std::vector<C> coeffs(f.support_degree() + 1, C{});
    for (const auto& [m, c] : f.terms()) coeffs[m.exponent(idx)] = c;
    return coeffs;
}

/// Horner evaluation of a univariate series at a point.
template <class C>
C poly_eval(const PowerSeries<C>& f, const C& z) {
    const std::vector<C> coeffs = dense_univariate(f);
    C acc{};
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

/// Coefficients of f(1 + w): result[i] = sum_j C(j, i) f_j = f^(i)(1) / i!.
/// Computed by repeated synthetic division (Taylor shift), which realizes the
/// binomial re-expansion with additions only; exact scalars stay exact, and
/// no intermediate quantity exceeds the magnitude of the answers themselves.
template <class C>
std::vector<C> taylor_at_one(const PowerSeries<C>& f) {
    std::vector<C> shifted = dense_univariate(f);
    const size_t n = shifted.size();
    if (n < 2) return shifted;
    for (size_t i = 0; i + 1 < n; ++i)
        for (size_t j = n - 1; j > i; --j) shifted[j - 1] += shifted[j];
    return shifted;
}

/// The i-th Taylor coefficient of a univariate series about 1,
/// D_i(f) = f^(i)(1) / i!.
template <class C>
C point_derivation(const PowerSeries<C>& f, unsigned i) {
    const std::vector<C> shifted = taylor_at_one(f);
    return i < shifted.size() ? shifted[i] : C{};
}

template <class C>
PowerSeries<Complex> to_numeric(const PowerSeries<C>& f) {
    PowerSeries<Complex> r(f.truncation());
    for (const auto& [m, c] : f.terms())
        r.set_coefficient(m, scalar_traits<C>::to_complex(c));
    return r;
}

using ExactSeries = PowerSeries<ExactScalar>;
using NumericSeries = PowerSeries<Complex>;

}  // namespace falg

#endif  // FALG_POWER_SERIES_HPP
