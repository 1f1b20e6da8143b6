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

#ifndef FALG_HIGHER_DERIVATIONS_HPP
#define FALG_HIGHER_DERIVATIONS_HPP

#include <cmath>
#include <vector>

#include "module_algebra.hpp"

namespace falg {

/// Tail length declaration: a finite rank r, or the infinite kind truncated
/// at R with a certified geometric tail bound.
struct RankSpec {
    bool infinite = false;
    unsigned value = 1;  // rank r, or truncation R for the infinite kind

    static RankSpec finite(unsigned r) { return RankSpec{false, r}; }
    static RankSpec inf_trunc(unsigned R) { return RankSpec{true, R}; }

    friend bool operator==(const RankSpec& a, const RankSpec& b) {
        return a.infinite == b.infinite && a.value == b.value;
    }
    friend bool operator!=(const RankSpec& a, const RankSpec& b) { return !(a == b); }
};

/// Element (x, m_1..m_r) of the rank-r extension: algebra part plus a scalar
/// tail. Tails multiply by convolution (the module is the zero-constant-term
/// power series in one formal variable, truncated at the rank).
template <class C>
struct ArElement {
    PowerSeries<C> a;
    std::vector<C> tail;  // tail[i] stores m_{i+1}
    RankSpec rank;

    friend bool operator==(const ArElement& u, const ArElement& v) {
        return u.rank == v.rank && u.a == v.a && u.tail == v.tail;
    }
    friend bool operator!=(const ArElement& u, const ArElement& v) { return !(u == v); }
};

template <class C>
ArElement<C> make_ar_element(PowerSeries<C> a, std::vector<C> tail, RankSpec rank) {
    if (tail.size() != rank.value)
        throw ConfigError("tail length " + std::to_string(tail.size()) +
                          " does not match declared rank " + std::to_string(rank.value));
    return ArElement<C>{std::move(a), std::move(tail), rank};
}

/// (0, e_j): zero algebra part, unit tail in slot j (1-based).
template <class C>
ArElement<C> ar_unit_tail(unsigned j, RankSpec rank, int trunc) {
    if (j < 1 || j > rank.value) throw ConfigError("unit tail slot out of range");
    std::vector<C> tail(rank.value, C{});
    tail[j - 1] = scalar_traits<C>::from_int(1);
    return ArElement<C>{PowerSeries<C>::zero(trunc), std::move(tail), rank};
}

template <class C>
ArElement<C> ar_embed(const PowerSeries<C>& x, RankSpec rank) {
    return ArElement<C>{x, std::vector<C>(rank.value, C{}), rank};
}

template <class C>
ArElement<C> ar_add(const ArElement<C>& u, const ArElement<C>& v) {
    if (u.rank != v.rank) throw RankMismatchError("ar_add requires equal ranks");
    std::vector<C> tail(u.rank.value, C{});
    for (unsigned i = 0; i < u.rank.value; ++i) tail[i] = u.tail[i] + v.tail[i];
    return ArElement<C>{add(u.a, v.a), std::move(tail), u.rank};
}

/// (x, {m_i})(y, {n_i}) = (xy, {x(1) n_i + y(1) m_i + sum_{j<i} m_j n_{i-j}}):
/// the action runs through evaluation at 1 and the tails convolve.
template <class C>
ArElement<C> ar_mul(const ArElement<C>& u, const ArElement<C>& v) {
    if (u.rank != v.rank) throw RankMismatchError("ar_mul requires equal ranks");
    const unsigned r = u.rank.value;
    const int trunc = std::min(u.a.truncation(), v.a.truncation());
    const C x1 = poly_eval(u.a, scalar_traits<C>::from_int(1));
    const C y1 = poly_eval(v.a, scalar_traits<C>::from_int(1));

    std::vector<C> tail(r, C{});
    for (unsigned i = 1; i <= r; ++i) {
        C acc = x1 * v.tail[i - 1] + y1 * u.tail[i - 1];
        for (unsigned j = 1; j < i; ++j) acc += u.tail[j - 1] * v.tail[i - j - 1];
        tail[i - 1] = acc;
    }
    return ArElement<C>{mul(u.a, v.a, trunc), std::move(tail), u.rank};
}

/// Sequence D_1, D_2, ... of scalar-valued component maps. The default
/// components are the Taylor coefficients at 1, D_s(p) = p^(s)(1)/s!, which
/// satisfy the convolution Leibniz rule exactly.
template <class C>
struct HigherDerivation {
    std::string name = "taylor@1";
    std::function<C(unsigned s, const PowerSeries<C>&)> component;

    C operator()(unsigned s, const PowerSeries<C>& x) const { return component(s, x); }
};

template <class C>
HigherDerivation<C> taylor_higher_derivation() {
    HigherDerivation<C> d;
    d.name = "taylor@1";
    d.component = [](unsigned s, const PowerSeries<C>& x) { return point_derivation(x, s); };
    return d;
}

template <class C>
HigherDerivation<C> zero_higher_derivation() {
    HigherDerivation<C> d;
    d.name = "zero";
    d.component = [](unsigned, const PowerSeries<C>&) { return C{}; };
    return d;
}

/// Bumps component s0 by delta on one basis monomial; the smallest change
/// that must break the convolution Leibniz rule.
template <class C>
HigherDerivation<C> perturb_higher_component(const HigherDerivation<C>& base, unsigned s0,
                                             const Monomial& m0, const C& delta) {
    HigherDerivation<C> d;
    d.name = base.name + "+bump";
    d.component = [base, s0, m0, delta](unsigned s, const PowerSeries<C>& x) {
        C v = base.component(s, x);
        if (s == s0) v += x.coefficient(m0) * delta;
        return v;
    };
    return d;
}

/// D_s(xy) - x(1) D_s(y) - y(1) D_s(x) - sum_{i=1}^{s-1} D_i(x) D_{s-i}(y).
/// Zero exactly for genuine higher derivations.
template <class C>
C higher_leibniz_defect(const HigherDerivation<C>& D, const PowerSeries<C>& x,
                        const PowerSeries<C>& y, unsigned s) {
    const int full = int(x.support_degree() + y.support_degree());
    const PowerSeries<C> xy = mul(x, y, std::max(full, 1));
    const C one = scalar_traits<C>::from_int(1);
    C defect = D(s, xy) - poly_eval(x, one) * D(s, y) - poly_eval(y, one) * D(s, x);
    for (unsigned i = 1; i < s; ++i) defect -= D(i, x) * D(s - i, y);
    return defect;
}

/// theta_D : (x, {m_i}) -> (x, {D_i(x) - m_i}); involution, and
/// multiplicative precisely when the higher Leibniz rule holds.
template <class C>
ArElement<C> theta_D_higher(const ArElement<C>& u, const HigherDerivation<C>& D) {
    std::vector<C> tail(u.rank.value, C{});
    for (unsigned i = 1; i <= u.rank.value; ++i) tail[i - 1] = D(i, u.a) - u.tail[i - 1];
    return ArElement<C>{u.a, std::move(tail), u.rank};
}

/// Seminorm on rank-r elements: p_k(x) + sum_i |m_i| (optionally scaled by
/// a declared bound via the convention flag; the built-in evaluation-at-1
/// action is contractive so the analytic constant is 1).
template <class C>
real_of<C> ar_q_k(const ArElement<C>& u, unsigned k, const SeminormFamily<C>& family) {
    real_of<C> acc = family(k, u.a);
    for (const C& m : u.tail) acc += scalar_traits<C>::abs(m);
    return acc;
}

/// Twisted version: p_k(x) + sum_i |D_i(x) - m_i|.
template <class C>
real_of<C> ar_q_kD(const ArElement<C>& u, unsigned k, const HigherDerivation<C>& D,
                   const SeminormFamily<C>& family) {
    real_of<C> acc = family(k, u.a);
    for (unsigned i = 1; i <= u.rank.value; ++i)
        acc += scalar_traits<C>::abs(D(i, u.a) - u.tail[i - 1]);
    return acc;
}

/// q'_{k,D}(p) = p_k(p) + sum_i |p^(i)(1)|/i! with p_k the sampled sup norm
/// at radius 2 - 1/k. Polynomial input keeps the sum finite: for the
/// infinite kind every term beyond the degree vanishes, so the truncated
/// sum is the exact value.
template <class C>
double q_kD_prime(const PowerSeries<C>& p, unsigned k, RankSpec rank,
                  unsigned samples = 512) {
    const PowerSeries<Complex> q = to_numeric(p);
    const SeminormFamily<Complex> fam = make_disc_sup_family(samples);
    double acc = fam(k, q);
    const std::vector<Complex> shifted = taylor_at_one(q);
    const unsigned top =
        rank.infinite ? unsigned(shifted.empty() ? 0 : shifted.size() - 1)
                      : std::min(rank.value, unsigned(shifted.empty() ? 0 : shifted.size() - 1));
    for (unsigned i = 1; i <= top; ++i) acc += std::abs(shifted[i]);
    return acc;
}

/// Metric evaluations carry the certified remainder of the truncated
/// geometric series alongside the computed value.
struct MetricValue {
    double value = 0.0;
    double tail_bound = 0.0;
};

/// d(u, 0) = |x| + sum_i 2^{-i} |m_i| / (1 + |m_i|), truncated at R with
/// remainder <= 2^{-R}. The algebra-part norm is pluggable.
template <class C>
MetricValue metric_d(const ArElement<C>& u,
                     const std::function<double(const PowerSeries<C>&)>& a_norm) {
    if (!u.rank.infinite)
        throw RankMismatchError("metric is defined for the infinite kind (truncated at R)");
    MetricValue out;
    out.value = a_norm(u.a);
    for (unsigned i = 1; i <= u.rank.value; ++i) {
        const double t = std::abs(scalar_traits<C>::to_complex(u.tail[i - 1]));
        out.value += std::ldexp(t / (1.0 + t), -int(i));
    }
    out.tail_bound = std::ldexp(1.0, -int(u.rank.value));
    return out;
}

/// Twisted metric: |x| + sum_i 2^{-i} |D_i(x) - m_i| / (1 + |D_i(x) - m_i|).
/// Equals metric_d(theta_D_higher(u)) identically.
template <class C>
MetricValue metric_dD(const ArElement<C>& u, const HigherDerivation<C>& D,
                      const std::function<double(const PowerSeries<C>&)>& a_norm) {
    return metric_d(theta_D_higher(u, D), a_norm);
}

/// Default algebra-part norm for the metrics: the sampled sup family at a
/// designated level.
template <class C>
std::function<double(const PowerSeries<C>&)> default_a_norm(unsigned k = 1,
                                                            unsigned samples = 512) {
    return [k, samples, fam = make_disc_sup_family(samples)](const PowerSeries<C>& f) {
        return fam(k, to_numeric(f));
    };
}

}  // namespace falg

#endif  // FALG_HIGHER_DERIVATIONS_HPP
