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

#ifndef FALG_MODULE_ALGEBRA_HPP
#define FALG_MODULE_ALGEBRA_HPP

#include <climits>
#include <functional>
#include <string>

#include "seminorms.hpp"

namespace falg {

// ---------------------------------------------------------------------------
// Module-value helpers. A module value is either a series (module = algebra)
// or a single scalar (module = scalars through a character); these overloads
// give both cases one vocabulary.
// ---------------------------------------------------------------------------

template <class C>
PowerSeries<C> module_add(const PowerSeries<C>& a, const PowerSeries<C>& b) {
    return add(a, b);
}
inline ExactScalar module_add(const ExactScalar& a, const ExactScalar& b) { return a + b; }
inline Complex module_add(const Complex& a, const Complex& b) { return a + b; }

template <class C>
PowerSeries<C> module_sub(const PowerSeries<C>& a, const PowerSeries<C>& b) {
    return sub(a, b);
}
inline ExactScalar module_sub(const ExactScalar& a, const ExactScalar& b) { return a - b; }
inline Complex module_sub(const Complex& a, const Complex& b) { return a - b; }

template <class C>
PowerSeries<C> module_scale(const C& s, const PowerSeries<C>& m) {
    return scale(m, s);
}
inline ExactScalar module_scale(const ExactScalar& s, const ExactScalar& m) { return s * m; }
inline Complex module_scale(const Complex& s, const Complex& m) { return s * m; }

template <class C>
bool module_is_zero(const PowerSeries<C>& m) {
    return m.is_zero();
}
inline bool module_is_zero(const ExactScalar& m) { return m.is_zero(); }
inline bool module_is_zero(const Complex& m) { return m == Complex(0.0, 0.0); }

template <class C>
int module_truncation(const PowerSeries<C>& m) {
    return m.truncation();
}
inline int module_truncation(const ExactScalar&) { return INT_MAX; }
inline int module_truncation(const Complex&) { return INT_MAX; }

// ---------------------------------------------------------------------------
// Elements, actions, derivations
// ---------------------------------------------------------------------------

/// An element (a, m) of the extension algebra: algebra part plus module part.
template <class C, class M>
struct ModuleElement {
    PowerSeries<C> a;
    M m;

    friend bool operator==(const ModuleElement& u, const ModuleElement& v) {
        return u.a == v.a && u.m == v.m;
    }
    friend bool operator!=(const ModuleElement& u, const ModuleElement& v) {
        return !(u == v);
    }
};

enum class ActionKind { self_module, character_module, custom };

/// Scale factor convention for the extension seminorms: `plain` drops the
/// l_k factor (the form used inside the equivalence proof), `scaled`
/// multiplies by l_k.
enum class SeminormConvention { plain, scaled };

/// Everything needed to work in A (+) M: the seminorm family on A, the module
/// action, the module seminorms, and a working truncation for products.
template <class C, class M>
struct ModuleContext {
    ActionKind kind = ActionKind::custom;
    std::string name = "custom";
    double declared_bound = 1.0;  // action bound, >= 1; analytic 1 for built-ins
    int trunc = 16;
    SeminormFamily<C> family;
    std::function<M(const PowerSeries<C>&, const M&, int)> act;
    std::function<real_of<C>(unsigned, const M&)> module_norm;
    std::function<M()> module_zero;
};

/// Module = the algebra itself, action = truncated multiplication.
template <class C>
ModuleContext<C, PowerSeries<C>> make_self_context(SeminormFamily<C> family, int trunc) {
    ModuleContext<C, PowerSeries<C>> ctx;
    ctx.kind = ActionKind::self_module;
    ctx.name = "self";
    ctx.trunc = trunc;
    ctx.family = family;
    ctx.act = [](const PowerSeries<C>& x, const PowerSeries<C>& m, int t) {
        return mul(x, m, t);
    };
    ctx.module_norm = [family](unsigned k, const PowerSeries<C>& m) {
        return family(k, m);
    };
    ctx.module_zero = [trunc]() { return PowerSeries<C>::zero(trunc); };
    return ctx;
}

/// Module = scalars, action x . lambda = x(point) lambda through the
/// evaluation character (default point 1).
template <class C>
ModuleContext<C, C> make_character_context(SeminormFamily<C> family, int trunc,
                                           C point = scalar_traits<C>::from_int(1)) {
    ModuleContext<C, C> ctx;
    ctx.kind = ActionKind::character_module;
    ctx.name = "char@1";
    ctx.trunc = trunc;
    ctx.family = family;
    ctx.act = [point](const PowerSeries<C>& x, const C& m, int) {
        return poly_eval(x, point) * m;
    };
    ctx.module_norm = [](unsigned, const C& m) { return scalar_traits<C>::abs(m); };
    ctx.module_zero = []() { return C{}; };
    return ctx;
}

/// A linear map D : A -> M. The Leibniz law D(xy) = x.D(y) + y.D(x) is a
/// property of particular instances (tested, not enforced by the type).
template <class C, class M>
struct Derivation {
    std::string name = "zero";
    std::function<M(const PowerSeries<C>&)> apply;

    M operator()(const PowerSeries<C>& x) const { return apply(x); }
};

template <class C, class M>
Derivation<C, M> zero_derivation(const ModuleContext<C, M>& ctx) {
    Derivation<C, M> d;
    d.name = "zero";
    d.apply = [zero = ctx.module_zero](const PowerSeries<C>&) { return zero(); };
    return d;
}

/// D = d/dX_index into the self module; Leibniz holds exactly.
template <class C>
Derivation<C, PowerSeries<C>> partial_derivation(unsigned index) {
    Derivation<C, PowerSeries<C>> d;
    d.name = "partial_" + std::to_string(index);
    d.apply = [index](const PowerSeries<C>& x) { return partial(x, index); };
    return d;
}

/// D(p) = p'(1) into the scalars; Leibniz w.r.t. the evaluation character.
template <class C>
Derivation<C, C> point_derivation_order1() {
    Derivation<C, C> d;
    d.name = "point@1";
    d.apply = [](const PowerSeries<C>& x) { return point_derivation(x, 1); };
    return d;
}

/// Linear extension of a finite rule table on basis monomials; monomials
/// absent from the table map to zero.
template <class C, class M>
Derivation<C, M> rule_table_derivation(std::map<Monomial, M> table,
                                       const ModuleContext<C, M>& ctx,
                                       std::string name = "rule_table") {
    Derivation<C, M> d;
    d.name = std::move(name);
    d.apply = [table = std::move(table), zero = ctx.module_zero](const PowerSeries<C>& x) {
        M acc = zero();
        for (const auto& [m, c] : x.terms()) {
            auto it = table.find(m);
            if (it != table.end()) acc = module_add(acc, module_scale(c, it->second));
        }
        return acc;
    };
    return d;
}

/// D'(x) = D(x) + x_{m0} * delta: the smallest change that breaks Leibniz.
template <class C, class M>
Derivation<C, M> perturb_on_monomial(const Derivation<C, M>& base, const Monomial& m0,
                                     const M& delta) {
    Derivation<C, M> d;
    d.name = base.name + "+bump";
    d.apply = [base, m0, delta](const PowerSeries<C>& x) {
        return module_add(base.apply(x), module_scale(x.coefficient(m0), delta));
    };
    return d;
}

// ---------------------------------------------------------------------------
// Operations on the extension algebra
// ---------------------------------------------------------------------------

/// (x, m)(y, n) = (xy, x.n + y.m). The truncation must be covered by both
/// operands so discarded terms are genuinely out of window.
template <class C, class M>
ModuleElement<C, M> mod_mul(const ModuleElement<C, M>& u, const ModuleElement<C, M>& v,
                            const ModuleContext<C, M>& ctx, int trunc) {
    const int have = std::min(std::min(u.a.truncation(), v.a.truncation()),
                              std::min(module_truncation(u.m), module_truncation(v.m)));
    if (trunc > have)
        throw BudgetError("product truncation " + std::to_string(trunc) +
                          " exceeds operand truncation " + std::to_string(have));
    return ModuleElement<C, M>{mul(u.a, v.a, trunc),
                               module_add(ctx.act(u.a, v.m, trunc), ctx.act(v.a, u.m, trunc))};
}

/// Action bound used as the seminorm scale: analytically 1 for the two
/// built-in actions (they are contractive), declared for custom actions.
template <class C, class M>
real_of<C> l_k_constant(const ModuleContext<C, M>& ctx, unsigned /*k*/) {
    if constexpr (scalar_traits<C>::is_exact) {
        if (ctx.kind != ActionKind::custom) return Rational(1);
        const Rational declared(ctx.declared_bound);
        return declared < 1 ? Rational(1) : declared;
    } else {
        if (ctx.kind != ActionKind::custom) return 1.0;
        return std::max(1.0, ctx.declared_bound);
    }
}

/// q_k((x, m)) = l_k (p_k(x) + p_k(m)); the plain convention drops l_k.
template <class C, class M>
real_of<C> q_k(const ModuleElement<C, M>& u, unsigned k, const ModuleContext<C, M>& ctx,
               SeminormConvention conv = SeminormConvention::plain) {
    real_of<C> base = ctx.family(k, u.a) + ctx.module_norm(k, u.m);
    if (conv == SeminormConvention::scaled) base = base * l_k_constant(ctx, k);
    return base;
}

/// q_{k,D}((x, m)) = l_k (p_k(x) + p_k(D(x) - m)): distance of the module
/// part to the graph of D.
template <class C, class M>
real_of<C> q_kD(const ModuleElement<C, M>& u, unsigned k, const Derivation<C, M>& D,
                const ModuleContext<C, M>& ctx,
                SeminormConvention conv = SeminormConvention::plain) {
    real_of<C> base = ctx.family(k, u.a) + ctx.module_norm(k, module_sub(D(u.a), u.m));
    if (conv == SeminormConvention::scaled) base = base * l_k_constant(ctx, k);
    return base;
}

/// theta_D : (x, m) -> (x, D(x) - m). An involution; an isometry between
/// q_k and q_{k,D}; multiplicative exactly when D satisfies Leibniz.
template <class C, class M>
ModuleElement<C, M> theta_D(const ModuleElement<C, M>& u, const Derivation<C, M>& D) {
    return ModuleElement<C, M>{u.a, module_sub(D(u.a), u.m)};
}

/// iota : x -> (x, 0), the embedding of A.
template <class C, class M>
ModuleElement<C, M> embed_iota(const PowerSeries<C>& x, const ModuleContext<C, M>& ctx) {
    return ModuleElement<C, M>{x, ctx.module_zero()};
}

/// Square-zero certificate for elements of {0} (+) M: verifies u^2 = 0.
/// Membership for nonzero algebra part is out of scope and rejected.
template <class C, class M>
bool radical_witness(const ModuleElement<C, M>& u, const ModuleContext<C, M>& ctx) {
    if (!u.a.is_zero())
        throw ConfigError("square-zero certificate requires a zero algebra part");
    const int t = std::min(ctx.trunc, std::min(u.a.truncation(), module_truncation(u.m)));
    const ModuleElement<C, M> sq = mod_mul(u, u, ctx, t);
    return sq.a.is_zero() && module_is_zero(sq.m);
}

}  // namespace falg

#endif  // FALG_MODULE_ALGEBRA_HPP
