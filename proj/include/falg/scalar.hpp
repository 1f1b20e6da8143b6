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

#ifndef FALG_SCALAR_HPP
#define FALG_SCALAR_HPP

#include <complex>
#include <string>

#include "rational.hpp"

namespace falg {

/// Complex scalar with exact rational real and imaginary parts.
///
/// Arithmetic is equality-exact. The absolute value is exposed only for
/// axis values (re == 0 or im == 0); a general |a+bi| is irrational and
/// belongs to numeric mode.
struct ExactScalar {
    Rational re{0};
    Rational im{0};

    ExactScalar() = default;
    ExactScalar(int v) : re(v) {}  // NOLINT: implicit for literals
    ExactScalar(Rational r) : re(std::move(r)) {}
    ExactScalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }

    friend ExactScalar operator+(const ExactScalar& a, const ExactScalar& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend ExactScalar operator-(const ExactScalar& a, const ExactScalar& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend ExactScalar operator-(const ExactScalar& a) { return {-a.re, -a.im}; }
    friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend ExactScalar operator/(const ExactScalar& a, const ExactScalar& b) {
        const Rational d = b.re * b.re + b.im * b.im;
        if (d == 0) throw Error("division by zero exact scalar");
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    ExactScalar& operator+=(const ExactScalar& o) { return *this = *this + o; }
    ExactScalar& operator-=(const ExactScalar& o) { return *this = *this - o; }
    ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }
    friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }
};

/// |z| as an exact rational; defined for axis values only.
inline Rational exact_abs(const ExactScalar& z) {
    if (z.im == 0) return abs(z.re);
    if (z.re == 0) return abs(z.im);
    throw Error("exact |a+bi| with a,b != 0 is irrational; use numeric mode");
}

using Complex = std::complex<double>;

template <class C>
struct scalar_traits;

template <>
struct scalar_traits<ExactScalar> {
    static constexpr bool is_exact = true;
    using real_type = Rational;
    static real_type abs(const ExactScalar& z) { return exact_abs(z); }
    static bool is_zero(const ExactScalar& z) { return z.is_zero(); }
    static ExactScalar from_int(long v) { return ExactScalar(static_cast<int>(v)); }
    static ExactScalar from_bigint(const BigInt& v) { return ExactScalar(Rational(v)); }
    static Complex to_complex(const ExactScalar& z) {
        return {to_double(z.re), to_double(z.im)};
    }
    static double real_to_double(const real_type& r) { return to_double(r); }
    static constexpr const char* mode_name() { return "exact"; }
};

template <>
struct scalar_traits<Complex> {
    static constexpr bool is_exact = false;
    using real_type = double;
    static real_type abs(const Complex& z) { return std::abs(z); }
    static bool is_zero(const Complex& z) { return z == Complex(0.0, 0.0); }
    static Complex from_int(long v) { return Complex(static_cast<double>(v), 0.0); }
    static Complex from_bigint(const BigInt& v) { return Complex(v.convert_to<double>(), 0.0); }
    static Complex to_complex(const Complex& z) { return z; }
    static double real_to_double(const real_type& r) { return r; }
    static constexpr const char* mode_name() { return "numeric"; }
};

template <class C>
using real_of = typename scalar_traits<C>::real_type;

}  // namespace falg

#endif  // FALG_SCALAR_HPP
