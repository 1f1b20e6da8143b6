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

#ifndef FALG_MONOMIAL_HPP
#define FALG_MONOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace falg {

/// Sparse commutative monomial: exponents indexed by indeterminate number.
///
/// Invariants: pairs sorted by index, no zero exponents stored, cached total
/// degree equals the sum of exponents. Ordering is graded lexicographic
/// (degree first, then earlier indeterminates weigh more), which fixes a
/// deterministic iteration order for every series.
class Monomial {
  public:
    using Pair = std::pair<unsigned, unsigned>;  // (index, exponent)

    Monomial() = default;

    static Monomial variable(unsigned index, unsigned exponent = 1) {
        Monomial m;
        if (exponent > 0) {
            m.exps_.emplace_back(index, exponent);
            m.degree_ = exponent;
        }
        return m;
    }

    /// Builds from arbitrary (index, exponent) pairs; merges duplicates,
    /// drops zeros.
    static Monomial from_pairs(std::vector<Pair> pairs) {
        std::sort(pairs.begin(), pairs.end());
        Monomial m;
        for (const auto& [idx, e] : pairs) {
            if (e == 0) continue;
            if (!m.exps_.empty() && m.exps_.back().first == idx) {
                m.exps_.back().second += e;
            } else {
                m.exps_.emplace_back(idx, e);
            }
            m.degree_ += e;
        }
        return m;
    }

    unsigned degree() const { return degree_; }
    bool is_unit() const { return exps_.empty(); }
    const std::vector<Pair>& exponents() const { return exps_; }

    unsigned exponent(unsigned index) const {
        for (const auto& [idx, e] : exps_)
            if (idx == index) return e;
        return 0;
    }

    /// One past the largest indeterminate index present; 0 for the unit.
    unsigned index_bound() const { return exps_.empty() ? 0u : exps_.back().first + 1u; }

    Monomial times(const Monomial& o) const {
        Monomial r;
        r.exps_.reserve(exps_.size() + o.exps_.size());
        auto a = exps_.begin();
        auto b = o.exps_.begin();
        while (a != exps_.end() && b != o.exps_.end()) {
            if (a->first < b->first) {
                r.exps_.push_back(*a++);
            } else if (b->first < a->first) {
                r.exps_.push_back(*b++);
            } else {
                r.exps_.emplace_back(a->first, a->second + b->second);
                ++a;
                ++b;
            }
        }
        r.exps_.insert(r.exps_.end(), a, exps_.end());
        r.exps_.insert(r.exps_.end(), b, o.exps_.end());
        r.degree_ = degree_ + o.degree_;
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.exps_ == b.exps_;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

    // Graded lex: lower degree sorts first; at equal degree the monomial with
    // a positive exponent on the earliest differing indeterminate sorts last.
    friend bool operator<(const Monomial& a, const Monomial& b) {
        if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
        const size_t n = std::min(a.exps_.size(), b.exps_.size());
        for (size_t i = 0; i < n; ++i) {
            if (a.exps_[i].first != b.exps_[i].first)
                return a.exps_[i].first > b.exps_[i].first;
            if (a.exps_[i].second != b.exps_[i].second)
                return a.exps_[i].second < b.exps_[i].second;
        }
        return false;  // equal degree with identical shared prefix => equal
    }

  private:
    std::vector<Pair> exps_;
    unsigned degree_ = 0;
};

}  // namespace falg

#endif  // FALG_MONOMIAL_HPP
