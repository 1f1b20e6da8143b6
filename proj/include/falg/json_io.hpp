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

#ifndef FALG_JSON_IO_HPP
#define FALG_JSON_IO_HPP

#include <fstream>
#include <string>
#include <variant>

#include "json.hpp"

#include "higher_derivations.hpp"

namespace falg {

using Json = nlohmann::json;

inline const Json& json_need(const Json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw ConfigError(std::string("missing JSON field '") + key + "'");
    return *it;
}

// ---------------------------------------------------------------------------
// Coefficients: exact mode uses rational strings "p/q", numeric mode numbers
// ---------------------------------------------------------------------------

inline Json coeff_to_json(const ExactScalar& c) {
    return Json{{"re", rational_string(c.re)}, {"im", rational_string(c.im)}};
}

inline Json coeff_to_json(const Complex& c) {
    return Json{{"re", c.real()}, {"im", c.imag()}};
}

template <class C>
C coeff_from_json(const Json& j) {
    if constexpr (scalar_traits<C>::is_exact) {
        const Json& re = json_need(j, "re");
        if (!re.is_string())
            throw ModeMismatchError("exact coefficients must be rational strings");
        Rational im{0};
        if (j.contains("im")) {
            if (!j["im"].is_string())
                throw ModeMismatchError("exact coefficients must be rational strings");
            im = parse_rational(j["im"].get<std::string>());
        }
        return ExactScalar(parse_rational(re.get<std::string>()), im);
    } else {
        const Json& re = json_need(j, "re");
        if (!re.is_number())
            throw ModeMismatchError("numeric coefficients must be JSON numbers");
        double im = 0.0;
        if (j.contains("im")) {
            if (!j["im"].is_number())
                throw ModeMismatchError("numeric coefficients must be JSON numbers");
            im = j["im"].get<double>();
        }
        return Complex(re.get<double>(), im);
    }
}

// ---------------------------------------------------------------------------
// Series
// ---------------------------------------------------------------------------

template <class C>
Json series_to_json(const PowerSeries<C>& f) {
    Json terms = Json::array();
    for (const auto& [m, c] : f.terms()) {
        Json exps = Json::object();
        for (const auto& [idx, e] : m.exponents()) exps[std::to_string(idx)] = e;
        Json t = coeff_to_json(c);
        t["exps"] = std::move(exps);
        terms.push_back(std::move(t));
    }
    return Json{{"mode", scalar_traits<C>::mode_name()},
                {"trunc", f.truncation()},
                {"terms", std::move(terms)}};
}

template <class C>
PowerSeries<C> series_from_json(const Json& j) {
    const std::string mode = json_need(j, "mode").get<std::string>();
    if (mode != scalar_traits<C>::mode_name())
        throw ModeMismatchError("series has mode '" + mode + "', expected '" +
                                scalar_traits<C>::mode_name() + "'");
    const int trunc = json_need(j, "trunc").get<int>();
    PowerSeries<C> f(trunc);
    for (const Json& t : json_need(j, "terms")) {
        std::vector<Monomial::Pair> pairs;
        for (const auto& [key, val] : json_need(t, "exps").items())
            pairs.emplace_back(unsigned(std::stoul(key)), val.template get<unsigned>());
        f.add_to_coefficient(Monomial::from_pairs(std::move(pairs)), coeff_from_json<C>(t));
    }
    return f;
}

/// Mode-dispatched series for the CLI boundary; the typed accessors throw
/// ModeMismatchError on the wrong branch.
using AnySeries = std::variant<ExactSeries, NumericSeries>;

inline AnySeries any_series_from_json(const Json& j) {
    const std::string mode = json_need(j, "mode").get<std::string>();
    if (mode == "exact") return series_from_json<ExactScalar>(j);
    if (mode == "numeric") return series_from_json<Complex>(j);
    throw ConfigError("unknown series mode '" + mode + "'");
}

// ---------------------------------------------------------------------------
// Extension-algebra elements
// ---------------------------------------------------------------------------

template <class C>
Json module_to_json(const ModuleElement<C, PowerSeries<C>>& u) {
    return Json{{"a", series_to_json(u.a)}, {"m", series_to_json(u.m)}, {"action", "self"}};
}

template <class C>
Json module_to_json(const ModuleElement<C, C>& u) {
    return Json{{"a", series_to_json(u.a)}, {"m", coeff_to_json(u.m)}, {"action", "char@1"}};
}

inline std::string json_action(const Json& j) {
    return json_need(j, "action").get<std::string>();
}

template <class C>
ModuleElement<C, PowerSeries<C>> self_element_from_json(const Json& j) {
    if (json_action(j) != "self")
        throw ConfigError("element action is '" + json_action(j) + "', expected 'self'");
    return ModuleElement<C, PowerSeries<C>>{series_from_json<C>(json_need(j, "a")),
                                            series_from_json<C>(json_need(j, "m"))};
}

template <class C>
ModuleElement<C, C> char_element_from_json(const Json& j) {
    if (json_action(j) != "char@1")
        throw ConfigError("element action is '" + json_action(j) + "', expected 'char@1'");
    return ModuleElement<C, C>{series_from_json<C>(json_need(j, "a")),
                               coeff_from_json<C>(json_need(j, "m"))};
}

// ---------------------------------------------------------------------------
// Rank-r elements
// ---------------------------------------------------------------------------

inline Json rank_to_json(const RankSpec& r) {
    if (r.infinite) return Json{{"inf_trunc", r.value}};
    return Json(r.value);
}

inline RankSpec rank_from_json(const Json& j) {
    if (j.is_number_unsigned() || j.is_number_integer())
        return RankSpec::finite(j.get<unsigned>());
    if (j.is_object() && j.contains("inf_trunc"))
        return RankSpec::inf_trunc(j["inf_trunc"].get<unsigned>());
    throw ConfigError("rank must be an integer or {\"inf_trunc\": R}");
}

template <class C>
Json ar_to_json(const ArElement<C>& u) {
    Json tail = Json::array();
    for (const C& m : u.tail) tail.push_back(coeff_to_json(m));
    return Json{{"a", series_to_json(u.a)},
                {"tail", std::move(tail)},
                {"rank", rank_to_json(u.rank)}};
}

template <class C>
ArElement<C> ar_from_json(const Json& j) {
    const RankSpec rank = rank_from_json(json_need(j, "rank"));
    std::vector<C> tail;
    for (const Json& t : json_need(j, "tail")) tail.push_back(coeff_from_json<C>(t));
    return make_ar_element(series_from_json<C>(json_need(j, "a")), std::move(tail), rank);
}

// ---------------------------------------------------------------------------
// Files
// ---------------------------------------------------------------------------

inline Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const Json::exception& e) {
        throw ConfigError("invalid JSON in '" + path + "': " + e.what());
    }
    return j;
}

inline void save_json(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

}  // namespace falg

#endif  // FALG_JSON_IO_HPP
