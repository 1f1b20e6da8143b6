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

#ifndef FALG_ERRORS_HPP
#define FALG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace falg {

/// Base class of every error the library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact and numeric operands were mixed in one operation.
struct ModeMismatchError : Error {
    using Error::Error;
};

/// An operation needed more truncation headroom than the operands carry;
/// reporting a result would silently drop nonzero terms.
struct BudgetError : Error {
    using Error::Error;
};

/// A univariate-only operation received a multivariate series.
struct NotUnivariateError : Error {
    using Error::Error;
};

/// Tail ranks (or infinite-order truncations) of two operands disagree.
struct RankMismatchError : Error {
    using Error::Error;
};

/// A weight sequence violates its domain conditions or is too short.
struct WeightError : Error {
    using Error::Error;
};

/// The approximation solver could not reach the requested bound.
struct SolverError : Error {
    using Error::Error;
};

/// Malformed configuration, CLI arguments, or input files.
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace falg

#endif  // FALG_ERRORS_HPP
