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

// Umbrella header: formal power series, graded seminorm families,
// module-extension algebras with derivation twists, higher-derivation tails,
// spectral certificates, weighted norms, and the min-norm approximation
// solver, plus the deterministic experiment runners.

#ifndef FALG_FALG_HPP
#define FALG_FALG_HPP

#include "errors.hpp"
#include "rational.hpp"
#include "scalar.hpp"
#include "monomial.hpp"
#include "power_series.hpp"
#include "rng.hpp"
#include "seminorms.hpp"
#include "module_algebra.hpp"
#include "higher_derivations.hpp"
#include "spectral.hpp"
#include "weights.hpp"
#include "approx.hpp"
#include "json_io.hpp"
#include "experiments.hpp"

#endif  // FALG_FALG_HPP
