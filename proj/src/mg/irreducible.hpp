/*
   Copyright 2026 The mahler-gauge authors

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
#ifndef MG_IRREDUCIBLE_HPP
#define MG_IRREDUCIBLE_HPP

#include "mg/poly.hpp"

namespace mg {

/* Irreducibility over Q for primitive f (domain error otherwise).
 * Pipeline: squarefree and rational-root shortcuts, then reduction mod a
 * battery of small primes coprime to lead*disc, then an exhaustive factor
 * search over certified root subsets when every reduction stays composite.
 * Deterministic; budget error only for degrees past desk scale. */
bool is_irreducible(const IntPoly& f, Prec prec_cap = 4096);

} // namespace mg

#endif
