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

#ifndef MG_DISCRIMINANT_HPP
#define MG_DISCRIMINANT_HPP

#include "linalg.hpp"
#include "poly.hpp"

namespace mg {

/* Sylvester matrix of f (degree m) and g (degree n), size (m+n) x (m+n).
 * Both inputs must be nonzero and m+n must be positive. */
IntMatrix sylvester_matrix(const IntPoly& f, const IntPoly& g);

/* Exact resultant via fraction-free elimination on the Sylvester matrix.
 * Degenerate degrees follow the usual conventions: res(c, g) = c^deg(g). */
BigInt resultant(const IntPoly& f, const IntPoly& g);

/* disc(f) = (-1)^(d(d-1)/2) res(f, f') / lc(f), degree d >= 1 required.
 * Zero exactly when f has a repeated complex root. */
BigInt discriminant(const IntPoly& f);

}  // namespace mg

#endif
