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

#ifndef MG_LINALG_HPP
#define MG_LINALG_HPP

#include <optional>
#include <vector>

#include "ints.hpp"

namespace mg {

using IntMatrix = std::vector<std::vector<BigInt>>;
using RatMatrix = std::vector<std::vector<BigRat>>;
using RatVector = std::vector<BigRat>;

/* Exact determinant of a square integer matrix by fraction-free
 * (Bareiss) elimination; all intermediate divisions are exact. */
BigInt bareiss_det(IntMatrix m);

BigRat rat_det(RatMatrix m);

/* Solve m * x = rhs exactly; nullopt when m is singular. */
std::optional<RatVector> rat_solve(RatMatrix m, RatVector rhs);

/* Exact inverse; nullopt when singular. */
std::optional<RatMatrix> rat_inverse(RatMatrix m);

}  // namespace mg

#endif
