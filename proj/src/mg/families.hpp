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

#ifndef MG_FAMILIES_HPP
#define MG_FAMILIES_HPP

#include <optional>

#include "poly.hpp"

namespace mg {

/* A family instance together with its closed-form predictions.  The
 * predictions are claims to be confirmed against the exact resultant
 * and the certified measure, never substituted for them. */
struct FamilyMember {
  IntPoly poly;
  BigInt predicted_abs_disc;
  std::optional<BigInt> predicted_measure;
};

/* (p+1)x^d - p: every root lies strictly inside the unit circle, so
 * M = p+1 while |disc| = d^d (p(p+1))^(d-1).  As p grows the measure
 * meets the classical discriminant bound up to (1+1/p)^(d-1), which
 * pins both the exponent 2d-2 and the constant d^-d. */
FamilyMember binomial_family(const BigInt& p, int d);

/* x^d + p x^(d-1) + (-1)^(d+1) p, irreducible by the Eisenstein
 * criterion at p; |disc| = p^(d-1)(d^d + ((d-1)p)^(d-1)).  Shows the
 * exponent 2d-2 stays sharp among monic irreducible polynomials. */
FamilyMember eisenstein_family(const BigInt& p, int d);

/* x^d - 16d(dt+w)x^(d-1) + (dt+w) for the supported (d, w) shapes;
 * one dominant root of size about 16d(dt+w), so |disc| grows like
 * t^(2d-2) while M grows linearly in t. */
IntPoly dominant_trinomial(int d, int w, long t);

/* Exact trial-division primality test for small family parameters. */
bool is_prime_small(const BigInt& n);

}  // namespace mg

#endif
