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
#ifndef MG_MEASURE_HPP
#define MG_MEASURE_HPP

#include <optional>
#include <vector>

#include "mg/report.hpp"
#include "mg/roots.hpp"

namespace mg {

/* M(f) together with the coefficient-norm window 2^{-d}*l1 <= M <= l1. */
struct MeasureResult {
  Bound value;
  BigRat l1_lower;
  BigInt l1_upper;
};

/* Measure of f from its certified roots: |lead| * prod max(1, |root|).
 * Exact whenever every factor is pinned rationally (roots inside the unit
 * circle, rational roots, conjugate pairs with exact squared modulus, or
 * the all-outside case where the product telescopes to |constant term|).
 * Domain error if rs was not certified from f. */
MeasureResult mahler_measure(const IntPoly& f, const RootSet& rs);

/* Convenience: find roots, then measure. */
MeasureResult measure_of(const IntPoly& f, Prec start_prec = 128,
                         Prec prec_cap = 4096);

/* M^{2d-2} >= d^{-d}|disc|, with the equality case cross-checked against
 * the two-term shape a0*x^d + ad, |a0| = |ad|: a certified equality outside
 * that family, or a strict gap inside it, is reported as a failure. */
InequalityReport check_mahler_classical(const IntPoly& f, Prec start_prec = 128,
                                        Prec prec_cap = 4096);

/* M^{2d-3} >= (2r)^{d(1-d)}|disc| for monic f whose roots of modulus > r
 * come in equal-modulus pairs. r = nullopt derives the smallest admissible
 * threshold. A vanishing discriminant short-circuits: the right side is
 * zero and no pairing is required. Hypothesis error when f is not monic,
 * r < 1, or the pairing does not exist. */
InequalityReport check_paired_bound(const IntPoly& f,
                                    std::optional<BigRat> r = std::nullopt,
                                    Prec start_prec = 128,
                                    Prec prec_cap = 4096);

/* Measure of x^2 + bx + c without root finding; valid only when the roots
 * are a nonreal conjugate pair (b^2 - 4c < 0, domain error otherwise). */
BigRat ruppert_quadratic(const BigRat& b, const BigRat& c);

/* The window 2^{-d}*l1 <= M <= l1 as two reports, named l1-lower
 * (M >= 2^{-d}*l1) and l1-upper (l1 >= M). */
std::vector<InequalityReport> check_l1(const IntPoly& f, Prec start_prec = 128,
                                       Prec prec_cap = 4096);

/* |disc| <= (2r)^{d(d-1)}*l1^{2d-3} under the paired-roots hypothesis
 * (report "disc-l1"), plus the hypothesis-free companion
 * |disc| <= d^d*l1^{2d-2} (report "disc-l1-mahler"). Both sides exact. */
std::vector<InequalityReport> check_disc_l1(const IntPoly& f,
                                            std::optional<BigRat> r = std::nullopt,
                                            Prec start_prec = 128,
                                            Prec prec_cap = 4096);

} // namespace mg

#endif
