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

#ifndef MG_CPLX_HPP
#define MG_CPLX_HPP

#include "interval.hpp"
#include "real.hpp"

namespace mg {

/* Plain complex point in mpfr arithmetic (round to nearest).  Used by the
 * iterative root finder; certified statements are derived afterwards with
 * CInterval evaluations, never from these approximations. */
struct Cplx {
  Real re, im;

  Cplx() = default;
  Cplx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  static Cplx of(double r, double i, Prec p) { return {Real::of(r, p), Real::of(i, p)}; }
  static Cplx zero(Prec p) { return {Real::of(0L, p), Real::of(0L, p)}; }

  Prec prec() const { return join_prec(re, im); }

  Cplx operator+(const Cplx& o) const { return {re + o.re, im + o.im}; }
  Cplx operator-(const Cplx& o) const { return {re - o.re, im - o.im}; }
  Cplx operator*(const Cplx& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  Cplx operator/(const Cplx& o) const {
    Real d = o.re * o.re + o.im * o.im;
    return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
  }
  Cplx conj() const { return {re, -im}; }

  Real norm() const { return re * re + im * im; }
  Real abs() const { return r_sqrt(norm(), MPFR_RNDN); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  CInterval enclose() const { return {Interval::point(re), Interval::point(im)}; }
};

}  // namespace mg

#endif
