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

#ifndef MG_REAL_HPP
#define MG_REAL_HPP

#include <mpfr.h>

#include <algorithm>
#include <string>
#include <utility>

#include "ints.hpp"

namespace mg {

using Prec = mpfr_prec_t;

/* Thin RAII wrapper over mpfr_t with an explicit per-value precision.
 * There is no global default precision anywhere in the library: every
 * construction states its precision, so concurrent use needs no locking
 * and results are reproducible.  Operators round to nearest at the wider
 * of the two operand precisions; directed-rounding variants used by the
 * interval layer are free functions taking an explicit rounding mode. */
class Real {
 public:
  Real() { mpfr_init2(v_, 64); mpfr_set_zero(v_, 1); }
  explicit Real(Prec prec) {
    mpfr_init2(v_, std::max<Prec>(prec, MPFR_PREC_MIN));
    mpfr_set_zero(v_, 1);
  }
  Real(const Real& o) {
    mpfr_init2(v_, o.prec());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, o.prec());
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }
  Prec prec() const { return mpfr_get_prec(v_); }

  static Real of(double d, Prec p) {
    Real r(p);
    mpfr_set_d(r.v_, d, MPFR_RNDN);
    return r;
  }
  static Real of(long n, Prec p) {
    Real r(p);
    mpfr_set_si(r.v_, n, MPFR_RNDN);
    return r;
  }
  static Real of(const BigInt& z, Prec p, mpfr_rnd_t rnd = MPFR_RNDN) {
    Real r(p);
    mpfr_set_z(r.v_, z.backend().data(), rnd);
    return r;
  }
  static Real of(const BigRat& q, Prec p, mpfr_rnd_t rnd = MPFR_RNDN) {
    Real r(p);
    mpfr_set_q(r.v_, q.backend().data(), rnd);
    return r;
  }
  static Real pos_inf(Prec p = 64) {
    Real r(p);
    mpfr_set_inf(r.v_, 1);
    return r;
  }
  static Real neg_inf(Prec p = 64) {
    Real r(p);
    mpfr_set_inf(r.v_, -1);
    return r;
  }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_inf() const { return mpfr_inf_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sgn() const { return mpfr_sgn(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  /* Exact value as a rational (every finite mpfr value is dyadic). */
  BigRat to_rational() const {
    if (!is_finite()) throw DomainError("to_rational of non-finite value");
    if (is_zero()) return BigRat(0);
    BigInt m;
    mpfr_exp_t e = mpfr_get_z_2exp(m.backend().data(), v_);
    BigRat q(m);
    BigInt p2 = int_pow(BigInt(2), static_cast<unsigned long>(e >= 0 ? e : -e));
    if (e >= 0)
      q *= BigRat(p2);
    else
      q /= BigRat(p2);
    return q;
  }

  std::string str(int digits = 20) const;

  friend int cmp(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_); }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_); }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_); }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_); }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_); }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_); }
  friend bool operator!=(const Real& a, const Real& b) { return !mpfr_equal_p(a.v_, b.v_); }

 private:
  mpfr_t v_;
};

inline Prec join_prec(const Real& a, const Real& b) { return std::max(a.prec(), b.prec()); }

/* Directed-rounding primitives for the interval layer. */
inline Real r_add(const Real& a, const Real& b, mpfr_rnd_t rnd) {
  Real r(join_prec(a, b));
  mpfr_add(r.raw(), a.raw(), b.raw(), rnd);
  return r;
}
inline Real r_sub(const Real& a, const Real& b, mpfr_rnd_t rnd) {
  Real r(join_prec(a, b));
  mpfr_sub(r.raw(), a.raw(), b.raw(), rnd);
  return r;
}
inline Real r_mul(const Real& a, const Real& b, mpfr_rnd_t rnd) {
  Real r(join_prec(a, b));
  mpfr_mul(r.raw(), a.raw(), b.raw(), rnd);
  return r;
}
inline Real r_div(const Real& a, const Real& b, mpfr_rnd_t rnd) {
  Real r(join_prec(a, b));
  mpfr_div(r.raw(), a.raw(), b.raw(), rnd);
  return r;
}
inline Real r_sqrt(const Real& a, mpfr_rnd_t rnd) {
  Real r(a.prec());
  mpfr_sqrt(r.raw(), a.raw(), rnd);
  return r;
}
inline Real r_neg(const Real& a) {
  Real r(a.prec());
  mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);  // exact
  return r;
}
inline Real r_abs(const Real& a) {
  Real r(a.prec());
  mpfr_abs(r.raw(), a.raw(), MPFR_RNDN);  // exact
  return r;
}
inline Real r_log(const Real& a, mpfr_rnd_t rnd) {
  Real r(a.prec());
  mpfr_log(r.raw(), a.raw(), rnd);
  return r;
}
inline Real r_pow_ui(const Real& a, unsigned long e, mpfr_rnd_t rnd) {
  Real r(a.prec());
  mpfr_pow_ui(r.raw(), a.raw(), e, rnd);
  return r;
}
inline Real r_min(const Real& a, const Real& b) { return a <= b ? a : b; }
inline Real r_max(const Real& a, const Real& b) { return a >= b ? a : b; }

/* Round-to-nearest operators at joined precision (used by the plain
 * complex arithmetic of the root finder; rigour there comes from the
 * a-posteriori residual bounds, not from these). */
inline Real operator+(const Real& a, const Real& b) { return r_add(a, b, MPFR_RNDN); }
inline Real operator-(const Real& a, const Real& b) { return r_sub(a, b, MPFR_RNDN); }
inline Real operator*(const Real& a, const Real& b) { return r_mul(a, b, MPFR_RNDN); }
inline Real operator/(const Real& a, const Real& b) { return r_div(a, b, MPFR_RNDN); }
inline Real operator-(const Real& a) { return r_neg(a); }

/* sqrt of a nonnegative rational: exact when it is a square, otherwise a
 * dyadic upper bound (safe direction for a pairing threshold). */
BigRat rat_sqrt_upper(const BigRat& q);

}  // namespace mg

#endif
