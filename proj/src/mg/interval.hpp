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

#ifndef MG_INTERVAL_HPP
#define MG_INTERVAL_HPP

#include <optional>
#include <string>

#include "real.hpp"

namespace mg {

enum class Verdict { Holds, Fails, Undecided };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    default: return "undecided";
  }
}

/* Closed real interval [lo, hi] with outward (directed) rounding on every
 * operation, so the true value of an expression is always enclosed. */
class Interval {
 public:
  Interval() : lo_(), hi_() {}
  Interval(Real lo, Real hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (!(lo_ <= hi_) && !lo_.is_nan() && !hi_.is_nan())
      throw DomainError("interval endpoints out of order");
  }

  static Interval point(const Real& x) { return Interval(x, x); }
  static Interval exact(const BigInt& z, Prec p) {
    return Interval(Real::of(z, p, MPFR_RNDD), Real::of(z, p, MPFR_RNDU));
  }
  static Interval exact(const BigRat& q, Prec p) {
    return Interval(Real::of(q, p, MPFR_RNDD), Real::of(q, p, MPFR_RNDU));
  }
  static Interval of_long(long n, Prec p) { return exact(BigInt(n), p); }

  const Real& lo() const { return lo_; }
  const Real& hi() const { return hi_; }
  Prec prec() const { return join_prec(lo_, hi_); }

  bool contains_zero() const { return lo_.sgn() <= 0 && hi_.sgn() >= 0; }
  bool is_point() const { return lo_ == hi_; }
  bool is_finite() const { return lo_.is_finite() && hi_.is_finite(); }

  Real mid() const { return r_mul(lo_ + hi_, Real::of(0.5, 8), MPFR_RNDN); }
  Real width() const { return r_sub(hi_, lo_, MPFR_RNDU); }

  Interval operator+(const Interval& o) const {
    return Interval(r_add(lo_, o.lo_, MPFR_RNDD), r_add(hi_, o.hi_, MPFR_RNDU));
  }
  Interval operator-(const Interval& o) const {
    return Interval(r_sub(lo_, o.hi_, MPFR_RNDD), r_sub(hi_, o.lo_, MPFR_RNDU));
  }
  Interval operator-() const { return Interval(r_neg(hi_), r_neg(lo_)); }

  Interval operator*(const Interval& o) const {
    const Real* as[2] = {&lo_, &hi_};
    const Real* bs[2] = {&o.lo_, &o.hi_};
    Real lo = Real::pos_inf(prec());
    Real hi = Real::neg_inf(prec());
    for (auto* a : as)
      for (auto* b : bs) {
        lo = r_min(lo, r_mul(*a, *b, MPFR_RNDD));
        hi = r_max(hi, r_mul(*a, *b, MPFR_RNDU));
      }
    return Interval(lo, hi);
  }

  Interval operator/(const Interval& o) const {
    if (o.contains_zero()) throw DomainError("interval division by interval containing zero");
    const Real* as[2] = {&lo_, &hi_};
    const Real* bs[2] = {&o.lo_, &o.hi_};
    Real lo = Real::pos_inf(prec());
    Real hi = Real::neg_inf(prec());
    for (auto* a : as)
      for (auto* b : bs) {
        lo = r_min(lo, r_div(*a, *b, MPFR_RNDD));
        hi = r_max(hi, r_div(*a, *b, MPFR_RNDU));
      }
    return Interval(lo, hi);
  }

  /* Square root; lower endpoint clamped at 0 when the enclosure dips
   * negative by rounding. */
  Interval sqrt() const {
    if (hi_.sgn() < 0) throw DomainError("sqrt of negative interval");
    Real lo = lo_.sgn() <= 0 ? Real::of(0L, prec()) : r_sqrt(lo_, MPFR_RNDD);
    return Interval(lo, r_sqrt(hi_, MPFR_RNDU));
  }

  Interval square() const {
    Real alo = r_abs(lo_), ahi = r_abs(hi_);
    if (contains_zero()) {
      Real m = r_max(alo, ahi);
      return Interval(Real::of(0L, prec()), r_mul(m, m, MPFR_RNDU));
    }
    Real lo = r_min(alo, ahi), hi = r_max(alo, ahi);
    return Interval(r_mul(lo, lo, MPFR_RNDD), r_mul(hi, hi, MPFR_RNDU));
  }

  /* Integer power.  Negative exponents require an interval bounded away
   * from zero; even powers of sign-mixed intervals go through square(). */
  Interval pow(long e) const {
    if (e == 0) return exact(BigInt(1), prec());
    if (e < 0) return exact(BigInt(1), prec()) / pow(-e);
    if (e % 2 == 0 && contains_zero()) {
      Interval s = square();
      return s.pow_nonneg_base(e / 2);
    }
    if (lo_.sgn() >= 0) return pow_nonneg_base(e);
    if (hi_.sgn() <= 0) {
      Interval m = -*this;
      Interval p = m.pow_nonneg_base(e);
      return (e % 2 == 0) ? p : -p;
    }
    // odd power of a sign-mixed interval: monotone
    return Interval(r_pow_ui(lo_, static_cast<unsigned long>(e), MPFR_RNDD),
                    r_pow_ui(hi_, static_cast<unsigned long>(e), MPFR_RNDU));
  }

  Interval abs() const {
    if (lo_.sgn() >= 0) return *this;
    if (hi_.sgn() <= 0) return -*this;
    return Interval(Real::of(0L, prec()), r_max(r_abs(lo_), hi_));
  }

  Interval max_with(const Interval& o) const {
    return Interval(r_max(lo_, o.lo_), r_max(hi_, o.hi_));
  }
  Interval max_with_one() const { return max_with(of_long(1, prec())); }

  Interval hull(const Interval& o) const {
    return Interval(r_min(lo_, o.lo_), r_max(hi_, o.hi_));
  }

  /* Certified comparison of the represented true values. */
  Verdict certified_ge(const Interval& rhs) const {
    if (lo_ >= rhs.hi_) return Verdict::Holds;
    if (hi_ < rhs.lo_) return Verdict::Fails;
    return Verdict::Undecided;
  }
  Verdict certified_gt(const Interval& rhs) const {
    if (lo_ > rhs.hi_) return Verdict::Holds;
    if (hi_ <= rhs.lo_) return Verdict::Fails;
    return Verdict::Undecided;
  }
  Verdict certified_le(const Interval& rhs) const { return rhs.certified_ge(*this); }
  Verdict certified_lt(const Interval& rhs) const { return rhs.certified_gt(*this); }

  std::string str(int digits = 17) const {
    if (is_point()) return lo_.str(digits);
    return "[" + lo_.str(digits) + ", " + hi_.str(digits) + "]";
  }

 private:
  Interval pow_nonneg_base(long e) const {
    return Interval(r_pow_ui(lo_, static_cast<unsigned long>(e), MPFR_RNDD),
                    r_pow_ui(hi_, static_cast<unsigned long>(e), MPFR_RNDU));
  }

  Real lo_, hi_;
};

/* Complex rectangle: independent enclosures of real and imaginary parts. */
struct CInterval {
  Interval re, im;

  CInterval() = default;
  CInterval(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}

  static CInterval exact(const BigRat& r, const BigRat& i, Prec p) {
    return CInterval(Interval::exact(r, p), Interval::exact(i, p));
  }

  CInterval operator+(const CInterval& o) const { return {re + o.re, im + o.im}; }
  CInterval operator-(const CInterval& o) const { return {re - o.re, im - o.im}; }
  CInterval operator*(const CInterval& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  CInterval conj() const { return {re, -im}; }

  Interval norm() const { return re.square() + im.square(); }  // |z|^2
  Interval abs() const { return norm().sqrt(); }
};

}  // namespace mg

#endif
