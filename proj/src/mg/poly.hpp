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

#ifndef MG_POLY_HPP
#define MG_POLY_HPP

#include <optional>
#include <string>
#include <vector>

#include "cplx.hpp"
#include "interval.hpp"
#include "ints.hpp"

namespace mg {

/* Univariate polynomial with arbitrary-precision integer coefficients,
 * stored in ascending degree order and normalized so that the leading
 * coefficient is nonzero.  degree() of the zero polynomial is -1. */
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> ascending) : c_(std::move(ascending)) { trim(); }
  IntPoly(std::initializer_list<long> ascending) {
    for (long v : ascending) c_.emplace_back(v);
    trim();
  }

  static IntPoly zero() { return IntPoly(); }
  static IntPoly constant(BigInt v) { return IntPoly(std::vector<BigInt>{std::move(v)}); }
  static IntPoly monomial(const BigInt& coeff, int deg) {
    std::vector<BigInt> c(static_cast<size_t>(deg) + 1, BigInt(0));
    c.back() = coeff;
    return IntPoly(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  const BigInt& leading() const { return c_.back(); }
  const std::vector<BigInt>& coeffs() const { return c_; }

  /* Coefficient of x^i, zero outside the stored range. */
  BigInt coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return BigInt(0);
    return c_[static_cast<size_t>(i)];
  }

  bool operator==(const IntPoly& o) const { return c_ == o.c_; }
  bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly operator-() const;
  IntPoly scaled(const BigInt& k) const;

  IntPoly derivative() const;

  /* Sum of absolute coefficient values. Domain error on the zero polynomial. */
  BigInt l1_norm() const;

  BigInt content() const;         // >= 0; 0 only for the zero polynomial
  IntPoly primitive_part() const; // f / content, sign preserved
  bool is_primitive() const { return content() == 1; }

  BigInt eval(const BigInt& x) const;
  BigRat eval(const BigRat& x) const;
  Interval eval(const Interval& x, Prec p) const;
  CInterval eval(const CInterval& x, Prec p) const;
  Cplx eval(const Cplx& x) const;

  /* x^d * f(1/x): exact coefficient reversal. */
  IntPoly reversed() const;
  /* f(-x) */
  IntPoly at_neg_x() const;

  std::string to_text() const;
  std::string to_json_array() const;

  /* Accepts the repo-wide text format ("x^3+2x^2+2") and the JSON ascending
   * coefficient array ("[2,0,2,1]", entries integers or decimal strings). */
  static IntPoly parse(const std::string& text);

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<BigInt> c_;
};

/* Polynomial with exact rational coefficients; intermediate form for
 * characteristic polynomials and order arithmetic. */
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<BigRat> ascending) : c_(std::move(ascending)) { trim(); }
  explicit RatPoly(const IntPoly& p) {
    for (const BigInt& z : p.coeffs()) c_.emplace_back(z);
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<BigRat>& coeffs() const { return c_; }
  BigRat coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return BigRat(0);
    return c_[static_cast<size_t>(i)];
  }

  RatPoly operator+(const RatPoly& o) const;
  RatPoly operator-(const RatPoly& o) const;
  RatPoly operator*(const RatPoly& o) const;
  RatPoly scaled(const BigRat& k) const;

  BigRat eval(const BigRat& x) const;

  /* Remainder modulo a monic integer polynomial. */
  RatPoly mod_monic(const IntPoly& f) const;

  /* True iff every coefficient is an integer. */
  bool is_integral() const;
  IntPoly to_int_poly() const;  // domain error unless integral

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<BigRat> c_;
};

/* GCD of integer polynomials via the primitive polynomial remainder
 * sequence; result is primitive with positive leading coefficient. */
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

/* f / gcd(f, f'); primitive. */
IntPoly squarefree_part(const IntPoly& f);

/* Yun decomposition: returns s_1, s_2, ... with f ~ content * prod s_i^i,
 * each s_i squarefree and pairwise coprime (s_i may be constant 1). */
std::vector<IntPoly> squarefree_decomposition(const IntPoly& f);

/* Exact division; nullopt when g does not divide f over the rationals or
 * the quotient is not integral. */
std::optional<IntPoly> try_divide(const IntPoly& f, const IntPoly& g);

/* Number of distinct real roots (Sturm chain on the squarefree part). */
int count_real_roots(const IntPoly& f);

}  // namespace mg

#endif
