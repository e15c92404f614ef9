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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mg/discriminant.hpp"
#include "mg/families.hpp"
#include "mg/irreducible.hpp"
#include "mg/poly.hpp"
#include "oracles.hpp"

using namespace mg;

TEST_CASE("parse and print round-trip") {
  for (const char* t : {"x^2+1", "x^3-2x+1", "3x^2-2", "x", "-x", "7", "-7",
                        "x^10-x", "2x^5-3x^4+x^3-x^2+x-11"}) {
    IntPoly f = IntPoly::parse(t);
    CHECK(f.to_text() == t);
    CHECK(IntPoly::parse(f.to_text()) == f);
  }
  // whitespace and explicit products are accepted on input
  CHECK(IntPoly::parse(" x^2 - x - 1 ") == IntPoly::parse("x^2-x-1"));
  CHECK(IntPoly::parse("2*x^3 + x") == IntPoly::parse("2x^3+x"));
}

TEST_CASE("parse rejects malformed input") {
  for (const char* t : {"", "x^^2", "y+1", "x^", "2^x", "x**2", "1..2"}) {
    CHECK_THROWS_AS(IntPoly::parse(t), ParseError);
  }
}

TEST_CASE("arithmetic basics") {
  IntPoly a = IntPoly::parse("x+1");
  IntPoly b = IntPoly::parse("x-1");
  CHECK(a * b == IntPoly::parse("x^2-1"));
  CHECK(a + b == IntPoly::parse("2x"));
  CHECK(a - b == IntPoly::constant(BigInt(2)));
  IntPoly f = IntPoly::parse("x^3-2x+1");
  CHECK(f.eval(BigInt(2)) == 5);
  CHECK(f.eval(BigRat(1, 2)) == BigRat(1, 8));
  CHECK(f.derivative() == IntPoly::parse("3x^2-2"));
  CHECK(f.l1_norm() == 4);
  CHECK(IntPoly::parse("6x^2+3x+9").primitive_part() == IntPoly::parse("2x^2+x+3"));
  CHECK(IntPoly::parse("-6x^2+3x+9").primitive_part() == IntPoly::parse("-2x^2+x+3"));
}

TEST_CASE("gcd, squarefree part, exact division") {
  IntPoly p = IntPoly::parse("x^2+1");
  IntPoly g = poly_gcd(p * IntPoly::parse("x-3"), p * IntPoly::parse("x+2"));
  CHECK(g == p);
  IntPoly sq = IntPoly::parse("x-1") * IntPoly::parse("x-1") * IntPoly::parse("x+2");
  CHECK(squarefree_part(sq) == IntPoly::parse("x-1") * IntPoly::parse("x+2"));
  CHECK(try_divide(sq, IntPoly::parse("x-1")).has_value());
  CHECK(!try_divide(sq, IntPoly::parse("x-5")).has_value());
}

TEST_CASE("real root counts") {
  CHECK(count_real_roots(IntPoly::parse("x^2+4")) == 0);
  CHECK(count_real_roots(IntPoly::parse("x^3-x")) == 3);
  CHECK(count_real_roots(IntPoly::parse("x^2+1") * IntPoly::parse("x-3") *
                         IntPoly::parse("x+5")) == 2);
  CHECK(count_real_roots(IntPoly::parse("x^5-1")) == 1);
}

TEST_CASE("discriminant matches the quadratic closed form") {
  for (long a = 1; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b)
      for (long c = -3; c <= 3; ++c) {
        IntPoly f(std::vector<BigInt>{BigInt(c), BigInt(b), BigInt(a)});
        CHECK(discriminant(f) == oracle::disc_quadratic(BigInt(a), BigInt(b), BigInt(c)));
      }
}

TEST_CASE("discriminant matches the cubic closed form") {
  for (long b = -2; b <= 2; ++b)
    for (long c = -2; c <= 2; ++c)
      for (long d = -2; d <= 2; ++d) {
        IntPoly f(std::vector<BigInt>{BigInt(d), BigInt(c), BigInt(b), BigInt(1)});
        if (f.degree() != 3) continue;
        CHECK(discriminant(f) ==
              oracle::disc_cubic(BigInt(1), BigInt(b), BigInt(c), BigInt(d)));
      }
}

TEST_CASE("resultant is multiplicative in the first argument") {
  IntPoly f = IntPoly::parse("x^2-2");
  IntPoly g = IntPoly::parse("x^3+x-1");
  IntPoly h = IntPoly::parse("2x^2+x+3");
  CHECK(resultant(f * g, h) == resultant(f, h) * resultant(g, h));
}

TEST_CASE("roots-of-unity discriminant magnitude") {
  for (int d = 2; d <= 20; ++d) {
    std::vector<BigInt> c(static_cast<size_t>(d) + 1, BigInt(0));
    c[0] = -1;
    c.back() = 1;
    CHECK(abs(discriminant(IntPoly(std::move(c)))) ==
          int_pow(BigInt(d), static_cast<unsigned long>(d)));
  }
}

TEST_CASE("degenerate discriminants vanish") {
  IntPoly dbl = IntPoly::parse("x-1") * IntPoly::parse("x-1");
  CHECK(discriminant(dbl) == 0);
  CHECK(discriminant(dbl * IntPoly::parse("x+4")) == 0);
}

TEST_CASE("irreducibility decisions") {
  CHECK(is_irreducible(IntPoly::parse("x^2+1")));
  CHECK(is_irreducible(IntPoly::parse("x^3-x-1")));
  CHECK(is_irreducible(IntPoly::parse("x^4+x^3+x^2+x+1")));
  CHECK(is_irreducible(eisenstein_family(BigInt(3), 5).poly));
  CHECK(!is_irreducible(IntPoly::parse("x^2-1")));
  CHECK(!is_irreducible(IntPoly::parse("x^4+4")));  // (x^2+2x+2)(x^2-2x+2)
  CHECK(!is_irreducible(IntPoly::parse("x^2+1") * IntPoly::parse("x^2+3")));
}

TEST_CASE("family predictions agree with the exact resultant") {
  for (long p : {2L, 3L, 7L})
    for (int d : {2, 4, 6}) {
      FamilyMember fm = binomial_family(BigInt(p), d);
      CHECK(abs(discriminant(fm.poly)) == fm.predicted_abs_disc);
    }
  for (long p : {2L, 5L})
    for (int d : {3, 8}) {
      FamilyMember fm = eisenstein_family(BigInt(p), d);
      CHECK(abs(discriminant(fm.poly)) == fm.predicted_abs_disc);
      CHECK(is_irreducible(fm.poly));
    }
}

TEST_CASE("zero polynomial has no coefficient norm") {
  CHECK_THROWS_AS(IntPoly::zero().l1_norm(), DomainError);
}
