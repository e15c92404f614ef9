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

#include <algorithm>
#include <cmath>
#include <set>

#include "mg/discriminant.hpp"
#include "mg/roots.hpp"
#include "oracles.hpp"

using namespace mg;

namespace {

double modulus_mid(const RootSet& rs, int i) {
  return rs.modulus_interval(i, 128).mid().to_double();
}

std::vector<double> sorted_moduli(const RootSet& rs) {
  std::vector<double> out;
  for (int i = 0; i < rs.degree(); ++i) out.push_back(modulus_mid(rs, i));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> as_doubles(const IntPoly& f) {
  std::vector<double> c;
  for (const BigInt& v : f.coeffs()) c.push_back(static_cast<double>(v));
  return c;
}

}  // namespace

TEST_CASE("golden ratio to full double accuracy") {
  RootSet rs = find_roots(IntPoly::parse("x^2-x-1"));
  REQUIRE(rs.certified());
  REQUIRE(rs.degree() == 2);
  double big = 0;
  for (int i = 0; i < 2; ++i) {
    CHECK(rs.entry(i).real);
    big = std::max(big, rs.entry(i).value.re.to_double());
  }
  CHECK(std::abs(big - 1.6180339887498949) < 1e-12);
  auto [lo, hi] = rs.modulus_sq_range(0);
  CHECK(lo <= hi);
}

TEST_CASE("conjugate pair with exact unit modulus") {
  RootSet rs = find_roots(IntPoly::parse("x^2+1"));
  REQUIRE(rs.certified());
  REQUIRE(rs.degree() == 2);
  for (int i = 0; i < 2; ++i) {
    const CertifiedRoot& e = rs.entry(i);
    CHECK(!e.real);
    REQUIRE(e.modulus_sq.has_value());
    CHECK(*e.modulus_sq == 1);
    CHECK(e.conj == 1 - i);
  }
}

TEST_CASE("rational roots snap to exact values") {
  // (2x-3)(x+5)
  RootSet rs = find_roots(IntPoly::parse("2x^2+7x-15"));
  REQUIRE(rs.certified());
  std::set<BigRat> got;
  for (int i = 0; i < rs.degree(); ++i) {
    const CertifiedRoot& e = rs.entry(i);
    REQUIRE(e.rational.has_value());
    CHECK(e.real);
    REQUIRE(e.modulus_sq.has_value());
    CHECK(*e.modulus_sq == *e.rational * *e.rational);
    got.insert(*e.rational);
  }
  CHECK(got == std::set<BigRat>{BigRat(3, 2), BigRat(-5)});
}

TEST_CASE("repeated roots carry multiplicity and share a cluster") {
  IntPoly x1 = IntPoly::parse("x-1");
  IntPoly x2 = IntPoly::parse("x+2");
  RootSet rs = find_roots(x1 * x1 * x1 * x2 * x2);
  REQUIRE(rs.certified());
  REQUIRE(rs.degree() == 5);  // entries expand per multiplicity
  int ones = 0, twos = 0;
  std::set<int> cluster1, cluster2;
  for (int i = 0; i < 5; ++i) {
    const CertifiedRoot& e = rs.entry(i);
    REQUIRE(e.rational.has_value());
    if (*e.rational == 1) {
      ++ones;
      CHECK(e.multiplicity == 3);
      cluster1.insert(e.cluster);
    } else {
      CHECK(*e.rational == -2);
      ++twos;
      CHECK(e.multiplicity == 2);
      cluster2.insert(e.cluster);
    }
  }
  CHECK(ones == 3);
  CHECK(twos == 2);
  CHECK(cluster1.size() == 1);
  CHECK(cluster2.size() == 1);
  CHECK(*cluster1.begin() != *cluster2.begin());
}

TEST_CASE("distinct integer roots stay separated") {
  IntPoly f = IntPoly::parse("x-1");
  for (int k = 2; k <= 6; ++k)
    f = f * (IntPoly::monomial(BigInt(1), 1) - IntPoly::constant(BigInt(k)));
  RootSet rs = find_roots(f);
  REQUIRE(rs.certified());
  std::set<BigRat> got;
  std::set<int> clusters;
  for (int i = 0; i < rs.degree(); ++i) {
    REQUIRE(rs.entry(i).rational.has_value());
    got.insert(*rs.entry(i).rational);
    clusters.insert(rs.entry(i).cluster);
  }
  CHECK(got.size() == 6);
  CHECK(clusters.size() == 6);
  CHECK(got.count(BigRat(1)) == 1);
  CHECK(got.count(BigRat(6)) == 1);
}

TEST_CASE("moduli agree with an independent double-precision finder") {
  for (const char* t : {"x^5-x-1", "x^4+3x^3-2x+7", "3x^3-5x^2+x-11"}) {
    IntPoly f = IntPoly::parse(t);
    RootSet rs = find_roots(f);
    REQUIRE(rs.certified());
    std::vector<double> mine = sorted_moduli(rs);
    std::vector<double> ref;
    for (const auto& z : oracle::dk_roots(as_doubles(f))) ref.push_back(std::abs(z));
    std::sort(ref.begin(), ref.end());
    REQUIRE(mine.size() == ref.size());
    for (size_t i = 0; i < mine.size(); ++i)
      CHECK(std::abs(mine[i] - ref[i]) < 1e-8);
  }
}

TEST_CASE("unit-circle factors are marked inside larger products") {
  // x^2+1 divides; its roots get exact |z|^2 = 1, the x^2+3 pair does not
  RootSet rs = find_roots(IntPoly::parse("x^2+1") * IntPoly::parse("x^2+3"));
  REQUIRE(rs.certified());
  REQUIRE(rs.degree() == 4);
  int unit = 0, unmarked = 0;
  for (int i = 0; i < 4; ++i) {
    const CertifiedRoot& e = rs.entry(i);
    if (e.modulus_sq.has_value()) {
      CHECK(*e.modulus_sq == 1);
      ++unit;
    } else {
      auto [lo, hi] = rs.modulus_sq_range(i);
      CHECK(lo > 1);
      CHECK(hi < 5);
      ++unmarked;
    }
  }
  CHECK(unit == 2);
  CHECK(unmarked == 2);
}

TEST_CASE("profile splits unit roots from a large mirror pair") {
  RootSet rs = find_roots(IntPoly::parse("x^2+1") * IntPoly::parse("x^2+3"));
  PairedProfile p = derive_profile(rs, BigRat(1));
  CHECK(p.r == 1);
  CHECK(!p.auto_r);
  CHECK(p.pairs.size() == 1);
  CHECK(p.small_indices.size() == 2);
  CHECK(p.m() == 2);
  // the paired indices are the sqrt(3)-modulus conjugates
  auto [a, b] = p.pairs[0];
  CHECK(rs.entry(a).conj == b);
}

TEST_CASE("profile pairs a complex conjugate pair above threshold") {
  RootSet rs = find_roots(IntPoly::parse("x^2+4") * IntPoly::parse("x-1"));
  PairedProfile p = derive_profile(rs, BigRat(1));
  CHECK(p.pairs.size() == 1);
  CHECK(p.small_indices.size() == 1);
  CHECK(rs.entry(p.small_indices[0]).rational.has_value());
}

TEST_CASE("automatic threshold stays at one for a conjugate pair") {
  RootSet rs = find_roots(IntPoly::parse("x^2+4"));
  PairedProfile p = derive_profile(rs, std::nullopt);
  CHECK(p.auto_r);
  CHECK(p.r == 1);
  CHECK(p.pairs.size() == 1);
  CHECK(p.small_indices.empty());
}

TEST_CASE("lone large real root cannot satisfy the pairing hypothesis") {
  RootSet rs = find_roots(IntPoly::parse("x^2-x-1"));
  CHECK_THROWS_AS(derive_profile(rs, BigRat(1)), HypothesisError);
}

TEST_CASE("threshold below one is rejected") {
  RootSet rs = find_roots(IntPoly::parse("x^2+4"));
  CHECK_THROWS_AS(derive_profile(rs, BigRat(1, 2)), DomainError);
}

TEST_CASE("discriminant magnitude from disks brackets the exact value") {
  for (const char* t : {"x^3-x-1", "x^2-x-1", "x^4+x^3+x^2+x+1"}) {
    IntPoly f = IntPoly::parse(t);
    RootSet rs = find_roots(f);
    REQUIRE(rs.certified());
    Interval mag = discriminant_magnitude_from_roots(rs, 192);
    BigInt want = abs(discriminant(f));
    double w = static_cast<double>(want);
    CHECK(mag.lo().to_double() <= w * (1 + 1e-9));
    CHECK(mag.hi().to_double() >= w * (1 - 1e-9));
  }
}
