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

#include <cmath>

#include "mg/discriminant.hpp"
#include "mg/energy.hpp"
#include "mg/rng.hpp"
#include "mg/roots.hpp"
#include "oracles.hpp"

using namespace mg;

namespace {

PointConfiguration exact_cfg(int k, std::vector<std::vector<BigRat>> pts) {
  return PointConfiguration::of_rational(k, std::move(pts), 128);
}

std::vector<BigRat> v3(long a, long b, long c) {
  return {BigRat(a), BigRat(b), BigRat(c)};
}

}  // namespace

TEST_CASE("antipodal unit pair meets the bound with equality") {
  PointConfiguration cfg = exact_cfg(3, {v3(1, 0, 0), v3(-1, 0, 0)});
  ConfigCheck c = check_paired_config(cfg, BigRat(1));
  CHECK(c.report.holds == Verdict::Holds);
  CHECK(c.report.is_equality());
  CHECK(!c.trivial_zero);
  CHECK(c.trace.all_ok());
  // both points sit at the threshold, so neither is "large"
  CHECK(c.pairing.pairs.empty());
  CHECK(c.pairing.small_indices.size() == 2);
}

TEST_CASE("antipodal large pair meets the bound with equality") {
  PointConfiguration cfg =
      exact_cfg(2, {{BigRat(2), BigRat(0)}, {BigRat(-2), BigRat(0)}});
  ConfigCheck c = check_paired_config(cfg, BigRat(1));
  CHECK(c.report.holds == Verdict::Holds);
  CHECK(c.report.is_equality());
  REQUIRE(c.report.lhs.is_exact());
  CHECK(*c.report.lhs.exact == 4);
  CHECK(c.pairing.pairs.size() == 1);
  CHECK(c.trace.all_ok());
}

TEST_CASE("every recorded proof step holds on a mixed configuration") {
  PointConfiguration cfg = exact_cfg(
      3, {v3(3, 0, 0), v3(-3, 0, 0), v3(0, 2, 2), v3(0, -2, -2),
          v3(0, 0, 1), {BigRat(1, 2), BigRat(0), BigRat(0)}});
  ConfigCheck c = check_paired_config(cfg, BigRat(1));
  CHECK(c.report.holds == Verdict::Holds);
  CHECK(c.trace.all_ok());
  CHECK(c.trace.C0_ok == Verdict::Holds);
  CHECK(c.trace.c_dm_ok == Verdict::Holds);
  CHECK(c.trace.tail_ok == Verdict::Holds);
  CHECK(c.trace.decomposition_ok == Verdict::Holds);
  REQUIRE(c.pairing.pairs.size() == 2);
  CHECK(c.pairing.small_indices.size() == 2);
  REQUIRE(c.trace.per_pair.size() == 2);
  int d = cfg.d();
  for (size_t i = 0; i < c.trace.per_pair.size(); ++i) {
    const PairBoundRecord& pr = c.trace.per_pair[i];
    CHECK(pr.sep_ok == Verdict::Holds);
    CHECK(pr.betas_ok == Verdict::Holds);
    CHECK(pr.beta_expected == d - 2 * static_cast<int>(i + 1));
    CHECK(pr.beta_count == pr.beta_expected);
  }
  CHECK(c.trace.S_sizes.size() == c.trace.per_pair.size());
}

TEST_CASE("sharpness family ratio approaches four") {
  BigRat R(1000);
  PointConfiguration cfg = sharpness_family(2, 3, BigRat(1), R);
  REQUIRE(cfg.d() == 3);
  CHECK(cfg.exact());
  ConfigCheck c = check_paired_config(cfg, BigRat(1));
  CHECK(c.report.holds == Verdict::Holds);
  CHECK(c.trace.all_ok());
  EnergyResult er = config_discriminant(cfg);
  Bound msq = config_measure_sq(cfg);
  REQUIRE(msq.is_exact());
  CHECK(*msq.exact == rat_pow(R, 4));  // M = R^2 exactly
  // ratio |disc| / M^3 = |disc| / R^6
  REQUIRE(er.disc.is_exact());
  BigRat ratio = *er.disc.exact / rat_pow(R, 6);
  BigRat gap = ratio - 4;
  if (gap < 0) gap = -gap;
  CHECK(gap < BigRat(1, 100000));
}

TEST_CASE("coincident points give a trivially satisfied bound") {
  PointConfiguration cfg = exact_cfg(3, {v3(1, 0, 0), v3(1, 0, 0)});
  ConfigCheck c = check_paired_config(cfg, BigRat(1));
  CHECK(c.trivial_zero);
  CHECK(c.report.holds == Verdict::Holds);
  REQUIRE(c.report.rhs.is_exact());
  CHECK(*c.report.rhs.exact == 0);
  EnergyResult er = config_discriminant(cfg);
  CHECK(er.zero);
  CHECK(!er.e_log.has_value());
}

TEST_CASE("unpairable large point violates the hypothesis") {
  PointConfiguration cfg = exact_cfg(3, {v3(2, 0, 0), v3(0, 0, 1)});
  CHECK_THROWS_AS(check_paired_config(cfg, BigRat(1)), HypothesisError);
  CHECK_THROWS_AS(check_paired_config(cfg, BigRat(1, 2)), HypothesisError);
}

TEST_CASE("pairing threshold auto mode on an all-small configuration") {
  PointConfiguration cfg = exact_cfg(3, {v3(1, 0, 0), v3(0, 1, 0)});
  ConfigPairing p = derive_config_pairing(cfg, std::nullopt);
  CHECK(p.auto_r);
  CHECK(p.r == 1);
  CHECK(p.pairs.empty());
  CHECK(p.small_indices.size() == 2);
  CHECK_THROWS_AS(derive_config_pairing(cfg, BigRat(1, 2)), DomainError);
}

TEST_CASE("configuration JSON round-trip keeps values exact") {
  PointConfiguration cfg =
      PointConfiguration::parse(R"({"k":2,"points":[[1,0],["3/2",-2]]})");
  CHECK(cfg.k == 2);
  CHECK(cfg.d() == 2);
  CHECK(cfg.exact());
  REQUIRE(cfg.norm_sq(1).is_exact());
  CHECK(*cfg.norm_sq(1).exact == BigRat(25, 4));
  PointConfiguration back = PointConfiguration::from_json(cfg.to_json(), 128);
  REQUIRE(back.norm_sq(1).is_exact());
  CHECK(*back.norm_sq(1).exact == BigRat(25, 4));
  CHECK(back.dist_sq(0, 1).is_exact());
}

TEST_CASE("configuration parse rejects malformed input") {
  CHECK_THROWS_AS(PointConfiguration::parse("{\"k\":2}"), ParseError);
  CHECK_THROWS_AS(PointConfiguration::parse(R"({"k":2,"points":[[1,0],[1]]})"),
                  ParseError);
  CHECK_THROWS_AS(PointConfiguration::parse(R"({"k":0,"points":[[],[]]})"),
                  ParseError);
  CHECK_THROWS_AS(PointConfiguration::parse("not json"), ParseError);
  CHECK_THROWS_AS(PointConfiguration::parse(R"({"k":1,"points":[[1]]})"),
                  ParseError);
}

TEST_CASE("roots of a cubic form a configuration with the same discriminant") {
  IntPoly f = IntPoly::parse("x^3-x-1");
  RootSet rs = find_roots(f);
  PointConfiguration cfg = config_from_roots(rs);
  CHECK(cfg.k == 2);
  CHECK(cfg.d() == 3);
  EnergyResult er = config_discriminant(cfg);
  CHECK(!er.zero);
  REQUIRE(er.e_log.has_value());
  double want = 23.0;  // |disc| of the minimal cubic
  CHECK(er.disc.iv.lo().to_double() <= want * (1 + 1e-9));
  CHECK(er.disc.iv.hi().to_double() >= want * (1 - 1e-9));
}

TEST_CASE("repeated root collapses the configuration discriminant") {
  IntPoly f = IntPoly::parse("x-1");
  RootSet rs = find_roots(f * f * IntPoly::parse("x+2"));
  PointConfiguration cfg = config_from_roots(rs);
  EnergyResult er = config_discriminant(cfg);
  CHECK(er.zero);
}

TEST_CASE("seeded random configurations all satisfy the bound") {
  Rng rng(7);
  for (int iter = 0; iter < 50; ++iter) {
    int npair = static_cast<int>(rng.uniform(1, 5));
    std::vector<std::vector<BigRat>> pts;
    for (int j = 0; j < npair; ++j) {
      long a = j + 1;  // distinct first coordinates keep the points distinct
      long b = rng.uniform(-3, 3);
      long c = rng.uniform(-3, 3);
      pts.push_back(v3(a, b, c));
      pts.push_back(v3(-a, -b, -c));
    }
    if (rng.flip()) pts.push_back(v3(0, 0, 0));
    if (rng.flip()) pts.push_back({BigRat(1, 2), BigRat(1, 2), BigRat(0)});
    PointConfiguration cfg = exact_cfg(3, std::move(pts));
    ConfigCheck c = check_paired_config(cfg, BigRat(1));
    CHECK(c.report.holds == Verdict::Holds);
    CHECK(c.trace.all_ok());
  }
}
