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

#include "mg/numfield.hpp"
#include "oracles.hpp"

using namespace mg;

namespace {

FieldOrder gaussian() {
  return FieldOrder::build(IntPoly::parse("x^2+1"), std::nullopt, BigInt(-4));
}

}  // namespace

TEST_CASE("signatures and discriminants of pinned orders") {
  FieldOrder qi = gaussian();
  CHECK(qi.degree() == 2);
  CHECK(qi.reals() == 0);
  CHECK(qi.pairs() == 1);
  CHECK(qi.disc() == -4);
  CHECK(qi.power_basis());

  FieldOrder c23 = FieldOrder::build(IntPoly::parse("x^3-x-1"), std::nullopt,
                                     BigInt(-23));
  CHECK(c23.reals() == 1);
  CHECK(c23.pairs() == 1);
  CHECK(c23.disc() == -23);

  FieldOrder z5 = FieldOrder::build(IntPoly::parse("x^4+x^3+x^2+x+1"),
                                    std::nullopt, BigInt(125));
  CHECK(z5.reals() == 0);
  CHECK(z5.pairs() == 2);
  CHECK(z5.disc() == 125);

  FieldOrder s2 = FieldOrder::build(IntPoly::parse("x^2-2"), std::nullopt,
                                    BigInt(8));
  CHECK(s2.reals() == 2);
  CHECK(s2.pairs() == 0);
  CHECK(s2.disc() == 8);
}

TEST_CASE("order arithmetic in the Gaussian integers") {
  FieldOrder qi = gaussian();
  OrderElement a = qi.from_ints({1, 1});  // 1 + theta
  OrderElement sq = qi.mul(a, a);         // (1+i)^2 = 2i
  CHECK(sq.coords == std::vector<BigInt>{BigInt(0), BigInt(2)});
  OrderElement n = qi.mul(a, qi.from_ints({1, -1}));  // (1+i)(1-i) = 2
  CHECK(n.coords == std::vector<BigInt>{BigInt(2), BigInt(0)});
  CHECK(qi.add(a, qi.neg(a)).is_zero());
  RatPoly pp = qi.to_power_poly(sq);
  auto back = qi.from_power_poly(pp);
  REQUIRE(back.has_value());
  CHECK(*back == sq);
}

TEST_CASE("minimal polynomial, generation flag and index") {
  FieldOrder qi = gaussian();
  MinPolyResult mp = minimal_polynomial(qi, qi.unit(1));  // theta itself
  CHECK(mp.poly == IntPoly::parse("x^2+1"));
  CHECK(mp.generates);
  REQUIRE(mp.index.has_value());
  CHECK(*mp.index == 1);

  // theta^2 = -1 is rational: a proper subfield, flagged but not an error
  OrderElement th2 = qi.mul(qi.unit(1), qi.unit(1));
  MinPolyResult low = minimal_polynomial(qi, th2);
  CHECK(low.degree == 1);
  CHECK(!low.generates);

  // 1 + theta generates; disc(x^2-2x+2) = -4 matches the field discriminant
  MinPolyResult gen = minimal_polynomial(qi, qi.from_ints({1, 1}));
  CHECK(gen.poly == IntPoly::parse("x^2-2x+2"));
  CHECK(gen.generates);
  REQUIRE(gen.index.has_value());
  CHECK(*gen.index == 1);
}

TEST_CASE("non-maximal order carries the index in its discriminant") {
  RatMatrix basis{{BigRat(1), BigRat(0)}, {BigRat(0), BigRat(2)}};
  FieldOrder z2i = FieldOrder::build(IntPoly::parse("x^2+1"), basis, BigInt(-4));
  CHECK(z2i.disc() == -16);  // index 2, disc = index^2 * field disc
  CHECK(!z2i.power_basis());
  // second basis element is 2*theta with minimal polynomial x^2+4
  MinPolyResult mp = minimal_polynomial(z2i, z2i.unit(1));
  CHECK(mp.poly == IntPoly::parse("x^2+4"));
  CHECK(mp.generates);
  CHECK(mp.disc_f == -16);
  REQUIRE(mp.index.has_value());
  CHECK(*mp.index == 2);
}

TEST_CASE("Minkowski data for the Gaussian order") {
  FieldOrder qi = gaussian();
  MinkowskiLattice lat = minkowski_lattice(qi);
  REQUIRE(lat.columns.size() == 2);
  CHECK(lat.covol_sq_scaled == 4);  // covolume^2 * 4^s = |disc|
  CHECK(lat.covolume.lo().to_double() <= 1.0);
  CHECK(lat.covolume.hi().to_double() >= 1.0);

  FieldOrder s2 = FieldOrder::build(IntPoly::parse("x^2-2"), std::nullopt,
                                    BigInt(8));
  MinkowskiLattice lat2 = minkowski_lattice(s2);
  CHECK(lat2.covol_sq_scaled == 8);
  CHECK(lat2.covolume.lo().to_double() <= 2.8284271248);
  CHECK(lat2.covolume.hi().to_double() >= 2.8284271247);
}

TEST_CASE("the pinned square box holds exactly one generator") {
  FieldOrder qi = gaussian();
  SearchBox box = build_box(qi, BigRat(2), BigRat(10));
  REQUIRE(box.bounds.size() == 2);
  CHECK(box.bounds[0].first == 10);
  CHECK(box.bounds[0].second == 12);
  CHECK(box.bounds[1].first == 16);
  CHECK(box.bounds[1].second == 18);
  MinkowskiLattice lat = minkowski_lattice(qi);
  std::vector<OrderElement> pts = enumerate_box(qi, lat, box);
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].coords == std::vector<BigInt>{BigInt(11), BigInt(17)});

  MinPolyResult mp = minimal_polynomial(qi, pts[0]);
  CHECK(mp.poly == IntPoly::parse("x^2-22x+410"));
  CHECK(mp.disc_f == -1156);
  REQUIRE(mp.index.has_value());
  CHECK(*mp.index == 17);
}

TEST_CASE("generator search verifies the pinned record end to end") {
  FieldOrder qi = gaussian();
  GeneratorSearch gs = find_generators(qi, {BigRat(10)}, BigRat(2));
  CHECK(gs.c == 2);
  REQUIRE(gs.records.size() == 1);
  const GeneratorRecord& r = gs.records[0];
  CHECK(r.alpha_coords == std::vector<BigInt>{BigInt(11), BigInt(17)});
  CHECK(r.minpoly == IntPoly::parse("x^2-22x+410"));
  REQUIRE(r.M.is_exact());
  CHECK(*r.M.exact == 410);
  CHECK(r.disc_f == -1156);
  REQUIRE(r.ratio.is_exact());
  CHECK(*r.ratio.exact == BigRat(410, 1156));  // M^{2d-3} / |disc_f|
  CHECK(r.c_K == 64);                          // (2dc)^{d(2d-3)} = 8^2
  REQUIRE(r.index.has_value());
  CHECK(*r.index == 17);
  CHECK(r.generates);
  CHECK(r.separation_ok);
  CHECK(r.roots_bounded_ok);
  CHECK(r.ratio_ok);
  CHECK(r.measure_shape_ok);
}

TEST_CASE("generator search over several thresholds finds distinct witnesses") {
  FieldOrder c23 = FieldOrder::build(IntPoly::parse("x^3-x-1"), std::nullopt,
                                     BigInt(-23));
  GeneratorSearch gs = find_generators(c23, {BigRat(10), BigRat(40)});
  REQUIRE(gs.records.size() == 2);
  CHECK(gs.records[0].alpha_coords != gs.records[1].alpha_coords);
  for (const GeneratorRecord& r : gs.records) {
    CHECK(r.generates);
    CHECK(r.separation_ok);
    CHECK(r.roots_bounded_ok);
    CHECK(r.ratio_ok);
    CHECK(r.measure_shape_ok);
    REQUIRE(r.index.has_value());
    CHECK(*r.index >= 1);
  }
}

TEST_CASE("complex-embedding search refuses a totally real field") {
  FieldOrder s2 = FieldOrder::build(IntPoly::parse("x^2-2"), std::nullopt,
                                    BigInt(8));
  CHECK_THROWS_AS(build_box(s2, BigRat(2), BigRat(10)), HypothesisError);
  CHECK_THROWS_AS(find_generators(s2, {BigRat(10)}), HypothesisError);
  GeneratorSearch gs = find_generators_real_variant(s2, {BigRat(10), BigRat(20)});
  REQUIRE(gs.records.size() == 2);
  for (const GeneratorRecord& r : gs.records) {
    CHECK(r.generates);
    CHECK(r.separation_ok);
    CHECK(r.ratio_ok);
  }
}

TEST_CASE("minimum measures over imaginary quadratic integer rings") {
  struct Row {
    const char* poly;
    long B, C;  // oracle norm-form data for x^2 + Bx + C
    long disc;
  };
  const Row rows[] = {
      {"x^2-x+1", -1, 1, -3},  {"x^2+1", 0, 1, -4},   {"x^2-x+2", -1, 2, -7},
      {"x^2+2", 0, 2, -8},     {"x^2-x+3", -1, 3, -11}, {"x^2-x+4", -1, 4, -15},
      {"x^2-x+5", -1, 5, -19}, {"x^2+5", 0, 5, -20}};
  for (const Row& row : rows) {
    FieldOrder k = FieldOrder::build(IntPoly::parse(row.poly), std::nullopt,
                                     BigInt(row.disc));
    MinMeasureResult mm = compute_M_OK(k, BigInt(6));
    REQUIRE(mm.found);
    REQUIRE(mm.M.is_exact());
    CHECK(*mm.M.exact == BigRat(oracle::min_measure_imquad(row.B, row.C)));
    CHECK(mm.witness.degree() == 2);
    CHECK(mm.candidates > 0);
  }
}

TEST_CASE("minimum-measure search certifies absence below a cutoff") {
  FieldOrder k = FieldOrder::build(IntPoly::parse("x^2+5"), std::nullopt,
                                   BigInt(-20));
  MinMeasureResult mm = compute_M_OK(k, BigInt(4));
  CHECK(!mm.found);  // minimum is 5, above the cutoff
}

TEST_CASE("cyclotomic quartic attains measure one") {
  FieldOrder z5 = FieldOrder::build(IntPoly::parse("x^4+x^3+x^2+x+1"),
                                    std::nullopt, BigInt(125));
  MinMeasureResult mm = compute_M_OK(z5, BigInt(1));
  REQUIRE(mm.found);
  REQUIRE(mm.M.is_exact());
  CHECK(*mm.M.exact == 1);
  CHECK(mm.witness.degree() == 4);
}

TEST_CASE("field bounds at the minimum, equality where expected") {
  struct Row {
    const char* poly;
    long disc;
    long min_measure;
    bool tight;  // M = |disc|/4 exactly
  };
  const Row rows[] = {{"x^2+1", -4, 1, true},
                      {"x^2+2", -8, 2, true},
                      {"x^2+5", -20, 5, true},
                      {"x^2-x+2", -7, 2, false}};
  for (const Row& row : rows) {
    FieldOrder k = FieldOrder::build(IntPoly::parse(row.poly), std::nullopt,
                                     BigInt(row.disc));
    Bound m = Bound::of_integer(BigInt(row.min_measure), 128);
    auto reps = check_field_bounds(k, m);
    REQUIRE(reps.size() == 4);
    CHECK(reps[0].name == "field-mahler");
    CHECK(reps[1].name == "field-paired");
    CHECK(reps[2].name == "field-imquad");
    CHECK(reps[3].name == "field-upper");
    for (const auto& rep : reps) CHECK(rep.holds == Verdict::Holds);
    CHECK(reps[2].is_equality() == row.tight);
  }
}

TEST_CASE("field bounds need a known field discriminant") {
  FieldOrder k = FieldOrder::build(IntPoly::parse("x^2+1"));
  CHECK_THROWS_AS(check_field_bounds(k, Bound::of_integer(BigInt(1), 128)),
                  DomainError);
}

TEST_CASE("order construction rejects bad input") {
  // non-monic
  CHECK_THROWS_AS(FieldOrder::build(IntPoly::parse("2x^2+1")), DomainError);
  // reducible
  CHECK_THROWS_AS(FieldOrder::build(IntPoly::parse("x^2-1")), DomainError);
  // degree too small
  CHECK_THROWS_AS(FieldOrder::build(IntPoly::parse("x-1")), DomainError);
  // claimed field discriminant with a non-square quotient
  CHECK_THROWS_AS(
      FieldOrder::build(IntPoly::parse("x^2+1"), std::nullopt, BigInt(-8)),
      DomainError);
  // basis not multiplicatively closed: {1, theta/3} over x^2+1
  RatMatrix bad{{BigRat(1), BigRat(0)}, {BigRat(0), BigRat(1, 3)}};
  CHECK_THROWS_AS(FieldOrder::build(IntPoly::parse("x^2+1"), bad), DomainError);
}

TEST_CASE("field specs parse with strict keys") {
  nlohmann::json spec = {{"poly", "x^2+1"}, {"disc", -4}, {"name", "gaussian"}};
  FieldOrder k = order_from_spec(spec);
  CHECK(k.degree() == 2);
  REQUIRE(k.field_disc().has_value());
  CHECK(*k.field_disc() == -4);

  nlohmann::json extra = {{"poly", "x^2+1"}, {"bogus", 1}};
  CHECK_THROWS_AS(order_from_spec(extra), ParseError);
  nlohmann::json missing = {{"disc", -4}};
  CHECK_THROWS_AS(order_from_spec(missing), ParseError);
  CHECK_THROWS_AS(order_from_spec(nlohmann::json::array()), ParseError);
}
