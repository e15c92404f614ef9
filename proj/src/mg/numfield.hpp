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

#ifndef MG_NUMFIELD_HPP
#define MG_NUMFIELD_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "../../vendor/nlohmann/json.hpp"
#include "linalg.hpp"
#include "measure.hpp"
#include "poly.hpp"
#include "report.hpp"
#include "roots.hpp"

namespace mg {

/* Exact integer coordinates with respect to the order's basis. */
struct OrderElement {
  std::vector<BigInt> coords;

  bool operator==(const OrderElement& o) const { return coords == o.coords; }
  bool is_zero() const;
};

/* An order in a number field: a monic irreducible defining polynomial
 * together with a basis given over the power basis (identity by
 * default, i.e. Z[theta]).  Element arithmetic runs over an integer
 * multiplication table validated at construction; the basis must be
 * multiplicatively closed and contain 1. */
class FieldOrder {
 public:
  /* Validates everything: monic irreducible defining polynomial of
   * degree >= 2, invertible basis with integral structure constants,
   * integer order discriminant disc(f) * det(basis)^2, and, when the
   * field discriminant is supplied, that disc_order / field_disc is a
   * positive perfect square (the index squared). */
  static FieldOrder build(const IntPoly& defining_poly,
                          const std::optional<RatMatrix>& basis = std::nullopt,
                          const std::optional<BigInt>& field_disc = std::nullopt);

  const IntPoly& poly() const { return poly_; }
  int degree() const { return poly_.degree(); }
  int reals() const { return r_; }  // real embeddings
  int pairs() const { return s_; }  // conjugate pairs, degree = reals + 2*pairs
  const BigInt& disc() const { return disc_order_; }
  const std::optional<BigInt>& field_disc() const { return field_disc_; }
  const RatMatrix& basis() const { return basis_; }  // rows over the power basis
  bool power_basis() const { return power_basis_; }

  OrderElement zero() const;
  OrderElement one() const { return one_; }
  OrderElement unit(int i) const;  // i-th basis element
  OrderElement from_ints(const std::vector<long>& v) const;

  OrderElement add(const OrderElement& a, const OrderElement& b) const;
  OrderElement sub(const OrderElement& a, const OrderElement& b) const;
  OrderElement neg(const OrderElement& a) const;
  OrderElement mul(const OrderElement& a, const OrderElement& b) const;
  OrderElement mul_int(const OrderElement& a, const BigInt& k) const;

  /* The element as a rational polynomial in the power basis. */
  RatPoly to_power_poly(const OrderElement& a) const;
  /* Inverse of the above; nullopt when the coordinates are not integral. */
  std::optional<OrderElement> from_power_poly(const RatPoly& g) const;

  /* Root indices in embedding order: real roots ascending, then one
   * representative per conjugate pair with positive imaginary part,
   * sorted by (Re, Im).  rs must come from the defining polynomial. */
  std::vector<int> embedding_order(const RootSet& rs) const;

 private:
  FieldOrder() = default;

  IntPoly poly_;
  RatMatrix basis_;
  RatMatrix basis_inv_;
  bool power_basis_ = true;
  int r_ = 0, s_ = 0;
  BigInt disc_order_;
  std::optional<BigInt> field_disc_;
  OrderElement one_;
  /* table_[i][j] = coordinates of basis_i * basis_j. */
  std::vector<std::vector<std::vector<BigInt>>> table_;
};

/* The order's image in R^r x C^s flattened to R^d via z -> (Re z, Im z).
 * Columns are the embedded basis elements.  With this identification
 * covolume = 2^{-s} sqrt(|disc_order|); covol_sq_scaled keeps the exact
 * witness covolume^2 * 4^s = |disc_order|. */
struct MinkowskiLattice {
  std::vector<std::vector<Interval>> columns;  // columns[j][i], d x d
  Interval covolume;
  BigRat covol_sq_scaled;
  Prec precision = 0;
};

MinkowskiLattice minkowski_lattice(const FieldOrder& k, Prec prec = 192);

/* Embedding coordinates of one element, in embedding order. */
std::vector<Interval> minkowski_embed(const FieldOrder& k, const OrderElement& a,
                                      Prec prec = 192);

/* An open axis-aligned box with every side of length c.  Coordinates
 * follow the embedding order. */
struct SearchBox {
  BigRat c;
  BigRat T;
  std::vector<std::pair<BigRat, BigRat>> bounds;  // open (lo, hi) per coordinate
};

/* The staggered box whose points are pairwise separated by more than c
 * in every embedding coordinate, with the large coordinate placed on
 * the last conjugate pair.  Needs a complex embedding; hypothesis error
 * otherwise, pointing at the real-embedding variant. */
SearchBox build_box(const FieldOrder& k, const BigRat& c, const BigRat& T);

/* Variant with the large coordinate on the last real embedding. */
SearchBox build_box_real(const FieldOrder& k, const BigRat& c, const BigRat& T);

/* All lattice points strictly inside the open box, in lexicographic
 * coordinate order.  Integer coordinate ranges come from the inverse
 * of the embedded basis applied to the box; membership of each
 * candidate is then decided exactly (quadratic fields) or by interval
 * evaluation with escalating precision. */
std::vector<OrderElement> enumerate_box(const FieldOrder& k,
                                        const MinkowskiLattice& lat,
                                        const SearchBox& box, Prec cap = 4096);

/* One verified generator found in a box search. */
struct GeneratorRecord {
  std::string field;            // defining polynomial text
  BigRat T_requested;
  BigRat T;                     // after any adjustment
  BigRat c;
  std::vector<BigInt> alpha_coords;
  IntPoly minpoly;
  Bound M;
  BigInt disc_f;                // signed
  Bound ratio;                  // M^e / |disc_f|, e = 2d-3 (complex) or 2d-2 (real)
  BigRat c_K;
  std::optional<BigInt> index;  // sqrt(disc_f / field_disc) when known
  bool generates = false;
  bool separation_ok = false;   // all pairwise embedding gaps > c
  bool roots_bounded_ok = false;  // all roots but the top pair (or top root) <= 2dc
  bool ratio_ok = false;        // ratio <= c_K
  bool measure_shape_ok = false;  // M under the box-derived product bound
  std::string notice;

  nlohmann::ordered_json to_json() const;
};

struct GeneratorSearch {
  BigRat c;
  std::vector<GeneratorRecord> records;
  std::vector<std::string> notices;
};

/* For each T one generator from the box at that T, all sharing a single
 * side length c: fixed when given, otherwise doubled up from
 * covolume^(1/d) until every box is nonempty.  T values below the
 * proof threshold are raised with a notice.  Verifies separation,
 * generation, the measure bound shape, the ratio against
 * c_K = (2dc)^{d(2d-3)}, and the modulus bound on all roots except one
 * conjugate pair. */
GeneratorSearch find_generators(const FieldOrder& k,
                                const std::vector<BigRat>& T_list,
                                const std::optional<BigRat>& c_fixed = std::nullopt,
                                Prec cap = 4096);

/* Same search with the large coordinate on a real embedding; the
 * verified inequality is M^{2d-2} <= c_K |disc_f| with the recorded
 * constant c_K = (8dc)^{2d(d-1)}, and all roots but one lie under 2dc. */
GeneratorSearch find_generators_real_variant(
    const FieldOrder& k, const std::vector<BigRat>& T_list,
    const std::optional<BigRat>& c_fixed = std::nullopt, Prec cap = 4096);

struct MinPolyResult {
  IntPoly poly;    // monic; the minimal polynomial of the element
  int degree = 0;
  bool generates = false;  // degree equals the field degree
  BigInt disc_f;
  std::optional<BigInt> index;  // only when generates and field_disc known

  nlohmann::ordered_json to_json() const;
};

/* Minimal polynomial as the squarefree part of the characteristic
 * polynomial of multiplication by the element; degree < d flags a
 * proper subfield, not an error.  When the field discriminant is known
 * and the element generates, disc_f / field_disc must be a perfect
 * square and its root is returned as the index. */
MinPolyResult minimal_polynomial(const FieldOrder& k, const OrderElement& a);

struct MinMeasureResult {
  bool found = false;
  Bound M;                 // smallest measure over generators in the order
  IntPoly witness;
  std::vector<BigInt> alpha_coords;
  long candidates = 0;     // coefficient vectors examined
  std::string note;

  nlohmann::ordered_json to_json() const;
};

/* Exact minimum of M over generators of the order with M <= T_max, by
 * exhausting monic integer polynomials with |a_j| <= C(d,j) T_max
 * (every coefficient is an elementary symmetric function of roots whose
 * partial products are at most M).  Candidates must be irreducible of
 * the right signature, have certified M <= T_max, and possess a root in
 * the order, confirmed by exact evaluation.  An empty result certifies
 * that the minimum exceeds T_max. */
MinMeasureResult compute_M_OK(const FieldOrder& k, const BigInt& T_max,
                              Prec cap = 4096, long budget = 4000000);

/* Every measure/discriminant bound applicable to the field's signature,
 * evaluated at the given measure value (typically the minimum over
 * generators):
 *   field-mahler   M^{2d-2} d^d >= |disc_K|          (all fields)
 *   field-paired   M^{2d-3} 2^{d(d-1)} >= |disc_K|   (totally complex)
 *   field-imquad   M >= |disc_K| / 4                 (imaginary quadratic)
 *   field-upper    |disc_K| >= M                     (all fields)
 * Domain error when the field discriminant is unknown. */
std::vector<InequalityReport> check_field_bounds(const FieldOrder& k,
                                                 const Bound& M_value,
                                                 Prec prec = 128);

/* Field-spec JSON: {"poly": "x^2+1", "basis": [[...]]?, "disc": -4?,
 * "name": "..."?}.  Basis entries may be integers or rational strings.
 * Unknown keys are rejected. */
FieldOrder order_from_spec(const nlohmann::json& spec);
FieldOrder order_from_spec_file(const std::string& path);

}  // namespace mg

#endif
