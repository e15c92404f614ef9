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
#ifndef MG_ENERGY_HPP
#define MG_ENERGY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "mg/report.hpp"

namespace mg {

/* d points in R^k.  Coordinates are Bounds: exact rationals for
 * identity-grade inputs, plain enclosures for rotated or floating data.
 * The same checkers serve both; verdicts stay exact whenever the input
 * was. */
struct PointConfiguration {
  int k = 0;
  std::vector<std::vector<Bound>> pts;

  int d() const { return (int)pts.size(); }
  bool exact() const;
  Bound norm_sq(int i) const;
  Bound dist_sq(int i, int j) const;

  static PointConfiguration of_rational(int k,
                                        std::vector<std::vector<BigRat>> pts,
                                        Prec p);
  static PointConfiguration of_intervals(int k,
                                         std::vector<std::vector<Interval>> pts);
  /* {"k": int, "points": [[...], ...]}; entries may be integers, decimals,
   * or rational strings like "3/2"; all are read exactly. */
  static PointConfiguration from_json(const nlohmann::json& j, Prec p);
  static PointConfiguration parse(const std::string& text, Prec p = 128);
  nlohmann::ordered_json to_json() const;
};

/* prod max(1, |p_i|^2): exact for exact configurations. */
Bound config_measure_sq(const PointConfiguration& cfg);

/* prod max(1, |p_i|): exact only when the squared value is a perfect
 * square. */
Bound config_measure(const PointConfiguration& cfg);

struct EnergyResult {
  Bound disc;                    // prod over pairs of |p_i - p_j|^2
  bool zero = false;             // exactly zero: coincident points
  std::optional<Interval> e_log; // -log(disc); absent when zero (+infinity)
};
EnergyResult config_discriminant(const PointConfiguration& cfg);

/* Pairing of the points of norm above a threshold, mirroring the root
 * profile: auto mode picks the smallest admissible r >= 1. */
struct ConfigPairing {
  BigRat r;
  bool auto_r = false;
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> small_indices;
  int m() const { return 2 * (int)pairs.size(); }
};
ConfigPairing derive_config_pairing(const PointConfiguration& cfg,
                                    std::optional<BigRat> r);

/* One paired point (v, v') of the relabeled order, with the bounds the
 * proof of the main inequality uses at that step. */
struct PairBoundRecord {
  int i = -1, j = -1; // original indices, |v_i| listed first
  Bound sep_sq;       // |v - v'|^2
  Bound cap_sq;       // 4|v|^2
  Verdict sep_ok = Verdict::Undecided;
  int beta_count = 0;    // |S_i| actually collected
  int beta_expected = 0; // d - 2i
  Verdict betas_ok = Verdict::Undecided; // every |v-b|^2, |v'-b|^2 <= cap_sq
};

/* Every intermediate of the bound chain, each against its recorded
 * bound. */
struct ProofTrace {
  Bound C0;       // product over small-point pairs of |p_i - p_j|^2
  Bound C0_bound; // (2r)^{(d-m)(d-m-1)}
  Verdict C0_ok = Verdict::Holds;
  std::vector<PairBoundRecord> per_pair;
  std::vector<int> S_sizes;
  Bound c_dm;       // C0 * 2^{m(2d-m-1)}
  Bound c_dm_bound; // (2r)^{d(d-1)}
  Verdict c_dm_ok = Verdict::Holds;
  Bound tail_product; // prod |v_i|^{8i-8}; the proof needs its reciprocal <= 1
  Verdict tail_ok = Verdict::Holds;
  Verdict decomposition_ok = Verdict::Holds; // recorded parts rebuild |disc|

  bool all_ok() const;
  nlohmann::ordered_json to_json() const;
};

struct ConfigCheck {
  InequalityReport report; // M^{2d-3} >= (2r)^{d(1-d)} |disc|
  ProofTrace trace;
  ConfigPairing pairing;
  bool trivial_zero = false; // coincident points, bound is trivial
};

/* Full check of the paired-points energy bound with proof trace.
 * Hypothesis error when a point of norm above the threshold has no
 * equal-norm partner, or r < 1. */
ConfigCheck check_paired_config(const PointConfiguration& cfg,
                                std::optional<BigRat> r = std::nullopt);

/* d-2 deterministic distinct rational points on the radius-r sphere (in
 * the first coordinate plane) plus the antipodal pair R*e_k, -R*e_k.
 * Exact by construction; demands R > r and room for the placements. */
PointConfiguration sharpness_family(int k, int d, const BigRat& r,
                                    const BigRat& R, Prec p = 128);

class RootSet;

/* Roots of a polynomial as a k=2 configuration of certified boxes; this
 * is the route by which the paired-points bound covers complex roots of
 * arbitrary real or complex polynomials. */
PointConfiguration config_from_roots(const RootSet& rs);

} // namespace mg

#endif
