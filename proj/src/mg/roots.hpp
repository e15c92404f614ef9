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

#ifndef MG_ROOTS_HPP
#define MG_ROOTS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "cplx.hpp"
#include "interval.hpp"
#include "poly.hpp"

namespace mg {

/* One root approximation with a rigorous error radius.  The disk
 * |z - value| <= radius always contains a true root; when the whole set
 * is certified the disks of distinct roots are pairwise disjoint, so
 * each disk contains exactly the root it claims, real-axis centers hold
 * real roots and off-axis disks avoid the axis. */
struct CertifiedRoot {
  Cplx value;
  Real radius;
  int multiplicity = 1;
  int cluster = 0;  // distinct-root id; repeated roots share it
  int conj = -1;    // index of the mirror entry, -1 for real roots
  bool real = false;
  std::optional<BigRat> rational;    // exact value, when the root snapped
  std::optional<BigRat> modulus_sq;  // exact |root|^2, when known
};

class RootSet {
 public:
  RootSet(IntPoly source, std::vector<CertifiedRoot> entries, Prec precision,
          bool certified)
      : source_(std::move(source)),
        entries_(std::move(entries)),
        prec_(precision),
        certified_(certified) {}

  const IntPoly& source() const { return source_; }
  int degree() const { return static_cast<int>(entries_.size()); }
  const std::vector<CertifiedRoot>& entries() const { return entries_; }
  const CertifiedRoot& entry(int i) const { return entries_.at(static_cast<size_t>(i)); }
  Prec precision() const { return prec_; }
  bool certified() const { return certified_; }

  /* Exact rational bounds on |root_i|^2; tight when modulus_sq is known. */
  std::pair<BigRat, BigRat> modulus_sq_range(int i) const;

  /* |root_i| as an outward-rounded interval at precision p. */
  Interval modulus_interval(int i, Prec p) const;

  /* Point value as a degenerate complex box. */
  CInterval box(int i) const { return entry(i).value.enclose(); }

  /* Certified enclosure: point value padded by the error radius. */
  CInterval enclosure(int i) const;

 private:
  IntPoly source_;
  std::vector<CertifiedRoot> entries_;
  Prec prec_;
  bool certified_;
};

/* All complex roots with certified radii.  Repeated roots are detected
 * exactly up front, the finder runs on squarefree factors, and
 * precision doubles from start_prec until the certificate closes or cap
 * is reached; an uncertified set is returned honestly in that case. */
RootSet find_roots(const IntPoly& f, Prec start_prec = 128, Prec cap = 4096);

/* Pairing structure of the roots of modulus above a threshold.  Every
 * index of the source set appears exactly once across pairs and
 * small_indices. */
struct PairedProfile {
  BigRat r;
  bool auto_r = false;
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> small_indices;
  int m() const { return 2 * static_cast<int>(pairs.size()); }
};

/* Splits roots at modulus r (exact comparisons wherever squared moduli
 * are known exactly).  Mirror pairs are paired structurally; remaining
 * large roots pair greedily by sorted modulus when their certified
 * modulus ranges overlap.  r = nullopt picks the smallest valid
 * threshold >= 1 automatically.  Throws a hypothesis error when a large
 * root cannot be paired and a precision error when a root cannot be
 * classified against r. */
PairedProfile derive_profile(const RootSet& rs, const std::optional<BigRat>& r);

/* |lc|^(2d-2) * prod_{i<j} |root_i - root_j|^2 from the certified
 * disks; cross-check companion for the exact resultant value. */
Interval discriminant_magnitude_from_roots(const RootSet& rs, Prec p);

/* Minimal-denominator rational in the closed interval [lo, hi]. */
BigRat simplest_rational_in(const BigRat& lo, const BigRat& hi);

}  // namespace mg

#endif
