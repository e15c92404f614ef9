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

/* Independent reference computations for the tests.  Everything here is
 * deliberately primitive: closed forms, plain double arithmetic, and
 * brute-force enumeration, sharing no code with the library under test. */

#ifndef MG_TEST_ORACLES_HPP
#define MG_TEST_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "mg/ints.hpp"

namespace oracle {

inline mg::BigInt disc_quadratic(const mg::BigInt& a, const mg::BigInt& b,
                                 const mg::BigInt& c) {
  return b * b - 4 * a * c;
}

inline mg::BigInt disc_cubic(const mg::BigInt& a, const mg::BigInt& b,
                             const mg::BigInt& c, const mg::BigInt& d) {
  return 18 * a * b * c * d - 4 * b * b * b * d + b * b * c * c -
         4 * a * c * c * c - 27 * a * a * d * d;
}

/* Durand-Kerner in plain double-precision complex arithmetic.
 * coeffs ascending, lead nonzero.  Good to ~1e-9 on the well-separated
 * inputs the tests feed it; never used for certification, only as an
 * independent cross-check. */
inline std::vector<std::complex<double>> dk_roots(std::vector<double> coeffs) {
  int d = static_cast<int>(coeffs.size()) - 1;
  for (auto& c : coeffs) c /= coeffs[static_cast<size_t>(d)];
  std::vector<std::complex<double>> z(static_cast<size_t>(d));
  std::complex<double> seed(0.4, 0.9);
  std::complex<double> acc(1.0, 0.0);
  for (int i = 0; i < d; ++i) {
    acc *= seed;
    z[static_cast<size_t>(i)] = acc;
  }
  auto eval = [&](std::complex<double> x) {
    std::complex<double> v(0.0, 0.0);
    for (int i = d; i >= 0; --i) v = v * x + coeffs[static_cast<size_t>(i)];
    return v;
  };
  for (int iter = 0; iter < 500; ++iter) {
    double worst = 0.0;
    for (int i = 0; i < d; ++i) {
      std::complex<double> num = eval(z[static_cast<size_t>(i)]);
      std::complex<double> den(1.0, 0.0);
      for (int j = 0; j < d; ++j)
        if (j != i) den *= z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)];
      std::complex<double> step = num / den;
      z[static_cast<size_t>(i)] -= step;
      worst = std::max(worst, std::abs(step));
    }
    if (worst < 1e-14) break;
  }
  return z;
}

inline double mahler_double(const std::vector<double>& coeffs) {
  double m = std::fabs(coeffs.back());
  for (const auto& z : dk_roots(coeffs)) m *= std::max(1.0, std::abs(z));
  return m;
}

inline double abs_disc_double(const std::vector<double>& coeffs) {
  auto z = dk_roots(coeffs);
  int d = static_cast<int>(z.size());
  double lead = std::fabs(coeffs.back());
  double out = std::pow(lead, 2 * d - 2);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      out *= std::norm(z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)]);
  return out;
}

/* Minimum measure over generators of the full ring of integers of an
 * imaginary quadratic field with defining polynomial x^2 + Bx + C.
 * Generators of the order are exactly u +/- theta (index |v| = 1), and
 * for a conjugate pair the measure of the minimal polynomial is the
 * norm, clamped below by 1; the norm form is u^2 -/+ Bu + C, so scanning
 * a small window of u is exhaustive (the form grows like u^2). */
inline mg::BigInt min_measure_imquad(long B, long C) {
  mg::BigInt best;
  bool have = false;
  for (long v : {1L, -1L}) {
    for (long u = -40; u <= 40; ++u) {
      long nm = u * u - B * u * v + C * v * v;
      mg::BigInt m = std::max(1L, nm);
      if (!have || m < best) {
        best = m;
        have = true;
      }
    }
  }
  return best;
}

}  // namespace oracle

#endif
