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

#include "linalg.hpp"

#include <algorithm>

namespace mg {

BigInt bareiss_det(IntMatrix m) {
  size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw DomainError("determinant of non-square matrix");
  if (n == 0) return BigInt(1);

  int sign = 1;
  BigInt prev(1);
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return BigInt(0);
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        BigInt num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = num / prev;  // exact by the Bareiss identity
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  BigInt det = m[n - 1][n - 1];
  return sign < 0 ? BigInt(-det) : det;
}

BigRat rat_det(RatMatrix m) {
  size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw DomainError("determinant of non-square matrix");
  BigRat det(1);
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    while (piv < n && m[piv][k] == 0) ++piv;
    if (piv == n) return BigRat(0);
    if (piv != k) {
      std::swap(m[k], m[piv]);
      det = -det;
    }
    det *= m[k][k];
    BigRat inv = BigRat(1) / m[k][k];
    for (size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      BigRat f = m[i][k] * inv;
      for (size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det;
}

namespace {

/* Gauss-Jordan on [m | rhs_cols]; returns false when singular. */
bool eliminate(RatMatrix& m, RatMatrix& rhs) {
  size_t n = m.size();
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    while (piv < n && m[piv][k] == 0) ++piv;
    if (piv == n) return false;
    if (piv != k) {
      std::swap(m[k], m[piv]);
      std::swap(rhs[k], rhs[piv]);
    }
    BigRat inv = BigRat(1) / m[k][k];
    for (size_t j = 0; j < n; ++j) m[k][j] *= inv;
    for (size_t j = 0; j < rhs[k].size(); ++j) rhs[k][j] *= inv;
    for (size_t i = 0; i < n; ++i) {
      if (i == k || m[i][k] == 0) continue;
      BigRat f = m[i][k];
      for (size_t j = 0; j < n; ++j) m[i][j] -= f * m[k][j];
      for (size_t j = 0; j < rhs[i].size(); ++j) rhs[i][j] -= f * rhs[k][j];
    }
  }
  return true;
}

}  // namespace

std::optional<RatVector> rat_solve(RatMatrix m, RatVector rhs) {
  size_t n = m.size();
  if (rhs.size() != n) throw DomainError("solve dimension mismatch");
  RatMatrix cols(n);
  for (size_t i = 0; i < n; ++i) cols[i] = {rhs[i]};
  if (!eliminate(m, cols)) return std::nullopt;
  RatVector x(n);
  for (size_t i = 0; i < n; ++i) x[i] = cols[i][0];
  return x;
}

std::optional<RatMatrix> rat_inverse(RatMatrix m) {
  size_t n = m.size();
  RatMatrix id(n, RatVector(n, BigRat(0)));
  for (size_t i = 0; i < n; ++i) id[i][i] = 1;
  if (!eliminate(m, id)) return std::nullopt;
  return id;
}

}  // namespace mg
