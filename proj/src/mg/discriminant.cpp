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

#include "discriminant.hpp"

namespace mg {

IntMatrix sylvester_matrix(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero())
    throw DomainError("sylvester matrix of zero polynomial");
  int m = f.degree();
  int n = g.degree();
  if (m + n == 0) throw DomainError("sylvester matrix needs positive total degree");

  size_t size = static_cast<size_t>(m + n);
  IntMatrix s(size, std::vector<BigInt>(size, BigInt(0)));
  for (int row = 0; row < n; ++row)
    for (int j = 0; j <= m; ++j)
      s[static_cast<size_t>(row)][static_cast<size_t>(row + j)] = f.coeff(m - j);
  for (int row = 0; row < m; ++row)
    for (int j = 0; j <= n; ++j)
      s[static_cast<size_t>(n + row)][static_cast<size_t>(row + j)] = g.coeff(n - j);
  return s;
}

BigInt resultant(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero())
    throw DomainError("resultant of zero polynomial");
  int m = f.degree();
  int n = g.degree();
  if (m == 0) return int_pow(f.coeff(0), static_cast<unsigned long>(n));
  if (n == 0) return int_pow(g.coeff(0), static_cast<unsigned long>(m));
  return bareiss_det(sylvester_matrix(f, g));
}

BigInt discriminant(const IntPoly& f) {
  int d = f.degree();
  if (d < 1) throw DomainError("discriminant needs degree >= 1");
  if (d == 1) return BigInt(1);

  BigInt res = resultant(f, f.derivative());
  BigInt q = res / f.leading();
  if (q * f.leading() != res)
    throw DomainError("resultant not divisible by leading coefficient");
  bool flip = ((static_cast<long>(d) * (d - 1) / 2) % 2) == 1;
  return flip ? BigInt(-q) : q;
}

}  // namespace mg
