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

#include "families.hpp"

namespace mg {

bool is_prime_small(const BigInt& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (BigInt q(3); q * q <= n; q += 2)
    if (n % q == 0) return false;
  return true;
}

FamilyMember binomial_family(const BigInt& p, int d) {
  if (p < 2 || d < 2) throw DomainError("binomial family needs p >= 2, d >= 2");
  std::vector<BigInt> c(static_cast<size_t>(d) + 1, BigInt(0));
  c[0] = -p;
  c.back() = p + 1;
  FamilyMember m;
  m.poly = IntPoly(std::move(c));
  m.predicted_abs_disc =
      int_pow(BigInt(d), static_cast<unsigned long>(d)) *
      int_pow(p * (p + 1), static_cast<unsigned long>(d - 1));
  m.predicted_measure = p + 1;
  return m;
}

FamilyMember eisenstein_family(const BigInt& p, int d) {
  if (d < 2) throw DomainError("eisenstein family needs d >= 2");
  if (!is_prime_small(p)) throw DomainError("eisenstein family needs prime p");
  std::vector<BigInt> c(static_cast<size_t>(d) + 1, BigInt(0));
  c[0] = (d % 2 == 0) ? BigInt(-p) : p;  // (-1)^(d+1) p
  c[static_cast<size_t>(d) - 1] = p;
  c.back() = 1;
  FamilyMember m;
  m.poly = IntPoly(std::move(c));
  m.predicted_abs_disc =
      int_pow(p, static_cast<unsigned long>(d - 1)) *
      (int_pow(BigInt(d), static_cast<unsigned long>(d)) +
       int_pow(BigInt(d - 1) * p, static_cast<unsigned long>(d - 1)));
  return m;
}

IntPoly dominant_trinomial(int d, int w, long t) {
  static const std::pair<int, int> kSupported[] = {
      {3, 1}, {4, 2}, {5, 1}, {7, 1}, {9, 2}};
  bool ok = false;
  for (auto [dd, ww] : kSupported) ok = ok || (dd == d && ww == w);
  if (!ok) throw DomainError("unsupported trinomial shape");
  if (t < 1) throw DomainError("trinomial parameter t must be >= 1");

  BigInt tail = BigInt(d) * t + w;
  std::vector<BigInt> c(static_cast<size_t>(d) + 1, BigInt(0));
  c[0] = tail;
  c[static_cast<size_t>(d) - 1] = BigInt(-16) * d * tail;
  c.back() = 1;
  return IntPoly(std::move(c));
}

}  // namespace mg
