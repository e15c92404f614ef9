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

#include "real.hpp"

#include <cstdlib>
#include <cstring>

namespace mg {

std::string Real::str(int digits) const {
  if (is_nan()) return "nan";
  if (is_inf()) return sgn() > 0 ? "inf" : "-inf";
  char* s = nullptr;
  mpfr_exp_t e = 0;
  s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), v_, MPFR_RNDN);
  if (!s) return "nan";
  std::string m(s);
  mpfr_free_str(s);
  bool neg = !m.empty() && m[0] == '-';
  std::string dig = neg ? m.substr(1) : m;
  // strip trailing zeros but keep one digit
  size_t last = dig.find_last_not_of('0');
  if (last == std::string::npos)
    dig = "0";
  else
    dig = dig.substr(0, last + 1);
  std::string out = neg ? "-" : "";
  if (dig == "0") return "0";
  out += "0." + dig + "e" + std::to_string(static_cast<long>(e));
  return out;
}

BigRat rat_sqrt_upper(const BigRat& q) {
  if (q < 0) throw DomainError("square root of a negative rational");
  BigInt rn, rd;
  if (is_perfect_square(numerator(q), &rn) && is_perfect_square(denominator(q), &rd))
    return BigRat(rn) / BigRat(rd);
  return r_sqrt(Real::of(q, 192, MPFR_RNDU), MPFR_RNDU).to_rational();
}

}  // namespace mg
