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
#include "mg/irreducible.hpp"

#include <algorithm>
#include <vector>

#include "mg/discriminant.hpp"
#include "mg/roots.hpp"

namespace mg {

namespace {

/* ---- GF(p) polynomial arithmetic, p < 2^31, coefficients in [0,p). ---- */

using PModP = std::vector<long>; // ascending, trimmed

long add_mod(long a, long b, long p) { return (a + b) % p; }
long mul_mod(long a, long b, long p) {
  return (long)(((__int128)a * b) % p);
}
long pow_mod(long a, long e, long p) {
  long r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}
long inv_mod(long a, long p) { return pow_mod(a, p - 2, p); }

void p_trim(PModP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}
int p_deg(const PModP& a) { return (int)a.size() - 1; }

PModP p_mul(const PModP& a, const PModP& b, long p) {
  if (a.empty() || b.empty()) return {};
  PModP r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = add_mod(r[i + j], mul_mod(a[i], b[j], p), p);
  p_trim(r);
  return r;
}

/* remainder of a by monic m */
PModP p_rem(PModP a, const PModP& m, long p) {
  int dm = p_deg(m);
  while (p_deg(a) >= dm) {
    long c = a.back();
    int shift = p_deg(a) - dm;
    for (int i = 0; i <= dm; ++i) {
      long t = mul_mod(c, m[(size_t)i], p);
      long& dst = a[(size_t)(i + shift)];
      dst = ((dst - t) % p + p) % p;
    }
    p_trim(a);
  }
  return a;
}

PModP p_powmod(PModP base, long e, const PModP& m, long p) {
  PModP r{1 % p};
  base = p_rem(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) r = p_rem(p_mul(r, base, p), m, p);
    base = p_rem(p_mul(base, base, p), m, p);
    e >>= 1;
  }
  return r;
}

PModP p_gcd(PModP a, PModP b, long p) {
  while (!b.empty()) {
    PModP m = b;
    long inv = inv_mod(m.back(), p);
    for (long& c : m) c = mul_mod(c, inv, p);
    a = p_rem(std::move(a), m, p);
    std::swap(a, b);
  }
  if (!a.empty()) {
    long inv = inv_mod(a.back(), p);
    for (long& c : a) c = mul_mod(c, inv, p);
  }
  return a;
}

/* Irreducibility of monic m over GF(p): x^(p^n) = x mod m and for every
 * prime q | n the map x -> x^(p^(n/q)) has no fixed subfield in common
 * with m. */
bool gfp_irreducible(const PModP& m, long p) {
  int n = p_deg(m);
  if (n <= 0) return false;
  if (n == 1) return true;
  std::vector<int> prime_divs;
  int t = n;
  for (int q = 2; q * q <= t; ++q)
    if (t % q == 0) {
      prime_divs.push_back(q);
      while (t % q == 0) t /= q;
    }
  if (t > 1) prime_divs.push_back(t);

  // frob[k] = x^(p^k) mod m, built by repeated p-th powers
  std::vector<PModP> frob((size_t)n + 1);
  frob[0] = PModP{0, 1};
  for (int k = 1; k <= n; ++k)
    frob[(size_t)k] = p_powmod(frob[(size_t)k - 1], p, m, p);

  PModP x{0, 1};
  if (frob[(size_t)n] != x) return false;
  for (int q : prime_divs) {
    PModP g = frob[(size_t)(n / q)];
    // g - x
    if (g.size() < 2) g.resize(2, 0);
    g[1] = ((g[1] - 1) % p + p) % p;
    p_trim(g);
    PModP d = p_gcd(g, m, p);
    if (p_deg(d) != 0) return false;
  }
  return true;
}

std::vector<long> primes_below(long n) {
  std::vector<bool> comp((size_t)n, false);
  std::vector<long> out;
  for (long i = 2; i < n; ++i) {
    if (comp[(size_t)i]) continue;
    out.push_back(i);
    for (long j = i * i; j < n; j += i) comp[(size_t)j] = true;
  }
  return out;
}

/* f mod p as a monic GF(p) polynomial; empty when p divides the leading
 * coefficient. */
PModP reduce_mod(const IntPoly& f, long p) {
  PModP r(f.coeffs().size());
  for (size_t i = 0; i < r.size(); ++i)
    r[i] = (long)(((f.coeff((int)i) % p) + p) % p);
  p_trim(r);
  if (p_deg(r) != f.degree()) return {};
  long inv = inv_mod(r.back(), p);
  for (long& c : r) c = mul_mod(c, inv, p);
  return r;
}

bool has_rational_root(const IntPoly& f) {
  if (f.coeff(0) == 0) return true;
  auto divisors = [](BigInt n) {
    n = abs(n);
    std::vector<BigInt> out;
    for (BigInt i(1); i * i <= n; ++i)
      if (n % i == 0) {
        out.push_back(i);
        out.push_back(n / i);
      }
    return out;
  };
  for (const BigInt& num : divisors(f.coeff(0)))
    for (const BigInt& den : divisors(f.coeff(f.degree()))) {
      if (gcd(num, den) != 1) continue;
      BigRat q = BigRat(num) / BigRat(den);
      if (f.eval(q) == 0 || f.eval(-q) == 0) return true;
    }
  return false;
}

std::vector<BigInt> positive_divisors(BigInt n) {
  n = abs(n);
  std::vector<BigInt> out;
  for (BigInt i(1); i * i <= n; ++i)
    if (n % i == 0) {
      out.push_back(i);
      if (i * i != n) out.push_back(n / i);
    }
  std::sort(out.begin(), out.end());
  return out;
}

/* Looks for a proper factor by rounding elementary-symmetric products of
 * certified root subsets.  Sound in both directions: a found candidate is
 * confirmed by exact division, and a true factor is always hit once every
 * coefficient interval is narrower than 1/2. */
bool has_factor_by_roots(const IntPoly& f, Prec cap) {
  int d = f.degree();
  std::vector<BigInt> leads = positive_divisors(f.coeff(d));
  Prec w = 256;
  for (;;) {
    RootSet rs = find_roots(f, w, cap);
    w = std::max(w, rs.precision());
    Prec p = w;
    bool too_wide = false;
    Real half = r_div(Real::of(1L, p), Real::of(2L, p), MPFR_RNDN);

    std::vector<CInterval> roots;
    for (int i = 0; i < d; ++i) roots.push_back(rs.enclosure(i));

    for (int mask = 1; mask < (1 << d) && !too_wide; ++mask) {
      int k = __builtin_popcount((unsigned)mask);
      if (k < 1 || k > d / 2) continue;
      // product poly prod (x - root_i), CInterval coefficients
      std::vector<CInterval> g{CInterval::exact(BigRat(1), BigRat(0), p)};
      for (int i = 0; i < d; ++i) {
        if (!(mask & (1 << i))) continue;
        std::vector<CInterval> ng((size_t)g.size() + 1,
                                  CInterval::exact(BigRat(0), BigRat(0), p));
        for (size_t j = 0; j < g.size(); ++j) {
          ng[j + 1] = ng[j + 1] + g[j];
          ng[j] = ng[j] - g[j] * roots[(size_t)i];
        }
        g = std::move(ng);
      }
      // real candidate only: every imaginary part must allow zero
      bool realish = true;
      for (const auto& c : g)
        if (!c.im.contains_zero()) { realish = false; break; }
      if (!realish) continue;

      for (const BigInt& l : leads) {
        std::vector<BigInt> cand(g.size());
        bool viable = true;
        for (size_t j = 0; j + 1 < g.size() && viable; ++j) {
          Interval scaled = Interval::exact(BigRat(l), p) * g[j].re;
          if (r_sub(scaled.hi(), scaled.lo(), MPFR_RNDU) >= half) {
            too_wide = true;
            viable = false;
            break;
          }
          // unique integer in the interval, if any
          BigRat lo = scaled.lo().to_rational();
          BigRat hi = scaled.hi().to_rational();
          BigInt n = numerator(lo) / denominator(lo);
          while (BigRat(n) < lo) ++n;
          if (BigRat(n) > hi) { viable = false; break; }
          cand[j] = n;
        }
        if (!viable) continue;
        cand.back() = l;
        if (try_divide(f, IntPoly(cand))) return true;
      }
    }
    if (!too_wide) return false;
    if (w >= cap)
      throw PrecisionError("factor search exceeded the precision cap");
    w *= 2;
  }
}

} // namespace

bool is_irreducible(const IntPoly& f, Prec prec_cap) {
  if (f.is_zero()) throw DomainError("irreducibility of the zero polynomial");
  if (!f.is_primitive())
    throw DomainError("irreducibility test needs a primitive polynomial");
  int d = f.degree();
  if (d <= 0) return false;
  if (d == 1) return true;
  if (f.coeff(0) == 0) return false; // x divides
  if (poly_gcd(f, f.derivative()).degree() > 0) return false;
  if (has_rational_root(f)) return false;
  if (d <= 3) return true; // any factorization would include a linear factor

  BigInt disc = discriminant(f);
  BigInt lead = f.coeff(d);
  static const std::vector<long> battery = primes_below(500);
  int used = 0;
  for (long p : battery) {
    if (lead % p == 0 || disc % p == 0) continue;
    PModP m = reduce_mod(f, p);
    if (m.empty()) continue;
    if (gfp_irreducible(m, p)) return true;
    if (++used >= 25) break;
  }
  if (d > 12)
    throw BudgetError("irreducibility undecided past desk-scale degree");
  return !has_factor_by_roots(f, prec_cap);
}

} // namespace mg
