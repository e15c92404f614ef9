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

#include "roots.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace mg {

namespace {

Real pow2(long e, Prec p) {
  Real r(p);
  mpfr_set_ui_2exp(r.raw(), 1, e, MPFR_RNDN);
  return r;
}

/* Box guaranteed to contain the true root of an entry. */
CInterval root_box(const CertifiedRoot& e) {
  Interval rho(r_neg(e.radius), e.radius);
  return {Interval::point(e.value.re) + rho, Interval::point(e.value.im) + rho};
}

long euler_phi(long m) {
  long r = m;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    r -= r / p;
    while (m % p == 0) m /= p;
  }
  if (m > 1) r -= r / m;
  return r;
}

int mobius(long m) {
  int k = 0;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    m /= p;
    if (m % p == 0) return 0;
    ++k;
  }
  if (m > 1) ++k;
  return (k % 2 == 0) ? 1 : -1;
}

IntPoly x_pow_minus_one(long k) {
  std::vector<BigInt> c(static_cast<size_t>(k) + 1, BigInt(0));
  c[0] = -1;
  c.back() = 1;
  return IntPoly(std::move(c));
}

IntPoly cyclotomic_poly(long n) {
  IntPoly num = IntPoly::constant(BigInt(1));
  IntPoly den = IntPoly::constant(BigInt(1));
  for (long d = 1; d <= n; ++d) {
    if (n % d) continue;
    int mu = mobius(d);
    if (mu == 1)
      num = num * x_pow_minus_one(n / d);
    else if (mu == -1)
      den = den * x_pow_minus_one(n / d);
  }
  auto q = try_divide(num, den);
  if (!q) throw DomainError("cyclotomic construction failed");
  return *q;
}

struct FactorData {
  IntPoly g;
  int multiplicity = 1;
  std::vector<CertifiedRoot> roots;  // distinct roots of g; conj indices local
  bool ok = true;
};

Real residual_radius(const IntPoly& g, const IntPoly& gd, const Cplx& z, Prec w) {
  CInterval pt = z.enclose();
  Interval num = g.eval(pt, w).abs();
  Interval den = gd.eval(pt, w).abs();
  if (den.lo().sgn() <= 0) return Real::pos_inf(w);
  Interval rr = Interval::of_long(g.degree(), w) * num / den;
  return rr.hi();
}

std::vector<Cplx> aberth_iterate(const IntPoly& g, const IntPoly& gd, Prec w) {
  int n = g.degree();
  double radius = 1.0;
  {
    BigRat lead{abs(g.leading())};
    double mx = 0.0;
    for (int i = 0; i < n; ++i) {
      double ratio = (BigRat(abs(g.coeff(i))) / lead).convert_to<double>();
      if (!std::isfinite(ratio)) ratio = 1e100;
      mx = std::max(mx, ratio);
    }
    radius = 1.0 + mx;
    if (!std::isfinite(radius)) radius = 1e100;
  }

  std::vector<Cplx> z;
  z.reserve(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    // fixed angular offset keeps initial guesses off both axes
    double ang = 2.0 * 3.14159265358979323846 * (j + 0.5) / n + 0.7;
    z.push_back(Cplx::of(radius * std::cos(ang), radius * std::sin(ang), w));
  }

  Real one = Real::of(1L, w);
  Real zero(w);
  Cplx cone{one, zero};
  Real eps2 = pow2(-2 * (static_cast<long>(w) - 8), w);
  Real tiny = pow2(-static_cast<long>(w) / 2, w);
  int max_iter = 64 + 10 * n + static_cast<int>(w) / 2;

  for (int it = 0; it < max_iter; ++it) {
    bool converged = true;
    for (int i = 0; i < n; ++i) {
      Cplx p = g.eval(z[static_cast<size_t>(i)]);
      if (p.is_zero()) continue;
      Cplx pd = gd.eval(z[static_cast<size_t>(i)]);
      if (pd.is_zero()) {
        z[static_cast<size_t>(i)].re = z[static_cast<size_t>(i)].re + tiny;
        converged = false;
        continue;
      }
      Cplx nwt = p / pd;
      Cplx s = Cplx::zero(w);
      bool clash = false;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        Cplx dz = z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)];
        if (dz.is_zero()) {
          clash = true;
          break;
        }
        s = s + cone / dz;
      }
      if (clash) {
        z[static_cast<size_t>(i)].im = z[static_cast<size_t>(i)].im + tiny;
        converged = false;
        continue;
      }
      Cplx denom = cone - nwt * s;
      Cplx step = denom.is_zero() ? nwt : nwt / denom;
      z[static_cast<size_t>(i)] = z[static_cast<size_t>(i)] - step;

      Real s2 = step.norm();
      Real z2 = z[static_cast<size_t>(i)].norm();
      Real scale = (z2 > one) ? z2 : one;
      if (!(s2 <= eps2 * scale)) converged = false;
    }
    if (converged) break;
  }
  return z;
}

void try_snap_rational(const IntPoly& g, CertifiedRoot& e, Prec w) {
  if (!e.real || !e.radius.is_finite()) return;
  BigRat lo = r_sub(e.value.re, e.radius, MPFR_RNDD).to_rational();
  BigRat hi = r_add(e.value.re, e.radius, MPFR_RNDU).to_rational();
  BigRat cand = simplest_rational_in(lo, hi);
  if (g.eval(cand) != 0) return;
  e.rational = cand;
  e.modulus_sq = cand * cand;
  e.value.re = Real::of(cand, w, MPFR_RNDN);
  Interval exact = Interval::exact(cand, w);
  e.radius = exact.width();  // bounds the representation rounding only
}

FactorData solve_squarefree(const IntPoly& g, int multiplicity, Prec w) {
  FactorData fd;
  fd.g = g;
  fd.multiplicity = multiplicity;
  int n = g.degree();

  if (n == 1) {
    BigRat rat = BigRat(-g.coeff(0)) / BigRat(g.coeff(1));
    CertifiedRoot e;
    e.value = Cplx{Real::of(rat, w, MPFR_RNDN), Real(w)};
    e.radius = Interval::exact(rat, w).width();
    e.real = true;
    e.rational = rat;
    e.modulus_sq = rat * rat;
    fd.roots.push_back(std::move(e));
    return fd;
  }

  int nr = count_real_roots(g);
  IntPoly gd = g.derivative();
  std::vector<Cplx> z = aberth_iterate(g, gd, w);

  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return r_abs(z[static_cast<size_t>(a)].im) < r_abs(z[static_cast<size_t>(b)].im);
  });

  std::vector<CertifiedRoot> roots(static_cast<size_t>(n));
  for (int t = 0; t < nr; ++t) {
    int idx = order[static_cast<size_t>(t)];
    roots[static_cast<size_t>(idx)].real = true;
    z[static_cast<size_t>(idx)].im = Real(w);
  }

  std::vector<int> pos, neg;
  for (int t = nr; t < n; ++t) {
    int idx = order[static_cast<size_t>(t)];
    (z[static_cast<size_t>(idx)].im.sgn() > 0 ? pos : neg).push_back(idx);
  }
  if (pos.size() != neg.size()) {
    fd.ok = false;  // sign structure inconsistent with the real-root count
  } else {
    std::sort(pos.begin(), pos.end(), [&](int a, int b) {
      const Cplx& x = z[static_cast<size_t>(a)];
      const Cplx& y = z[static_cast<size_t>(b)];
      int c = cmp(x.re, y.re);
      if (c != 0) return c < 0;
      return x.im < y.im;
    });
    std::vector<int> avail = neg;
    for (int p : pos) {
      Cplx want = z[static_cast<size_t>(p)].conj();
      size_t best = 0;
      Real best_d = Real::pos_inf(w);
      for (size_t a = 0; a < avail.size(); ++a) {
        Real d = (z[static_cast<size_t>(avail[a])] - want).norm();
        if (d < best_d) {
          best_d = d;
          best = a;
        }
      }
      int q = avail[best];
      avail.erase(avail.begin() + static_cast<long>(best));
      z[static_cast<size_t>(q)] = want;
      roots[static_cast<size_t>(p)].conj = q;
      roots[static_cast<size_t>(q)].conj = p;
    }
  }

  for (int i = 0; i < n; ++i) {
    roots[static_cast<size_t>(i)].value = z[static_cast<size_t>(i)];
    roots[static_cast<size_t>(i)].radius = residual_radius(g, gd, z[static_cast<size_t>(i)], w);
    if (!roots[static_cast<size_t>(i)].radius.is_finite()) fd.ok = false;
  }

  for (auto& e : roots) try_snap_rational(g, e, w);

  if (n == 2 && nr == 0) {
    BigRat msq = BigRat(g.coeff(0)) / BigRat(g.coeff(2));
    if (msq <= 0) throw DomainError("conjugate pair with nonpositive norm");
    for (auto& e : roots) e.modulus_sq = msq;
  }

  fd.roots = std::move(roots);
  return fd;
}

bool disks_disjoint(const CertifiedRoot& a, const CertifiedRoot& b) {
  if (!a.radius.is_finite() || !b.radius.is_finite()) return false;
  Interval dx = Interval::point(a.value.re) - Interval::point(b.value.re);
  Interval dy = Interval::point(a.value.im) - Interval::point(b.value.im);
  Real dist_lo = (dx.square() + dy.square()).sqrt().lo();
  Real rsum = r_add(a.radius, b.radius, MPFR_RNDU);
  return dist_lo > rsum;
}

/* Marks the roots of the cyclotomic part of g with exact squared
 * modulus 1.  Requires the certificate to hold already: disjoint disks
 * each containing exactly one root make the counting argument rigorous. */
void mark_unit_circle_roots(FactorData& fd, Prec w) {
  const IntPoly& gm = fd.g;
  int n = gm.degree();
  if (n < 2) return;

  IntPoly circ = IntPoly::constant(BigInt(1));
  for (long m = 1; m <= 2L * n * n + 2; ++m) {
    if (euler_phi(m) > n) continue;
    IntPoly phi = cyclotomic_poly(m);
    if (phi.degree() > gm.degree()) continue;
    if (try_divide(gm, phi)) circ = circ * phi;
  }
  if (circ.degree() < 1) return;

  std::vector<int> cand;
  for (int i = 0; i < n; ++i) {
    const CertifiedRoot& e = fd.roots[static_cast<size_t>(i)];
    if (e.rational) {
      if (circ.eval(*e.rational) == 0) cand.push_back(i);
      continue;
    }
    CInterval v = circ.eval(root_box(e), w);
    if (v.re.contains_zero() && v.im.contains_zero()) cand.push_back(i);
  }
  if (static_cast<int>(cand.size()) != circ.degree()) return;
  for (int i : cand) {
    CertifiedRoot& e = fd.roots[static_cast<size_t>(i)];
    if (!e.modulus_sq) e.modulus_sq = BigRat(1);
  }
}

RootSet assemble(const IntPoly& f, std::vector<FactorData> fds, Prec w) {
  bool ok = true;
  for (const FactorData& fd : fds) ok = ok && fd.ok;

  if (ok) {
    // global separation: every pair of distinct roots, across factors
    std::vector<const CertifiedRoot*> all;
    for (const FactorData& fd : fds)
      for (const CertifiedRoot& e : fd.roots) all.push_back(&e);
    for (size_t i = 0; i < all.size() && ok; ++i) {
      if (!all[i]->real && !(r_abs(all[i]->value.im) > all[i]->radius)) ok = false;
      for (size_t j = i + 1; j < all.size() && ok; ++j)
        if (!disks_disjoint(*all[i], *all[j])) ok = false;
    }
  }

  if (ok)
    for (FactorData& fd : fds) mark_unit_circle_roots(fd, w);

  std::vector<CertifiedRoot> entries;
  int cluster = 0;
  int base = 0;
  for (const FactorData& fd : fds) {
    int nd = static_cast<int>(fd.roots.size());
    int mult = fd.multiplicity;
    for (int j = 0; j < nd; ++j) {
      const CertifiedRoot& src = fd.roots[static_cast<size_t>(j)];
      for (int t = 0; t < mult; ++t) {
        CertifiedRoot e = src;
        e.multiplicity = mult;
        e.cluster = cluster + j;
        e.conj = (src.conj >= 0) ? base + src.conj * mult + t : -1;
        entries.push_back(std::move(e));
      }
    }
    cluster += nd;
    base += nd * mult;
  }
  return RootSet(f, std::move(entries), w, ok);
}

RootSet attempt(const IntPoly& f, const std::vector<IntPoly>& decomp, Prec w) {
  std::vector<FactorData> fds;
  for (size_t idx = 0; idx < decomp.size(); ++idx) {
    const IntPoly& s = decomp[idx];
    if (s.degree() < 1) continue;
    fds.push_back(solve_squarefree(s, static_cast<int>(idx) + 1, w));
  }
  return assemble(f, std::move(fds), w);
}

}  // namespace

BigRat simplest_rational_in(const BigRat& lo_in, const BigRat& hi_in) {
  if (lo_in > hi_in) throw DomainError("empty interval");
  bool negated = false;
  BigRat lo = lo_in, hi = hi_in;
  if (hi < 0) {
    BigRat t = lo;
    lo = -hi;
    hi = -t;
    negated = true;
  } else if (lo <= 0) {
    return BigRat(0);
  }

  std::vector<BigInt> terms;
  BigRat l = lo, h = hi;
  bool closed = false;
  for (int guard = 0; guard < 100000; ++guard) {
    BigInt fl = numerator(l) / denominator(l);  // floor; l > 0
    BigRat ceil_l = (l == BigRat(fl)) ? BigRat(fl) : BigRat(fl + 1);
    if (ceil_l <= h) {
      terms.push_back(numerator(ceil_l));
      closed = true;
      break;
    }
    terms.push_back(fl);
    BigRat nl = BigRat(1) / (h - BigRat(fl));
    BigRat nh = BigRat(1) / (l - BigRat(fl));
    l = nl;
    h = nh;
  }
  if (!closed) throw DomainError("interval too thin for rational search");

  BigRat v{terms.back()};
  for (int i = static_cast<int>(terms.size()) - 2; i >= 0; --i)
    v = BigRat(terms[static_cast<size_t>(i)]) + BigRat(1) / v;
  return negated ? BigRat(-v) : v;
}

RootSet find_roots(const IntPoly& f, Prec start_prec, Prec cap) {
  if (f.is_zero()) throw DomainError("roots of the zero polynomial");
  if (f.degree() < 1) throw DomainError("roots need degree >= 1");
  std::vector<IntPoly> decomp = squarefree_decomposition(f);

  Prec w = std::max<Prec>(start_prec, 32);
  if (cap < w) cap = w;
  while (true) {
    RootSet rs = attempt(f, decomp, w);
    if (rs.certified() || w >= cap) return rs;
    w = std::min<Prec>(w * 2, cap);
  }
}

CInterval RootSet::enclosure(int i) const {
  return root_box(entry(i));
}

std::pair<BigRat, BigRat> RootSet::modulus_sq_range(int i) const {
  const CertifiedRoot& e = entry(i);
  if (e.modulus_sq) return {*e.modulus_sq, *e.modulus_sq};
  if (!e.radius.is_finite())
    throw PrecisionError("root modulus not bounded at this precision");
  CInterval box = root_box(e);
  Interval msq = box.norm();
  return {msq.lo().to_rational(), msq.hi().to_rational()};
}

Interval RootSet::modulus_interval(int i, Prec p) const {
  const CertifiedRoot& e = entry(i);
  if (e.modulus_sq) return Interval::exact(*e.modulus_sq, p).sqrt();
  if (!e.radius.is_finite())
    return Interval(Real::of(0L, p), Real::pos_inf(p));
  return root_box(e).abs();
}

namespace {

struct ModRange {
  int idx;
  BigRat lo, hi;
  bool exact;
};

bool ranges_overlap(const ModRange& a, const ModRange& b) {
  return !(a.hi < b.lo || b.hi < a.lo);
}

bool exactly_equal(const RootSet& rs, const ModRange& a, const ModRange& b) {
  const CertifiedRoot& x = rs.entry(a.idx);
  const CertifiedRoot& y = rs.entry(b.idx);
  if (x.cluster == y.cluster) return true;
  if (x.conj == b.idx) return true;
  if (a.exact && b.exact && a.lo == b.lo) return true;
  return false;
}

bool pairable(const RootSet& rs, const ModRange& a, const ModRange& b) {
  return exactly_equal(rs, a, b) || ranges_overlap(a, b);
}


}  // namespace

PairedProfile derive_profile(const RootSet& rs, const std::optional<BigRat>& r_opt) {
  int d = rs.degree();
  if (d < 1) throw DomainError("profile of empty root set");

  std::vector<ModRange> ranges;
  ranges.reserve(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) {
    auto [lo, hi] = rs.modulus_sq_range(i);
    ranges.push_back({i, lo, hi, lo == hi});
  }

  PairedProfile out;
  if (r_opt) {
    if (*r_opt < 1) throw DomainError("pairing threshold must be >= 1");
    out.r = *r_opt;
  } else {
    // smallest threshold >= 1 that leaves no unpairable large root; only
    // real roots constrain it, mirror pairs are consistent at any r
    out.auto_r = true;
    BigRat r2(1);
    std::vector<ModRange> reals;
    for (const ModRange& m : ranges)
      if (rs.entry(m.idx).real) reals.push_back(m);
    std::sort(reals.begin(), reals.end(), [](const ModRange& a, const ModRange& b) {
      if (a.hi != b.hi) return a.hi > b.hi;
      return a.lo > b.lo;
    });
    size_t i = 0;
    while (i < reals.size()) {
      if (i + 1 < reals.size() && pairable(rs, reals[i], reals[i + 1])) {
        i += 2;
      } else {
        if (reals[i].hi > r2) r2 = reals[i].hi;
        i += 1;
      }
    }
    // r2 bounds a squared modulus; the profile stores r itself
    out.r = (r2 <= 1) ? BigRat(1) : rat_sqrt_upper(r2);
    if (out.r < 1) out.r = 1;
  }

  BigRat r2 = out.r * out.r;
  enum Cls { kLarge, kSmall };
  std::vector<Cls> cls(static_cast<size_t>(d));
  for (const ModRange& m : ranges) {
    if (m.lo > r2)
      cls[static_cast<size_t>(m.idx)] = kLarge;
    else if (m.hi <= r2)
      cls[static_cast<size_t>(m.idx)] = kSmall;
    else
      throw PrecisionError("cannot classify root " + std::to_string(m.idx) +
                           " against the pairing threshold");
  }

  std::vector<bool> used(static_cast<size_t>(d), false);
  for (int i = 0; i < d; ++i) {
    if (cls[static_cast<size_t>(i)] != kLarge || used[static_cast<size_t>(i)]) continue;
    int c = rs.entry(i).conj;
    if (c >= 0 && !used[static_cast<size_t>(c)]) {
      out.pairs.emplace_back(std::min(i, c), std::max(i, c));
      used[static_cast<size_t>(i)] = used[static_cast<size_t>(c)] = true;
    }
  }
  std::vector<ModRange> leftovers;
  for (const ModRange& m : ranges)
    if (cls[static_cast<size_t>(m.idx)] == kLarge && !used[static_cast<size_t>(m.idx)])
      leftovers.push_back(m);
  std::sort(leftovers.begin(), leftovers.end(), [](const ModRange& a, const ModRange& b) {
    if (a.hi != b.hi) return a.hi > b.hi;
    if (a.lo != b.lo) return a.lo > b.lo;
    return a.idx < b.idx;
  });
  for (size_t i = 0; i < leftovers.size(); i += 2) {
    if (i + 1 >= leftovers.size() || !pairable(rs, leftovers[i], leftovers[i + 1]))
      throw HypothesisError(
          "root of modulus above the threshold has no equal-modulus partner");
    out.pairs.emplace_back(std::min(leftovers[i].idx, leftovers[i + 1].idx),
                           std::max(leftovers[i].idx, leftovers[i + 1].idx));
    used[static_cast<size_t>(leftovers[i].idx)] = true;
    used[static_cast<size_t>(leftovers[i + 1].idx)] = true;
  }

  for (int i = 0; i < d; ++i)
    if (cls[static_cast<size_t>(i)] == kSmall) out.small_indices.push_back(i);

  if (2 * out.pairs.size() + out.small_indices.size() != static_cast<size_t>(d))
    throw DomainError("internal: profile does not partition the root set");
  return out;
}

Interval discriminant_magnitude_from_roots(const RootSet& rs, Prec p) {
  int d = rs.degree();
  if (d < 1) throw DomainError("discriminant needs degree >= 1");
  Interval acc = Interval::exact(BigInt(1), p);
  for (int i = 0; i < d; ++i) {
    CInterval bi = root_box(rs.entry(i));
    for (int j = i + 1; j < d; ++j) {
      CInterval diff = bi - root_box(rs.entry(j));
      acc = acc * diff.norm();
    }
  }
  BigInt lead = abs(rs.source().leading());
  return acc * Interval::exact(int_pow(lead, static_cast<unsigned long>(2 * d - 2)), p);
}

}  // namespace mg
