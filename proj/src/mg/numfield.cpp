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

#include "numfield.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "discriminant.hpp"
#include "irreducible.hpp"

namespace mg {

namespace {

std::string rat_str(const BigRat& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

std::string int_str(const BigInt& z) {
  std::ostringstream os;
  os << z;
  return os.str();
}

BigInt rat_floor(const BigRat& q) {
  BigInt n = boost::multiprecision::numerator(q);
  BigInt d = boost::multiprecision::denominator(q);
  if (n >= 0) return n / d;
  return -((-n + d - 1) / d);
}

BigInt rat_ceil(const BigRat& q) { return -rat_floor(-q); }

BigInt round_nearest(const BigRat& q) { return rat_floor(q + BigRat(1, 2)); }

/* Interval determinant by first-column cofactor expansion; the matrices
 * here are at most 5x5. */
Interval iv_det(const std::vector<std::vector<Interval>>& m) {
  size_t n = m.size();
  if (n == 1) return m[0][0];
  Prec p = m[0][0].prec();
  Interval acc = Interval::of_long(0, p);
  for (size_t i = 0; i < n; ++i) {
    std::vector<std::vector<Interval>> minor;
    minor.reserve(n - 1);
    for (size_t a = 0; a < n; ++a) {
      if (a == i) continue;
      std::vector<Interval> row;
      row.reserve(n - 1);
      for (size_t b = 1; b < n; ++b) row.push_back(m[a][b]);
      minor.push_back(std::move(row));
    }
    Interval term = m[i][0] * iv_det(minor);
    acc = (i % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

/* Sign of a + t*sqrt(N) - m with rational a, t, m and integer N > 0. */
int cmp_lin_sqrt(const BigRat& a, const BigRat& t, const BigInt& N,
                 const BigRat& m) {
  BigRat q = a - m;
  int sq = q.sign();
  int st = t.sign();
  if (st == 0) return sq;
  if (sq == 0) return st;
  if (sq == st) return sq;
  BigRat lhs = t * t * BigRat(N);
  BigRat rhs = q * q;
  if (lhs > rhs) return st;
  if (lhs < rhs) return sq;
  return 0;
}

RatPoly row_to_poly(const RatVector& row) {
  return RatPoly(std::vector<BigRat>(row.begin(), row.end()));
}

/* Common-denominator split of a rational polynomial: g = h / den. */
void split_denominator(const RatPoly& g, IntPoly* h, BigInt* den) {
  BigInt m = 1;
  for (int i = 0; i <= g.degree(); ++i) {
    BigInt d = boost::multiprecision::denominator(g.coeff(i));
    m = m / boost::multiprecision::gcd(m, d) * d;
  }
  std::vector<BigInt> c;
  c.reserve(static_cast<size_t>(g.degree()) + 1);
  for (int i = 0; i <= g.degree(); ++i) {
    BigRat scaled = g.coeff(i) * BigRat(m);
    c.push_back(boost::multiprecision::numerator(scaled));
  }
  *h = IntPoly(std::move(c));
  *den = m;
}

/* Embedded coordinates of h(theta)/den at every root index of rs, in
 * the flattened ordering real..., (Re, Im) per positive-imag rep. */
std::vector<Interval> embed_with(const RootSet& rs, const std::vector<int>& ord,
                                 int r, const IntPoly& h, const BigInt& den,
                                 Prec p) {
  Interval inv_den = Interval::exact(BigRat(BigInt(1), den), p);
  std::vector<Interval> out;
  out.reserve(ord.size() + (ord.size() - static_cast<size_t>(r)));
  for (size_t k = 0; k < ord.size(); ++k) {
    CInterval v = h.eval(rs.enclosure(ord[k]), p);
    if (static_cast<int>(k) < r) {
      out.push_back(v.re * inv_den);
    } else {
      out.push_back(v.re * inv_den);
      out.push_back(v.im * inv_den);
    }
  }
  return out;
}

}  // namespace

bool OrderElement::is_zero() const {
  for (const BigInt& c : coords)
    if (c != 0) return false;
  return true;
}

FieldOrder FieldOrder::build(const IntPoly& defining_poly,
                             const std::optional<RatMatrix>& basis,
                             const std::optional<BigInt>& field_disc) {
  const int d = defining_poly.degree();
  if (d < 2) throw DomainError("defining polynomial must have degree at least 2");
  if (defining_poly.leading() != 1)
    throw DomainError("defining polynomial must be monic");
  if (!is_irreducible(defining_poly))
    throw DomainError("reducible defining polynomial");

  FieldOrder k;
  k.poly_ = defining_poly;
  k.r_ = count_real_roots(defining_poly);
  if ((d - k.r_) % 2 != 0)
    throw DomainError("inconsistent real root count");
  k.s_ = (d - k.r_) / 2;

  if (basis) {
    k.basis_ = *basis;
    if (static_cast<int>(k.basis_.size()) != d)
      throw DomainError("basis must be a d x d matrix");
    for (const auto& row : k.basis_)
      if (static_cast<int>(row.size()) != d)
        throw DomainError("basis must be a d x d matrix");
    k.power_basis_ = true;
    for (int i = 0; i < d && k.power_basis_; ++i)
      for (int j = 0; j < d; ++j)
        if (k.basis_[static_cast<size_t>(i)][static_cast<size_t>(j)] !=
            BigRat(i == j ? 1 : 0)) {
          k.power_basis_ = false;
          break;
        }
  } else {
    k.basis_.assign(static_cast<size_t>(d), RatVector(static_cast<size_t>(d)));
    for (int i = 0; i < d; ++i)
      k.basis_[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    k.power_basis_ = true;
  }

  std::optional<RatMatrix> inv = rat_inverse(k.basis_);
  if (!inv) throw DomainError("basis matrix is singular");
  k.basis_inv_ = *inv;

  BigInt disc_poly = discriminant(defining_poly);
  BigRat det = rat_det(k.basis_);
  BigRat disc_rat = BigRat(disc_poly) * det * det;
  if (boost::multiprecision::denominator(disc_rat) != 1)
    throw DomainError("order discriminant is not an integer");
  k.disc_order_ = boost::multiprecision::numerator(disc_rat);

  /* Structure constants; closure of the basis under multiplication. */
  k.table_.assign(static_cast<size_t>(d),
                  std::vector<std::vector<BigInt>>(static_cast<size_t>(d)));
  std::vector<RatPoly> rowpoly;
  rowpoly.reserve(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i)
    rowpoly.push_back(row_to_poly(k.basis_[static_cast<size_t>(i)]));
  for (int i = 0; i < d; ++i) {
    for (int j = i; j < d; ++j) {
      RatPoly prod = (rowpoly[static_cast<size_t>(i)] *
                      rowpoly[static_cast<size_t>(j)])
                         .mod_monic(defining_poly);
      std::vector<BigInt> coords(static_cast<size_t>(d));
      for (int a = 0; a < d; ++a) {
        BigRat v = 0;
        for (int b = 0; b < d; ++b)
          v += k.basis_inv_[static_cast<size_t>(b)][static_cast<size_t>(a)] *
               (b <= prod.degree() ? prod.coeff(b) : BigRat(0));
        if (boost::multiprecision::denominator(v) != 1)
          throw DomainError("basis is not multiplicatively closed");
        coords[static_cast<size_t>(a)] = boost::multiprecision::numerator(v);
      }
      k.table_[static_cast<size_t>(i)][static_cast<size_t>(j)] = coords;
      k.table_[static_cast<size_t>(j)][static_cast<size_t>(i)] = std::move(coords);
    }
  }

  std::optional<OrderElement> one =
      k.from_power_poly(RatPoly(std::vector<BigRat>{BigRat(1)}));
  if (!one) throw DomainError("basis does not span 1 over the integers");
  k.one_ = *one;

  if (field_disc) {
    if (*field_disc == 0) throw DomainError("field discriminant cannot be zero");
    BigRat ratio = BigRat(k.disc_order_) / BigRat(*field_disc);
    if (boost::multiprecision::denominator(ratio) != 1 || ratio <= 0 ||
        !is_perfect_square(boost::multiprecision::numerator(ratio)))
      throw DomainError(
          "order discriminant is not the field discriminant times a square");
    k.field_disc_ = field_disc;
  }
  return k;
}

OrderElement FieldOrder::zero() const {
  return OrderElement{std::vector<BigInt>(static_cast<size_t>(degree()))};
}

OrderElement FieldOrder::unit(int i) const {
  OrderElement e = zero();
  e.coords.at(static_cast<size_t>(i)) = 1;
  return e;
}

OrderElement FieldOrder::from_ints(const std::vector<long>& v) const {
  if (static_cast<int>(v.size()) != degree())
    throw DomainError("coordinate count does not match the degree");
  OrderElement e = zero();
  for (size_t i = 0; i < v.size(); ++i) e.coords[i] = v[i];
  return e;
}

OrderElement FieldOrder::add(const OrderElement& a, const OrderElement& b) const {
  OrderElement e = zero();
  for (size_t i = 0; i < e.coords.size(); ++i)
    e.coords[i] = a.coords.at(i) + b.coords.at(i);
  return e;
}

OrderElement FieldOrder::sub(const OrderElement& a, const OrderElement& b) const {
  OrderElement e = zero();
  for (size_t i = 0; i < e.coords.size(); ++i)
    e.coords[i] = a.coords.at(i) - b.coords.at(i);
  return e;
}

OrderElement FieldOrder::neg(const OrderElement& a) const {
  OrderElement e = zero();
  for (size_t i = 0; i < e.coords.size(); ++i) e.coords[i] = -a.coords.at(i);
  return e;
}

OrderElement FieldOrder::mul(const OrderElement& a, const OrderElement& b) const {
  const size_t d = static_cast<size_t>(degree());
  OrderElement e = zero();
  for (size_t i = 0; i < d; ++i) {
    if (a.coords.at(i) == 0) continue;
    for (size_t j = 0; j < d; ++j) {
      if (b.coords.at(j) == 0) continue;
      BigInt w = a.coords[i] * b.coords[j];
      const std::vector<BigInt>& t = table_[i][j];
      for (size_t l = 0; l < d; ++l) e.coords[l] += w * t[l];
    }
  }
  return e;
}

OrderElement FieldOrder::mul_int(const OrderElement& a, const BigInt& n) const {
  OrderElement e = zero();
  for (size_t i = 0; i < e.coords.size(); ++i) e.coords[i] = a.coords.at(i) * n;
  return e;
}

RatPoly FieldOrder::to_power_poly(const OrderElement& a) const {
  const int d = degree();
  if (static_cast<int>(a.coords.size()) != d)
    throw DomainError("coordinate count does not match the degree");
  std::vector<BigRat> p(static_cast<size_t>(d));
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i)
      p[static_cast<size_t>(j)] +=
          BigRat(a.coords[static_cast<size_t>(i)]) *
          basis_[static_cast<size_t>(i)][static_cast<size_t>(j)];
  return RatPoly(std::move(p));
}

std::optional<OrderElement> FieldOrder::from_power_poly(const RatPoly& g) const {
  const int d = degree();
  if (g.degree() >= d) throw DomainError("power polynomial degree too large");
  OrderElement e = zero();
  for (int i = 0; i < d; ++i) {
    BigRat v = 0;
    for (int j = 0; j < d; ++j)
      v += basis_inv_[static_cast<size_t>(j)][static_cast<size_t>(i)] *
           (j <= g.degree() ? g.coeff(j) : BigRat(0));
    if (boost::multiprecision::denominator(v) != 1) return std::nullopt;
    e.coords[static_cast<size_t>(i)] = boost::multiprecision::numerator(v);
  }
  return e;
}

std::vector<int> FieldOrder::embedding_order(const RootSet& rs) const {
  if (rs.source() != poly_)
    throw DomainError("root set does not belong to the defining polynomial");
  if (!rs.certified())
    throw PrecisionError("root set for the embedding is not certified");
  Real zero_r = Real::of(0L, 32);
  std::vector<int> reals, reps;
  for (int i = 0; i < rs.degree(); ++i) {
    const CertifiedRoot& e = rs.entry(i);
    if (e.real)
      reals.push_back(i);
    else if (e.value.im > zero_r)
      reps.push_back(i);
  }
  if (static_cast<int>(reals.size()) != r_ ||
      static_cast<int>(reps.size()) != s_)
    throw PrecisionError("root classification does not match the signature");
  std::sort(reals.begin(), reals.end(), [&](int a, int b) {
    return rs.entry(a).value.re < rs.entry(b).value.re;
  });
  std::sort(reps.begin(), reps.end(), [&](int a, int b) {
    if (rs.entry(a).value.re != rs.entry(b).value.re)
      return rs.entry(a).value.re < rs.entry(b).value.re;
    return rs.entry(a).value.im < rs.entry(b).value.im;
  });
  std::vector<int> out = std::move(reals);
  out.insert(out.end(), reps.begin(), reps.end());
  return out;
}

std::vector<Interval> minkowski_embed(const FieldOrder& k, const OrderElement& a,
                                      Prec prec) {
  RootSet rs = find_roots(k.poly(), prec);
  std::vector<int> ord = k.embedding_order(rs);
  IntPoly h;
  BigInt den;
  split_denominator(k.to_power_poly(a), &h, &den);
  return embed_with(rs, ord, k.reals(), h, den, prec);
}

MinkowskiLattice minkowski_lattice(const FieldOrder& k, Prec prec) {
  MinkowskiLattice lat;
  lat.precision = prec;
  const int d = k.degree();
  lat.columns.reserve(static_cast<size_t>(d));
  RootSet rs = find_roots(k.poly(), prec);
  std::vector<int> ord = k.embedding_order(rs);
  for (int j = 0; j < d; ++j) {
    IntPoly h;
    BigInt den;
    split_denominator(k.to_power_poly(k.unit(j)), &h, &den);
    lat.columns.push_back(embed_with(rs, ord, k.reals(), h, den, prec));
  }
  BigInt absd = boost::multiprecision::abs(k.disc());
  lat.covol_sq_scaled = BigRat(absd);
  Interval root = Interval::exact(absd, prec).sqrt();
  Interval scale =
      Interval::exact(BigRat(BigInt(1), int_pow(BigInt(2),
                                                static_cast<unsigned long>(k.pairs()))),
                      prec);
  lat.covolume = root * scale;
  return lat;
}

SearchBox build_box(const FieldOrder& k, const BigRat& c, const BigRat& T) {
  if (k.pairs() == 0)
    throw HypothesisError(
        "box construction needs a complex embedding; use the real-embedding "
        "variant");
  if (c < 1 || T < 1)
    throw DomainError("box parameters must satisfy c >= 1 and T >= 1");
  const int r = k.reals(), s = k.pairs();
  SearchBox box;
  box.c = c;
  box.T = T;
  for (int i = 1; i <= r; ++i)
    box.bounds.emplace_back(BigRat(2 * i - 2) * c, BigRat(2 * i - 1) * c);
  for (int j = 1; j <= s; ++j) {
    if (j < s) {
      int i = r + j;
      box.bounds.emplace_back(BigRat(2 * i - 2) * c, BigRat(2 * i - 1) * c);
      box.bounds.emplace_back(c, 2 * c);
    } else {
      box.bounds.emplace_back(T, T + c);
      box.bounds.emplace_back(3 * c + T, T + 4 * c);
    }
  }
  return box;
}

SearchBox build_box_real(const FieldOrder& k, const BigRat& c, const BigRat& T) {
  if (k.reals() == 0)
    throw DomainError("the real-embedding variant needs a real embedding");
  if (c < 1 || T < 1)
    throw DomainError("box parameters must satisfy c >= 1 and T >= 1");
  const int r = k.reals(), s = k.pairs();
  SearchBox box;
  box.c = c;
  box.T = T;
  for (int i = 1; i <= r - 1; ++i)
    box.bounds.emplace_back(BigRat(2 * i - 2) * c, BigRat(2 * i - 1) * c);
  box.bounds.emplace_back(T, T + c);
  for (int j = 1; j <= s; ++j) {
    int i = (r - 1) + j;
    box.bounds.emplace_back(BigRat(2 * i - 2) * c, BigRat(2 * i - 1) * c);
    box.bounds.emplace_back(c, 2 * c);
  }
  return box;
}

namespace {

/* Open-interval membership for one candidate; 1 inside, 0 outside,
 * -1 undecided at this precision.  Interval endpoints are dyadic, so
 * the comparisons against the rational bounds are exact. */
int box_side(const std::vector<Interval>& val, const SearchBox& box) {
  bool inside = true;
  for (size_t i = 0; i < val.size(); ++i) {
    BigRat lo = val[i].lo().to_rational();
    BigRat hi = val[i].hi().to_rational();
    if (hi <= box.bounds[i].first || lo >= box.bounds[i].second) return 0;
    if (!(lo > box.bounds[i].first && hi < box.bounds[i].second)) inside = false;
  }
  return inside ? 1 : -1;
}

/* Exact membership for quadratic fields: every coordinate has the form
 * a + t*sqrt(N) with rational a, t. */
bool quad_member(const FieldOrder& k, const OrderElement& e,
                 const SearchBox& box) {
  BigInt b = k.poly().coeff(1), c0 = k.poly().coeff(0);
  BigInt D = b * b - 4 * c0;
  RatPoly g = k.to_power_poly(e);
  BigRat u0 = g.degree() >= 0 ? g.coeff(0) : BigRat(0);
  BigRat u1 = g.degree() >= 1 ? g.coeff(1) : BigRat(0);
  BigRat base = u0 - u1 * BigRat(b) / 2;
  if (k.pairs() == 1) {
    BigInt N = -D;
    BigRat re = base;
    if (!(re > box.bounds[0].first && re < box.bounds[0].second)) return false;
    BigRat t = u1 / 2;  // Im = t * sqrt(N)
    return cmp_lin_sqrt(BigRat(0), t, N, box.bounds[1].first) > 0 &&
           cmp_lin_sqrt(BigRat(0), t, N, box.bounds[1].second) < 0;
  }
  /* Two real embeddings, ascending: base -/+ (u1/2) sqrt(D). */
  for (int which = 0; which < 2; ++which) {
    BigRat t = (which == 0) ? -u1 / 2 : u1 / 2;
    if (!(cmp_lin_sqrt(base, t, D, box.bounds[static_cast<size_t>(which)].first) >
              0 &&
          cmp_lin_sqrt(base, t, D,
                       box.bounds[static_cast<size_t>(which)].second) < 0))
      return false;
  }
  return true;
}

struct EmbeddedBasis {
  Prec prec;
  std::vector<std::vector<Interval>> columns;
};

EmbeddedBasis embed_basis(const FieldOrder& k, Prec prec) {
  EmbeddedBasis eb;
  eb.prec = prec;
  RootSet rs = find_roots(k.poly(), prec);
  std::vector<int> ord = k.embedding_order(rs);
  for (int j = 0; j < k.degree(); ++j) {
    IntPoly h;
    BigInt den;
    split_denominator(k.to_power_poly(k.unit(j)), &h, &den);
    eb.columns.push_back(embed_with(rs, ord, k.reals(), h, den, prec));
  }
  return eb;
}

std::vector<Interval> combine(const EmbeddedBasis& eb,
                              const std::vector<BigInt>& coords) {
  const size_t d = coords.size();
  std::vector<Interval> val(d, Interval::of_long(0, eb.prec));
  for (size_t j = 0; j < d; ++j) {
    if (coords[j] == 0) continue;
    Interval w = Interval::exact(coords[j], eb.prec);
    for (size_t i = 0; i < d; ++i)
      val[i] = val[i] + w * eb.columns[j][i];
  }
  return val;
}

}  // namespace

std::vector<OrderElement> enumerate_box(const FieldOrder& k,
                                        const MinkowskiLattice& lat,
                                        const SearchBox& box, Prec cap) {
  const int d = k.degree();
  if (static_cast<int>(box.bounds.size()) != d)
    throw DomainError("box dimension does not match the degree");

  /* Outer integer ranges from cofactor inverse times the box. */
  Prec p = lat.precision;
  std::vector<std::vector<Interval>> B = lat.columns;  // B[j][i]; column-major
  Interval det = Interval::of_long(0, p);
  {
    std::vector<std::vector<Interval>> rowmajor(
        static_cast<size_t>(d), std::vector<Interval>(static_cast<size_t>(d),
                                                      Interval::of_long(0, p)));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        rowmajor[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            B[static_cast<size_t>(j)][static_cast<size_t>(i)];
    det = iv_det(rowmajor);
    while (det.contains_zero()) {
      p *= 2;
      if (p > cap)
        throw PrecisionError("embedded basis determinant cannot be separated "
                             "from zero");
      EmbeddedBasis eb = embed_basis(k, p);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          rowmajor[static_cast<size_t>(i)][static_cast<size_t>(j)] =
              eb.columns[static_cast<size_t>(j)][static_cast<size_t>(i)];
      B = eb.columns;
      det = iv_det(rowmajor);
    }
  }

  std::vector<Interval> xiv;
  xiv.reserve(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i)
    xiv.push_back(Interval(Real::of(box.bounds[static_cast<size_t>(i)].first, p,
                                    MPFR_RNDD),
                           Real::of(box.bounds[static_cast<size_t>(i)].second, p,
                                    MPFR_RNDU)));

  std::vector<std::pair<BigInt, BigInt>> ranges;
  BigInt total = 1;
  for (int c = 0; c < d; ++c) {
    /* Cramer: coordinate c replaces column c of the basis matrix. */
    std::vector<std::vector<Interval>> m(
        static_cast<size_t>(d),
        std::vector<Interval>(static_cast<size_t>(d), Interval::of_long(0, p)));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            (j == c) ? xiv[static_cast<size_t>(i)]
                     : B[static_cast<size_t>(j)][static_cast<size_t>(i)];
    Interval coord = iv_det(m) / det;
    BigInt lo = rat_floor(coord.lo().to_rational());
    BigInt hi = rat_ceil(coord.hi().to_rational());
    if (hi < lo) return {};
    ranges.emplace_back(lo, hi);
    total *= hi - lo + 1;
    if (total > 4000000)
      throw BudgetError("box enumeration budget exceeded");
  }

  std::vector<std::vector<BigInt>> pending;
  {
    std::vector<BigInt> cur(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) cur[static_cast<size_t>(i)] = ranges[static_cast<size_t>(i)].first;
    while (true) {
      pending.push_back(cur);
      int i = d - 1;
      while (i >= 0) {
        cur[static_cast<size_t>(i)] += 1;
        if (cur[static_cast<size_t>(i)] <= ranges[static_cast<size_t>(i)].second) break;
        cur[static_cast<size_t>(i)] = ranges[static_cast<size_t>(i)].first;
        --i;
      }
      if (i < 0) break;
    }
  }

  std::vector<OrderElement> accepted;
  if (d == 2) {
    for (auto& coords : pending) {
      OrderElement e{coords};
      if (quad_member(k, e, box)) accepted.push_back(std::move(e));
    }
  } else {
    Prec q = lat.precision;
    EmbeddedBasis eb{q, B};
    while (!pending.empty()) {
      std::vector<std::vector<BigInt>> undecided;
      for (auto& coords : pending) {
        int side = box_side(combine(eb, coords), box);
        if (side == 1)
          accepted.push_back(OrderElement{coords});
        else if (side < 0)
          undecided.push_back(coords);
      }
      pending = std::move(undecided);
      if (pending.empty()) break;
      q *= 2;
      if (q > cap)
        throw PrecisionError(
            "cannot decide box membership near the boundary at the precision "
            "cap");
      eb = embed_basis(k, q);
    }
  }
  std::sort(accepted.begin(), accepted.end(),
            [](const OrderElement& a, const OrderElement& b) {
              return a.coords < b.coords;
            });
  return accepted;
}

MinPolyResult minimal_polynomial(const FieldOrder& k, const OrderElement& a) {
  const int d = k.degree();
  /* Characteristic polynomial of multiplication by the element, from
   * d+1 exact determinant evaluations and Lagrange interpolation. */
  std::vector<std::vector<BigInt>> mul_mat(
      static_cast<size_t>(d), std::vector<BigInt>(static_cast<size_t>(d)));
  for (int j = 0; j < d; ++j) {
    OrderElement col = k.mul(a, k.unit(j));
    for (int i = 0; i < d; ++i)
      mul_mat[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          col.coords[static_cast<size_t>(i)];
  }
  RatPoly chi(std::vector<BigRat>{BigRat(0)});
  for (int t = 0; t <= d; ++t) {
    IntMatrix m(static_cast<size_t>(d), std::vector<BigInt>(static_cast<size_t>(d)));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            BigInt(i == j ? t : 0) -
            mul_mat[static_cast<size_t>(i)][static_cast<size_t>(j)];
    BigInt vt = bareiss_det(std::move(m));
    RatPoly lk(std::vector<BigRat>{BigRat(1)});
    BigRat denom = 1;
    for (int j = 0; j <= d; ++j) {
      if (j == t) continue;
      lk = lk * RatPoly(std::vector<BigRat>{BigRat(-j), BigRat(1)});
      denom *= BigRat(t - j);
    }
    chi = chi + lk.scaled(BigRat(vt) / denom);
  }
  IntPoly charpoly = chi.to_int_poly();
  if (charpoly.degree() != d || charpoly.leading() != 1)
    throw DomainError("characteristic polynomial is not monic of full degree");

  IntPoly m = squarefree_part(charpoly);
  if (m.leading() < 0) m = -m;
  if (m.leading() != 1)
    throw DomainError("minimal polynomial is not monic");

  MinPolyResult res;
  res.poly = m;
  res.degree = m.degree();
  res.generates = (res.degree == d);
  if (res.degree >= 2) {
    if (!is_irreducible(m))
      throw DomainError("squarefree characteristic factor is reducible");
    res.disc_f = discriminant(m);
  } else {
    res.disc_f = 1;
  }
  if (res.generates && k.field_disc()) {
    BigRat ratio = BigRat(res.disc_f) / BigRat(*k.field_disc());
    BigInt root;
    if (boost::multiprecision::denominator(ratio) != 1 || ratio <= 0 ||
        !is_perfect_square(boost::multiprecision::numerator(ratio), &root))
      throw DomainError(
          "minimal polynomial discriminant is not the field discriminant times "
          "a square");
    res.index = root;
  }
  return res;
}

nlohmann::ordered_json MinPolyResult::to_json() const {
  nlohmann::ordered_json j;
  j["poly"] = poly.to_text();
  j["degree"] = degree;
  j["generates"] = generates;
  j["disc_f"] = int_str(disc_f);
  if (index)
    j["index"] = int_str(*index);
  else
    j["index"] = nullptr;
  return j;
}

namespace {

/* Certified pairwise embedding separation > c over all d embeddings,
 * conjugates included. */
bool verify_separation(const FieldOrder& k, const OrderElement& a,
                       const BigRat& c, Prec cap) {
  IntPoly h;
  BigInt den;
  split_denominator(k.to_power_poly(a), &h, &den);
  BigRat csq = c * c;
  Prec p = 256;
  while (true) {
    RootSet rs = find_roots(k.poly(), p);
    bool undecided = false;
    std::vector<CInterval> vals;
    Interval inv_den = Interval::exact(BigRat(BigInt(1), den), p);
    for (int i = 0; i < rs.degree(); ++i) {
      CInterval v = h.eval(rs.enclosure(i), p);
      vals.push_back(CInterval(v.re * inv_den, v.im * inv_den));
    }
    for (size_t i = 0; i < vals.size() && !undecided; ++i) {
      for (size_t j = i + 1; j < vals.size(); ++j) {
        CInterval diff(vals[i].re - vals[j].re, vals[i].im - vals[j].im);
        Interval nsq = diff.norm();
        BigRat lo = nsq.lo().to_rational();
        BigRat hi = nsq.hi().to_rational();
        if (lo > csq) continue;
        if (hi <= csq) return false;
        undecided = true;
        break;
      }
    }
    if (!undecided) return true;
    p *= 2;
    if (p > cap)
      throw PrecisionError("cannot certify the embedding separation");
  }
}

/* All roots of f except the top conjugate pair (or the single top root)
 * have modulus at most bound; escalates until every comparison closes. */
bool verify_roots_bounded(const IntPoly& f, const BigRat& bound,
                          bool skip_pair, Prec cap) {
  BigRat bsq = bound * bound;
  Prec p = 128;
  while (true) {
    RootSet rs = find_roots(f, p);
    std::vector<int> idx(static_cast<size_t>(rs.degree()));
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    std::sort(idx.begin(), idx.end(), [&](int x, int y) {
      return rs.modulus_sq_range(x).first > rs.modulus_sq_range(y).first;
    });
    std::vector<bool> skip(static_cast<size_t>(rs.degree()), false);
    int top = idx.at(0);
    skip[static_cast<size_t>(top)] = true;
    if (skip_pair) {
      int partner = rs.entry(top).conj;
      if (partner < 0) return false;  // largest root is real; wrong shape
      skip[static_cast<size_t>(partner)] = true;
    }
    bool undecided = false;
    for (int i = 0; i < rs.degree(); ++i) {
      if (skip[static_cast<size_t>(i)]) continue;
      auto range = rs.modulus_sq_range(i);
      if (range.second <= bsq) continue;
      if (range.first > bsq) return false;
      undecided = true;
      break;
    }
    if (!undecided) return true;
    p *= 2;
    if (p > cap)
      throw PrecisionError("cannot certify the root modulus bound");
  }
}

GeneratorSearch generator_search(const FieldOrder& k,
                                 const std::vector<BigRat>& T_list,
                                 const std::optional<BigRat>& c_fixed, Prec cap,
                                 bool real_variant) {
  const int d = k.degree();
  if (!real_variant && k.pairs() == 0)
    throw HypothesisError(
        "generator search needs a complex embedding; use the real-embedding "
        "variant");
  if (real_variant && k.reals() == 0)
    throw DomainError("the real-embedding variant needs a real embedding");
  if (T_list.empty()) throw DomainError("empty T sequence");
  for (size_t i = 0; i < T_list.size(); ++i) {
    if (T_list[i] < 1) throw DomainError("T values must be at least 1");
    if (i > 0 && !(T_list[i] > T_list[i - 1]))
      throw DomainError("T values must be strictly increasing");
  }

  MinkowskiLattice lat = minkowski_lattice(k, 192);
  BigRat c;
  if (c_fixed) {
    if (*c_fixed < 1) throw DomainError("c must be at least 1");
    c = *c_fixed;
  } else {
    double cv = lat.covolume.hi().to_double();
    double start = std::pow(std::max(cv, 1.0), 1.0 / d);
    if (!std::isfinite(start) || start < 1.0) start = 1.0;
    c = BigRat(BigInt(static_cast<long>(std::ceil(start * 16.0))), BigInt(16));
    if (c < 1) c = 1;
  }

  long t_factor = real_variant ? std::max(5, 4 * d) : 5;
  GeneratorSearch out;
  std::vector<std::pair<BigRat, BigRat>> chosen;  // (T_requested, T_used)
  std::vector<OrderElement> picks;
  for (int attempt = 0;; ++attempt) {
    if (attempt > 60) throw BudgetError("no nonempty box found while doubling c");
    out.notices.clear();
    chosen.clear();
    picks.clear();
    bool restart = false;
    std::optional<BigRat> prev;
    for (const BigRat& T0 : T_list) {
      BigRat t = T0;
      if (t < BigRat(t_factor) * c) t = BigRat(t_factor) * c;
      if (prev && !(t > *prev + c)) t = *prev + c + 1;
      if (t != T0)
        out.notices.push_back("T " + rat_str(T0) + " raised to " + rat_str(t));
      prev = t;
      SearchBox box = real_variant ? build_box_real(k, c, t) : build_box(k, c, t);
      std::vector<OrderElement> elems = enumerate_box(k, lat, box, cap);
      if (elems.empty()) {
        if (c_fixed)
          throw DomainError(
              "no lattice point in the box for the given c; use the automatic "
              "choice");
        c *= 2;
        restart = true;
        break;
      }
      chosen.emplace_back(T0, t);
      picks.push_back(elems.front());
    }
    if (!restart) break;
  }
  out.c = c;

  long ratio_exp = real_variant ? 2 * d - 2 : 2 * d - 3;
  BigRat cK =
      real_variant
          ? rat_pow(BigRat(8 * d) * c, 2L * d * (d - 1))
          : rat_pow(BigRat(2 * d) * c, static_cast<long>(d) * (2 * d - 3));
  BigRat modulus_bound = BigRat(2 * d) * c;

  for (size_t i = 0; i < picks.size(); ++i) {
    const OrderElement& alpha = picks[i];
    MinPolyResult mp = minimal_polynomial(k, alpha);
    MeasureResult meas = measure_of(mp.poly, 128, cap);
    Prec w = meas.value.prec();
    BigInt absdisc = boost::multiprecision::abs(mp.disc_f);

    GeneratorRecord rec;
    rec.field = k.poly().to_text();
    rec.T_requested = chosen[i].first;
    rec.T = chosen[i].second;
    rec.c = c;
    rec.alpha_coords = alpha.coords;
    rec.minpoly = mp.poly;
    rec.M = meas.value;
    rec.disc_f = mp.disc_f;
    rec.ratio = b_div(b_pow(meas.value, ratio_exp),
                      Bound::of_integer(absdisc, w));
    rec.c_K = cK;
    rec.index = mp.index;
    rec.generates = mp.generates;
    rec.ratio_ok =
        b_certified_ge(Bound::of_rational(cK, w), rec.ratio) == Verdict::Holds;
    BigRat shape = real_variant
                       ? rat_pow(BigRat(2 * d) * c, d - 1) * (rec.T + c)
                       : rat_pow(BigRat(2 * d) * c, d - 2) *
                             rat_pow(2 * rec.T + 5 * c, 2);
    rec.measure_shape_ok =
        b_certified_ge(Bound::of_rational(shape, w), meas.value) ==
        Verdict::Holds;
    rec.separation_ok = verify_separation(k, alpha, c, cap);
    rec.roots_bounded_ok =
        verify_roots_bounded(mp.poly, modulus_bound, !real_variant, cap);
    if (chosen[i].first != chosen[i].second)
      rec.notice = "T raised to " + rat_str(chosen[i].second) +
                   " to honor the proof threshold";
    out.records.push_back(std::move(rec));
  }
  return out;
}

}  // namespace

GeneratorSearch find_generators(const FieldOrder& k,
                                const std::vector<BigRat>& T_list,
                                const std::optional<BigRat>& c_fixed, Prec cap) {
  return generator_search(k, T_list, c_fixed, cap, false);
}

GeneratorSearch find_generators_real_variant(const FieldOrder& k,
                                             const std::vector<BigRat>& T_list,
                                             const std::optional<BigRat>& c_fixed,
                                             Prec cap) {
  return generator_search(k, T_list, c_fixed, cap, true);
}

nlohmann::ordered_json GeneratorRecord::to_json() const {
  nlohmann::ordered_json j;
  j["field"] = field;
  j["T"] = rat_str(T);
  j["c"] = rat_str(c);
  nlohmann::ordered_json coords = nlohmann::ordered_json::array();
  for (const BigInt& z : alpha_coords) coords.push_back(int_str(z));
  j["alpha_coords"] = std::move(coords);
  j["minpoly"] = minpoly.to_text();
  j["M"] = M.to_json();
  j["disc_f"] = int_str(disc_f);
  j["ratio"] = ratio.to_json();
  j["c_K"] = rat_str(c_K);
  j["T_requested"] = rat_str(T_requested);
  if (index)
    j["index"] = int_str(*index);
  else
    j["index"] = nullptr;
  j["generates"] = generates;
  j["separation_ok"] = separation_ok;
  j["roots_bounded_ok"] = roots_bounded_ok;
  j["ratio_ok"] = ratio_ok;
  j["measure_shape_ok"] = measure_shape_ok;
  if (!notice.empty()) j["notice"] = notice;
  return j;
}

namespace {

/* Try to realize a root arrangement of f inside the order: approximate
 * coordinates from a linear solve against the embedded basis, rounded,
 * then confirmed by exact evaluation of f at the element. */
std::optional<OrderElement> match_root(const FieldOrder& k,
                                       const EmbeddedBasis& eb,
                                       const IntPoly& f, Prec prec) {
  const int d = k.degree();
  const int r = k.reals(), s = k.pairs();
  RootSet rs = find_roots(f, prec);
  if (!rs.certified()) return std::nullopt;

  Real zero_r = Real::of(0L, 32);
  std::vector<int> freal, fpair;
  for (int i = 0; i < rs.degree(); ++i) {
    if (rs.entry(i).real)
      freal.push_back(i);
    else if (rs.entry(i).value.im > zero_r)
      fpair.push_back(i);
  }
  if (static_cast<int>(freal.size()) != r || static_cast<int>(fpair.size()) != s)
    return std::nullopt;
  std::sort(freal.begin(), freal.end(), [&](int a, int b) {
    return rs.entry(a).value.re < rs.entry(b).value.re;
  });
  std::sort(fpair.begin(), fpair.end(), [&](int a, int b) {
    return rs.entry(a).value.re < rs.entry(b).value.re;
  });

  /* Midpoint basis matrix, row-major. */
  std::vector<std::vector<Real>> bm(
      static_cast<size_t>(d), std::vector<Real>(static_cast<size_t>(d)));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const Interval& iv = eb.columns[static_cast<size_t>(j)][static_cast<size_t>(i)];
      bm[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          r_mul(r_add(iv.lo(), iv.hi(), MPFR_RNDN), Real::of(BigRat(1, 2), eb.prec),
                MPFR_RNDN);
    }

  std::vector<std::vector<int>> real_perms, pair_perms;
  {
    std::vector<int> pr = freal;
    std::sort(pr.begin(), pr.end());
    do real_perms.push_back(pr);
    while (std::next_permutation(pr.begin(), pr.end()));
    std::vector<int> pp = fpair;
    std::sort(pp.begin(), pp.end());
    do pair_perms.push_back(pp);
    while (std::next_permutation(pp.begin(), pp.end()));
    if (real_perms.empty()) real_perms.push_back({});
    if (pair_perms.empty()) pair_perms.push_back({});
  }

  for (const auto& pr : real_perms) {
    for (const auto& pp : pair_perms) {
      for (int flips = 0; flips < (1 << s); ++flips) {
        std::vector<Real> y;
        y.reserve(static_cast<size_t>(d));
        for (int i = 0; i < r; ++i) y.push_back(rs.entry(pr[static_cast<size_t>(i)]).value.re);
        for (int j = 0; j < s; ++j) {
          const CertifiedRoot& e = rs.entry(pp[static_cast<size_t>(j)]);
          y.push_back(e.value.re);
          y.push_back((flips >> j) & 1 ? r_neg(e.value.im) : e.value.im);
        }
        /* Gaussian elimination with partial pivoting on a copy. */
        std::vector<std::vector<Real>> a = bm;
        std::vector<Real> rhs = y;
        bool singular = false;
        for (int col = 0; col < d && !singular; ++col) {
          int piv = col;
          for (int row = col + 1; row < d; ++row)
            if (r_abs(a[static_cast<size_t>(row)][static_cast<size_t>(col)]) >
                r_abs(a[static_cast<size_t>(piv)][static_cast<size_t>(col)]))
              piv = row;
          if (!(r_abs(a[static_cast<size_t>(piv)][static_cast<size_t>(col)]) > zero_r)) {
            singular = true;
            break;
          }
          std::swap(a[static_cast<size_t>(col)], a[static_cast<size_t>(piv)]);
          std::swap(rhs[static_cast<size_t>(col)], rhs[static_cast<size_t>(piv)]);
          for (int row = col + 1; row < d; ++row) {
            Real factor = a[static_cast<size_t>(row)][static_cast<size_t>(col)] /
                          a[static_cast<size_t>(col)][static_cast<size_t>(col)];
            for (int cc = col; cc < d; ++cc)
              a[static_cast<size_t>(row)][static_cast<size_t>(cc)] =
                  a[static_cast<size_t>(row)][static_cast<size_t>(cc)] -
                  factor * a[static_cast<size_t>(col)][static_cast<size_t>(cc)];
            rhs[static_cast<size_t>(row)] =
                rhs[static_cast<size_t>(row)] - factor * rhs[static_cast<size_t>(col)];
          }
        }
        if (singular) continue;
        std::vector<BigRat> x(static_cast<size_t>(d));
        bool near_int = true;
        for (int row = d - 1; row >= 0; --row) {
          Real acc = rhs[static_cast<size_t>(row)];
          for (int cc = row + 1; cc < d; ++cc)
            acc = acc - a[static_cast<size_t>(row)][static_cast<size_t>(cc)] *
                            Real::of(x[static_cast<size_t>(cc)], eb.prec);
          Real xi = acc / a[static_cast<size_t>(row)][static_cast<size_t>(row)];
          x[static_cast<size_t>(row)] = xi.to_rational();
        }
        OrderElement cand = k.zero();
        for (int i = 0; i < d; ++i) {
          BigInt n = round_nearest(x[static_cast<size_t>(i)]);
          BigRat delta = x[static_cast<size_t>(i)] - BigRat(n);
          if (delta < 0) delta = -delta;
          if (delta > BigRat(1, 4)) {
            near_int = false;
            break;
          }
          cand.coords[static_cast<size_t>(i)] = n;
        }
        if (!near_int) continue;
        /* Exact confirmation: f evaluated at the candidate is zero. */
        OrderElement acc = k.zero();
        for (int deg = f.degree(); deg >= 0; --deg) {
          acc = k.mul(acc, cand);
          acc = k.add(acc, k.mul_int(k.one(), f.coeff(deg)));
        }
        if (acc.is_zero()) return cand;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

MinMeasureResult compute_M_OK(const FieldOrder& k, const BigInt& T_max,
                              Prec cap, long budget) {
  if (T_max < 1) throw DomainError("T_max must be at least 1");
  const int d = k.degree();
  const int r = k.reals();

  std::vector<BigInt> bound(static_cast<size_t>(d));
  for (int j = 1; j <= d; ++j)
    bound[static_cast<size_t>(j - 1)] =
        binomial(static_cast<unsigned>(d), static_cast<unsigned>(j)) * T_max;

  EmbeddedBasis eb = embed_basis(k, 256);

  MinMeasureResult res;
  res.note = "minimum over generators lying in the given order";
  std::optional<Bound> best;
  IntPoly best_poly;
  OrderElement best_alpha = k.zero();

  std::vector<BigInt> a(static_cast<size_t>(d));
  for (int j = 0; j < d; ++j) a[static_cast<size_t>(j)] = -bound[static_cast<size_t>(j)];
  bool done = false;
  while (!done) {
    ++res.candidates;
    if (res.candidates > budget)
      throw BudgetError("enumeration budget exceeded before exhausting T_max");

    /* a[j-1] is the coefficient of x^(d-j); constant term last. */
    if (a[static_cast<size_t>(d - 1)] != 0) {
      std::vector<BigInt> coeffs(static_cast<size_t>(d) + 1);
      coeffs[static_cast<size_t>(d)] = 1;
      for (int j = 1; j <= d; ++j)
        coeffs[static_cast<size_t>(d - j)] = a[static_cast<size_t>(j - 1)];
      IntPoly f{std::vector<BigInt>(coeffs)};
      if (count_real_roots(f) == r && is_irreducible(f)) {
        MeasureResult meas = measure_of(f, 128, cap);
        Verdict under = b_certified_ge(
            Bound::of_integer(T_max, meas.value.prec()), meas.value);
        if (under == Verdict::Undecided)
          throw PrecisionError(
              "cannot compare a candidate measure with T_max at the precision "
              "cap");
        if (under == Verdict::Holds) {
          std::optional<OrderElement> alpha = match_root(k, eb, f, 256);
          if (alpha) {
            bool take = false;
            if (!best) {
              take = true;
            } else {
              Verdict ge = b_certified_ge(meas.value, *best);
              if (ge == Verdict::Undecided)
                throw PrecisionError(
                    "cannot order two candidate measures at the precision cap");
              take = (ge == Verdict::Fails);  // strictly smaller
            }
            if (take) {
              best = meas.value;
              best_poly = f;
              best_alpha = *alpha;
            }
          }
        }
      }
    }

    int i = d - 1;
    while (i >= 0) {
      a[static_cast<size_t>(i)] += 1;
      if (a[static_cast<size_t>(i)] <= bound[static_cast<size_t>(i)]) break;
      a[static_cast<size_t>(i)] = -bound[static_cast<size_t>(i)];
      --i;
    }
    if (i < 0) done = true;
  }

  if (best) {
    res.found = true;
    res.M = *best;
    res.witness = best_poly;
    res.alpha_coords = best_alpha.coords;
  } else {
    res.found = false;
    res.note = "no generator of the order has measure at most " +
               int_str(T_max) + "; " + res.note;
  }
  return res;
}

nlohmann::ordered_json MinMeasureResult::to_json() const {
  nlohmann::ordered_json j;
  j["found"] = found;
  if (found) {
    j["M"] = M.to_json();
    j["witness"] = witness.to_text();
    nlohmann::ordered_json coords = nlohmann::ordered_json::array();
    for (const BigInt& z : alpha_coords) coords.push_back(int_str(z));
    j["alpha_coords"] = std::move(coords);
  }
  j["candidates"] = candidates;
  j["note"] = note;
  return j;
}

std::vector<InequalityReport> check_field_bounds(const FieldOrder& k,
                                                 const Bound& M_value,
                                                 Prec prec) {
  if (!k.field_disc())
    throw DomainError("field discriminant required for the field bounds");
  const int d = k.degree();
  BigInt absd = boost::multiprecision::abs(*k.field_disc());
  std::string m_text = M_value.is_exact()
                           ? rat_str(*M_value.exact)
                           : ("[" + M_value.iv.lo().str() + ", " +
                              M_value.iv.hi().str() + "]");
  std::string input = "K: " + k.poly().to_text() + "; M = " + m_text;
  Bound absd_b = Bound::of_integer(absd, prec);

  std::vector<InequalityReport> reps;
  reps.push_back(make_report(
      "field-mahler", input,
      b_mul(b_pow(M_value, 2L * d - 2),
            Bound::of_integer(int_pow(BigInt(d), static_cast<unsigned long>(d)),
                              prec)),
      absd_b, prec, "holds for every number field"));
  if (k.reals() == 0)
    reps.push_back(make_report(
        "field-paired", input,
        b_mul(b_pow(M_value, 2L * d - 3),
              Bound::of_integer(
                  int_pow(BigInt(2), static_cast<unsigned long>(d) *
                                         static_cast<unsigned long>(d - 1)),
                  prec)),
        absd_b, prec, "totally complex field"));
  if (d == 2 && k.pairs() == 1)
    reps.push_back(make_report("field-imquad", input, M_value,
                               Bound::of_rational(BigRat(absd, BigInt(4)), prec),
                               prec, "imaginary quadratic field"));
  reps.push_back(make_report("field-upper", input, absd_b, M_value, prec,
                             "upper bound via Minkowski's convex body theorem"));
  return reps;
}

FieldOrder order_from_spec(const nlohmann::json& spec) {
  if (!spec.is_object()) throw ParseError("field spec must be a JSON object");
  for (auto it = spec.begin(); it != spec.end(); ++it) {
    const std::string& key = it.key();
    if (key != "poly" && key != "basis" && key != "disc" && key != "name")
      throw ParseError("unknown field-spec key: " + key);
  }
  if (!spec.contains("poly") || !spec["poly"].is_string())
    throw ParseError("field spec needs a \"poly\" string");
  IntPoly f = IntPoly::parse(spec["poly"].get<std::string>());

  std::optional<RatMatrix> basis;
  if (spec.contains("basis")) {
    if (!spec["basis"].is_array())
      throw ParseError("field-spec basis must be an array of rows");
    RatMatrix m;
    for (const auto& rowj : spec["basis"]) {
      if (!rowj.is_array())
        throw ParseError("field-spec basis must be an array of rows");
      RatVector row;
      for (const auto& v : rowj) {
        if (v.is_number_integer())
          row.push_back(BigRat(BigInt(v.get<long long>())));
        else if (v.is_string())
          row.push_back(parse_rational(v.get<std::string>()));
        else
          throw ParseError("basis entries must be integers or rational strings");
      }
      m.push_back(std::move(row));
    }
    basis = std::move(m);
  }

  std::optional<BigInt> disc;
  if (spec.contains("disc")) {
    const auto& v = spec["disc"];
    if (v.is_number_integer())
      disc = BigInt(v.get<long long>());
    else if (v.is_string())
      disc = BigInt(v.get<std::string>());
    else
      throw ParseError("field-spec disc must be an integer");
  }
  return FieldOrder::build(f, basis, disc);
}

FieldOrder order_from_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open field spec: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("field spec is not valid JSON: ") + e.what());
  }
  return order_from_spec(j);
}

}  // namespace mg
