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

#include "poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include <nlohmann/json.hpp>

namespace mg {

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<BigInt> r(std::max(c_.size(), o.c_.size()), BigInt(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  std::vector<BigInt> r(std::max(c_.size(), o.c_.size()), BigInt(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return IntPoly();
  std::vector<BigInt> r(c_.size() + o.c_.size() - 1, BigInt(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-() const {
  std::vector<BigInt> r(c_);
  for (BigInt& v : r) v = -v;
  return IntPoly(std::move(r));
}

IntPoly IntPoly::scaled(const BigInt& k) const {
  if (k == 0) return IntPoly();
  std::vector<BigInt> r(c_);
  for (BigInt& v : r) v *= k;
  return IntPoly(std::move(r));
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return IntPoly();
  std::vector<BigInt> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * BigInt(i);
  return IntPoly(std::move(r));
}

BigInt IntPoly::l1_norm() const {
  if (is_zero()) throw DomainError("l1 norm of the zero polynomial");
  BigInt s(0);
  for (const BigInt& v : c_) s += abs(v);
  return s;
}

BigInt IntPoly::content() const {
  BigInt g(0);
  for (const BigInt& v : c_) g = gcd(g, v);
  return abs(g);
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return IntPoly();
  BigInt g = content();
  std::vector<BigInt> r(c_);
  for (BigInt& v : r) v /= g;
  return IntPoly(std::move(r));
}

BigInt IntPoly::eval(const BigInt& x) const {
  BigInt acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigRat IntPoly::eval(const BigRat& x) const {
  BigRat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + BigRat(*it);
  return acc;
}

Interval IntPoly::eval(const Interval& x, Prec p) const {
  Interval acc = Interval::exact(BigInt(0), p);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * x + Interval::exact(*it, p);
  return acc;
}

CInterval IntPoly::eval(const CInterval& x, Prec p) const {
  CInterval acc{Interval::exact(BigInt(0), p), Interval::exact(BigInt(0), p)};
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * x;
    acc.re = acc.re + Interval::exact(*it, p);
  }
  return acc;
}

Cplx IntPoly::eval(const Cplx& x) const {
  Prec p = x.re.prec();
  Cplx acc = Cplx::zero(p);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * x;
    acc.re = acc.re + Real::of(*it, p, MPFR_RNDN);
  }
  return acc;
}

IntPoly IntPoly::reversed() const {
  std::vector<BigInt> r(c_.rbegin(), c_.rend());
  return IntPoly(std::move(r));
}

IntPoly IntPoly::at_neg_x() const {
  std::vector<BigInt> r(c_);
  for (size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
  return IntPoly(std::move(r));
}

std::string IntPoly::to_text() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& v = coeff(i);
    if (v == 0) continue;
    if (!out.empty())
      out += (v > 0) ? "+" : "-";
    else if (v < 0)
      out += "-";
    BigInt a = abs(v);
    if (a != 1 || i == 0) out += a.str();
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

std::string IntPoly::to_json_array() const {
  nlohmann::json arr = nlohmann::json::array();
  static const BigInt kLo = BigInt(std::numeric_limits<long long>::min());
  static const BigInt kHi = BigInt(std::numeric_limits<long long>::max());
  for (const BigInt& v : c_) {
    if (v >= kLo && v <= kHi)
      arr.push_back(static_cast<long long>(v));
    else
      arr.push_back(v.str());
  }
  return arr.dump();
}

namespace {

BigInt parse_big_int(const std::string& s) {
  if (s.empty()) throw ParseError("empty integer literal");
  size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) throw ParseError("sign without digits: '" + s + "'");
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError("invalid integer literal: '" + s + "'");
  return BigInt(s);
}

IntPoly parse_json_coeffs(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad coefficient array: ") + e.what());
  }
  if (!j.is_array()) throw ParseError("coefficient input must be a JSON array");
  std::vector<BigInt> c;
  for (const auto& e : j) {
    if (e.is_number_integer())
      c.emplace_back(e.get<long long>());
    else if (e.is_number_unsigned())
      c.emplace_back(e.get<unsigned long long>());
    else if (e.is_string())
      c.push_back(parse_big_int(e.get<std::string>()));
    else
      throw ParseError("coefficients must be integers or integer strings");
  }
  return IntPoly(std::move(c));
}

constexpr int kMaxExponent = 10000;

IntPoly parse_text_poly(const std::string& raw) {
  std::string s;
  for (char ch : raw)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw ParseError("empty polynomial");

  std::map<int, BigInt> terms;
  size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      if (s[i] == '-') sign = -sign;
      ++i;
    }
    if (i >= s.size()) throw ParseError("dangling sign in '" + raw + "'");

    BigInt coef(1);
    bool saw_coef = false;
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      std::string digits;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
        digits += s[i++];
      coef = BigInt(digits);
      saw_coef = true;
      if (i < s.size() && s[i] == '*') ++i;
    }

    int deg = 0;
    if (i < s.size() && (s[i] == 'x' || s[i] == 'X')) {
      ++i;
      deg = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::string digits;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
          digits += s[i++];
        if (digits.empty()) throw ParseError("missing exponent in '" + raw + "'");
        if (digits.size() > 5) throw ParseError("exponent too large in '" + raw + "'");
        deg = std::stoi(digits);
        if (deg > kMaxExponent) throw ParseError("exponent too large in '" + raw + "'");
      }
    } else if (!saw_coef) {
      throw ParseError("unexpected character '" + std::string(1, s[i]) + "' in '" + raw + "'");
    }

    BigInt& slot = terms[deg];
    slot += (sign < 0) ? -coef : coef;
  }

  int top = terms.empty() ? 0 : terms.rbegin()->first;
  std::vector<BigInt> c(static_cast<size_t>(top) + 1, BigInt(0));
  for (const auto& [d, v] : terms) c[static_cast<size_t>(d)] = v;
  return IntPoly(std::move(c));
}

}  // namespace

IntPoly IntPoly::parse(const std::string& text) {
  size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size() && text[i] == '[') return parse_json_coeffs(text);
  return parse_text_poly(text);
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
  std::vector<BigRat> r(std::max(c_.size(), o.c_.size()), BigRat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return RatPoly(std::move(r));
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
  std::vector<BigRat> r(std::max(c_.size(), o.c_.size()), BigRat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return RatPoly(std::move(r));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
  if (is_zero() || o.is_zero()) return RatPoly();
  std::vector<BigRat> r(c_.size() + o.c_.size() - 1, BigRat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return RatPoly(std::move(r));
}

RatPoly RatPoly::scaled(const BigRat& k) const {
  if (k == 0) return RatPoly();
  std::vector<BigRat> r(c_);
  for (BigRat& v : r) v *= k;
  return RatPoly(std::move(r));
}

BigRat RatPoly::eval(const BigRat& x) const {
  BigRat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPoly RatPoly::mod_monic(const IntPoly& f) const {
  if (!f.is_monic()) throw DomainError("mod_monic needs a monic modulus");
  std::vector<BigRat> r(c_);
  int d = f.degree();
  while (static_cast<int>(r.size()) - 1 >= d) {
    while (!r.empty() && r.back() == 0) r.pop_back();
    int dr = static_cast<int>(r.size()) - 1;
    if (dr < d) break;
    BigRat lead = r.back();
    int shift = dr - d;
    for (int i = 0; i <= d; ++i)
      r[static_cast<size_t>(i + shift)] -= lead * BigRat(f.coeff(i));
  }
  return RatPoly(std::move(r));
}

bool RatPoly::is_integral() const {
  for (const BigRat& v : c_)
    if (denominator(v) != 1) return false;
  return true;
}

IntPoly RatPoly::to_int_poly() const {
  std::vector<BigInt> r;
  for (const BigRat& v : c_) {
    if (denominator(v) != 1) throw DomainError("polynomial is not integral");
    r.push_back(numerator(v));
  }
  return IntPoly(std::move(r));
}

namespace {

/* Pseudo-remainder scaled so its sign matches the rational remainder of
 * a by b (the classical prem times sign(lc(b))^(deg a - deg b + 1)). */
IntPoly signed_prem(const IntPoly& a, const IntPoly& b) {
  const BigInt& lc = b.leading();
  int d = b.degree();
  IntPoly r = a;
  int steps = 0;
  while (!r.is_zero() && r.degree() >= d) {
    int k = r.degree() - d;
    IntPoly shifted = IntPoly::monomial(r.leading(), k) * b;
    r = r.scaled(lc) - shifted;
    ++steps;
  }
  // r equals lc^steps times the rational remainder; undo the sign.
  if (lc < 0 && (steps % 2) == 1) r = -r;
  return r;
}

}  // namespace

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
  IntPoly u = a.is_zero() ? IntPoly() : a.primitive_part();
  IntPoly v = b.is_zero() ? IntPoly() : b.primitive_part();
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    IntPoly r = signed_prem(u, v);
    if (!r.is_zero()) r = r.primitive_part();
    u = v;
    v = r;
  }
  if (u.is_zero()) return u;
  if (u.leading() < 0) u = -u;
  return u;
}

IntPoly squarefree_part(const IntPoly& f) {
  if (f.is_zero()) throw DomainError("squarefree part of zero polynomial");
  IntPoly p = f.primitive_part();
  if (p.degree() == 0) return IntPoly::constant(BigInt(1));
  IntPoly g = poly_gcd(p, p.derivative());
  auto q = try_divide(p, g);
  if (!q) throw DomainError("squarefree division failed");
  IntPoly r = q->primitive_part();
  if (r.leading() < 0) r = -r;
  return r;
}

std::vector<IntPoly> squarefree_decomposition(const IntPoly& f) {
  if (f.is_zero()) throw DomainError("squarefree decomposition of zero polynomial");
  IntPoly p = f.primitive_part();
  if (p.leading() < 0) p = -p;
  std::vector<IntPoly> out;
  if (p.degree() == 0) return out;

  IntPoly a = poly_gcd(p, p.derivative());
  IntPoly b = *try_divide(p, a);
  IntPoly c = *try_divide(p.derivative(), a);
  IntPoly d = c - b.derivative();
  while (b.degree() > 0) {
    IntPoly s = poly_gcd(b, d);
    out.push_back(s);
    b = *try_divide(b, s);
    c = *try_divide(d, s);
    d = c - b.derivative();
  }
  return out;
}

std::optional<IntPoly> try_divide(const IntPoly& f, const IntPoly& g) {
  if (g.is_zero()) throw DomainError("division by zero polynomial");
  if (f.is_zero()) return IntPoly();
  if (f.degree() < g.degree()) return std::nullopt;

  std::vector<BigRat> r;
  for (const BigInt& v : f.coeffs()) r.emplace_back(v);
  int dg = g.degree();
  BigRat glead{g.leading()};
  std::vector<BigRat> q(static_cast<size_t>(f.degree() - dg) + 1, BigRat(0));
  for (int k = f.degree() - dg; k >= 0; --k) {
    BigRat c = r[static_cast<size_t>(k + dg)] / glead;
    q[static_cast<size_t>(k)] = c;
    if (c == 0) continue;
    for (int i = 0; i <= dg; ++i)
      r[static_cast<size_t>(k + i)] -= c * BigRat(g.coeff(i));
  }
  for (const BigRat& v : r)
    if (v != 0) return std::nullopt;
  RatPoly quot{std::move(q)};
  if (!quot.is_integral()) return std::nullopt;
  return quot.to_int_poly();
}

namespace {

int variations(const std::vector<int>& signs) {
  int n = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++n;
    prev = s;
  }
  return n;
}

}  // namespace

int count_real_roots(const IntPoly& f) {
  if (f.is_zero()) throw DomainError("real-root count of zero polynomial");
  IntPoly g = squarefree_part(f);
  if (g.degree() <= 0) return 0;

  std::vector<IntPoly> chain{g, g.derivative()};
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    IntPoly r = -signed_prem(chain[chain.size() - 2], chain.back());
    if (!r.is_zero()) r = r.primitive_part();
    // primitive_part keeps the sign, which the chain depends on
    chain.push_back(r);
    if (chain.back().is_zero()) break;
  }

  std::vector<int> at_pos, at_neg;
  for (const IntPoly& p : chain) {
    if (p.is_zero()) continue;
    int lead = sign_of(p.leading());
    at_pos.push_back(lead);
    at_neg.push_back((p.degree() % 2 == 0) ? lead : -lead);
  }
  return variations(at_neg) - variations(at_pos);
}

}  // namespace mg
