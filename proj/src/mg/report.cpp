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
#include "mg/report.hpp"

#include <sstream>

namespace mg {

Bound Bound::of_rational(const BigRat& q, Prec p) {
  Bound b;
  b.iv = Interval::exact(q, p);
  b.exact = q;
  return b;
}

Bound Bound::of_integer(const BigInt& n, Prec p) {
  return of_rational(BigRat(n), p);
}

Bound Bound::of_interval(Interval v) {
  Bound b;
  b.iv = std::move(v);
  return b;
}

Bound b_add(const Bound& a, const Bound& b) {
  Prec p = std::max(a.prec(), b.prec());
  if (a.exact && b.exact) return Bound::of_rational(*a.exact + *b.exact, p);
  return Bound::of_interval(a.iv + b.iv);
}

Bound b_mul(const Bound& a, const Bound& b) {
  Prec p = std::max(a.prec(), b.prec());
  if (a.exact && b.exact) return Bound::of_rational(*a.exact * *b.exact, p);
  return Bound::of_interval(a.iv * b.iv);
}

Bound b_sub(const Bound& a, const Bound& b) {
  Prec p = std::max(a.prec(), b.prec());
  if (a.exact && b.exact) return Bound::of_rational(*a.exact - *b.exact, p);
  return Bound::of_interval(a.iv - b.iv);
}

Bound b_div(const Bound& a, const Bound& b) {
  Prec p = std::max(a.prec(), b.prec());
  if (a.exact && b.exact) {
    if (*b.exact == 0) throw DomainError("division by an exact zero bound");
    return Bound::of_rational(*a.exact / *b.exact, p);
  }
  return Bound::of_interval(a.iv / b.iv);
}

Bound b_pow(const Bound& a, long e) {
  if (e < 0) throw DomainError("negative exponent in bound power");
  if (a.exact) return Bound::of_rational(rat_pow(*a.exact, (unsigned long)e), a.prec());
  return Bound::of_interval(a.iv.pow(e));
}

Bound b_sqrt(const Bound& a) {
  if (a.exact && *a.exact >= 0) {
    BigInt rn, rd;
    if (is_perfect_square(numerator(*a.exact), &rn) &&
        is_perfect_square(denominator(*a.exact), &rd))
      return Bound::of_rational(BigRat(rn) / BigRat(rd), a.prec());
  }
  return Bound::of_interval(a.iv.sqrt());
}

Bound b_max_with_one(const Bound& a) {
  if (a.exact)
    return Bound::of_rational(*a.exact < 1 ? BigRat(1) : *a.exact, a.prec());
  return Bound::of_interval(a.iv.max_with_one());
}

Bound b_max(const Bound& a, const Bound& b) {
  Prec p = std::max(a.prec(), b.prec());
  if (a.exact && b.exact)
    return Bound::of_rational(*a.exact < *b.exact ? *b.exact : *a.exact, p);
  return Bound::of_interval(a.iv.max_with(b.iv));
}

Verdict b_certified_ge(const Bound& a, const Bound& b) {
  if (a.exact && b.exact)
    return (*a.exact >= *b.exact) ? Verdict::Holds : Verdict::Fails;
  return a.iv.certified_ge(b.iv);
}

static std::string rat_str(const BigRat& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

nlohmann::ordered_json Bound::to_json() const {
  nlohmann::ordered_json j;
  j["lo"] = iv.lo().str();
  j["hi"] = iv.hi().str();
  if (exact)
    j["exact"] = rat_str(*exact);
  else
    j["exact"] = nullptr;
  return j;
}

nlohmann::ordered_json InequalityReport::to_json() const {
  nlohmann::ordered_json j;
  j["name"] = name;
  j["input"] = input;
  j["lhs"] = lhs.to_json();
  j["rhs"] = rhs.to_json();
  switch (holds) {
    case Verdict::Holds: j["holds"] = true; break;
    case Verdict::Fails: j["holds"] = false; break;
    case Verdict::Undecided: j["holds"] = nullptr; break;
  }
  j["slack"] = slack.to_json();
  j["precision_bits"] = (long)precision_bits;
  if (!note.empty()) j["note"] = note;
  return j;
}

std::string InequalityReport::str() const {
  std::ostringstream os;
  os << name << " [" << input << "] " << to_string(holds);
  if (is_equality())
    os << " (equality)";
  else if (slack.exact)
    os << " slack=" << rat_str(*slack.exact);
  else
    os << " slack in [" << slack.iv.lo().str(8) << ", " << slack.iv.hi().str(8) << "]";
  return os.str();
}

InequalityReport make_report(std::string name, std::string input, Bound lhs,
                             Bound rhs, Prec precision_bits, std::string note) {
  InequalityReport r;
  r.name = std::move(name);
  r.input = std::move(input);
  r.slack = b_sub(lhs, rhs);
  r.holds = b_certified_ge(lhs, rhs);
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.precision_bits = precision_bits;
  r.note = std::move(note);
  return r;
}

} // namespace mg
