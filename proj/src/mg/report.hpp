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
#ifndef MG_REPORT_HPP
#define MG_REPORT_HPP

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "mg/interval.hpp"

namespace mg {

/* A certified value: always an enclosure, and an exact rational whenever the
 * computation stayed in rational arithmetic end to end. */
struct Bound {
  Interval iv;
  std::optional<BigRat> exact;

  static Bound of_rational(const BigRat& q, Prec p);
  static Bound of_integer(const BigInt& n, Prec p);
  static Bound of_interval(Interval v);

  bool is_exact() const { return exact.has_value(); }
  Prec prec() const { return iv.prec(); }
  nlohmann::ordered_json to_json() const;
};

Bound b_add(const Bound& a, const Bound& b);
Bound b_mul(const Bound& a, const Bound& b);
Bound b_sub(const Bound& a, const Bound& b);
Bound b_div(const Bound& a, const Bound& b); // b must exclude zero
Bound b_pow(const Bound& a, long e);         // e >= 0
Bound b_sqrt(const Bound& a);                // exact only for perfect squares
Bound b_max_with_one(const Bound& a);
Bound b_max(const Bound& a, const Bound& b);

/* Holds when a >= b is certified; exact operands never come back Undecided. */
Verdict b_certified_ge(const Bound& a, const Bound& b);

/* One checked inequality, oriented as lhs >= rhs, slack = lhs - rhs.
 * holds is three-valued; Undecided means the precision cap was reached
 * without separating the bounds. */
struct InequalityReport {
  std::string name;
  std::string input;
  Bound lhs;
  Bound rhs;
  Verdict holds = Verdict::Undecided;
  Bound slack;
  Prec precision_bits = 0;
  std::string note; // optional free-form flag, e.g. the equality case

  bool is_equality() const {
    return slack.exact.has_value() && *slack.exact == 0;
  }
  /* Keys: name, input, lhs, rhs, holds, slack, precision_bits; holds is
   * true / false / null (null = undecided at the precision cap); "note"
   * is appended only when set. */
  nlohmann::ordered_json to_json() const;
  std::string str() const;
};

InequalityReport make_report(std::string name, std::string input, Bound lhs,
                             Bound rhs, Prec precision_bits,
                             std::string note = "");

} // namespace mg

#endif
