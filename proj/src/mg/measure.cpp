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
#include "mg/measure.hpp"

#include <functional>
#include <sstream>

#include "mg/discriminant.hpp"

namespace mg {

namespace {

std::string rat_str(const BigRat& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

/* Re-derives the roots at doubling precision until every report in the
 * batch is decided or the cap is reached. Ambiguous profile classification
 * (PrecisionError) escalates like an undecided verdict. */
std::vector<InequalityReport>
run_escalating(const IntPoly& f, Prec start, Prec cap,
               const std::function<std::vector<InequalityReport>(const RootSet&)>& body) {
  Prec w = start;
  for (;;) {
    RootSet rs = find_roots(f, w, cap);
    w = std::max(w, rs.precision());
    bool at_cap = w >= cap;
    std::vector<InequalityReport> reps;
    bool decided = true;
    try {
      reps = body(rs);
      for (const auto& r : reps)
        if (r.holds == Verdict::Undecided) decided = false;
    } catch (const PrecisionError&) {
      if (at_cap) throw;
      decided = false;
    }
    if (decided || at_cap) return reps;
    w *= 2;
  }
}

InequalityReport
run_escalating_one(const IntPoly& f, Prec start, Prec cap,
                   const std::function<InequalityReport(const RootSet&)>& body) {
  auto out = run_escalating(f, start, cap, [&](const RootSet& rs) {
    return std::vector<InequalityReport>{body(rs)};
  });
  return out.front();
}

/* a0*x^d + ad with |a0| = |ad| > 0: the equality family of the classical
 * bound. */
bool is_two_term_equal_ends(const IntPoly& f) {
  int d = f.degree();
  if (d < 2) return false;
  if (f.coeff(0) == 0) return false;
  for (int i = 1; i < d; ++i)
    if (f.coeff(i) != 0) return false;
  return abs(f.coeff(0)) == abs(f.coeff(d));
}

} // namespace

MeasureResult mahler_measure(const IntPoly& f, const RootSet& rs) {
  if (!(rs.source() == f))
    throw DomainError("root set does not belong to this polynomial");
  int d = rs.degree();
  Prec w = rs.precision();
  BigInt lead = abs(f.coeff(d));
  BigInt tail = abs(f.coeff(0));

  MeasureResult out;
  out.l1_upper = f.l1_norm();
  out.l1_lower = BigRat(out.l1_upper) / BigRat(int_pow(BigInt(2), (unsigned long)d));

  const auto& es = rs.entries();
  int n = (int)es.size();

  /* All-outside fast path: every |root| >= 1 certified, so the product of
   * moduli telescopes to |tail/lead| by Vieta. */
  bool all_outside = n > 0;
  for (int i = 0; i < n && all_outside; ++i)
    if (rs.modulus_sq_range(i).first < 1) all_outside = false;
  if (all_outside) {
    out.value = Bound::of_integer(tail, w);
    return out;
  }

  BigRat exact_part(lead);
  std::vector<Interval> float_parts;
  std::vector<bool> done((size_t)n, false);
  for (int i = 0; i < n; ++i) {
    if (done[(size_t)i]) continue;
    const CertifiedRoot& e = es[(size_t)i];
    auto range = rs.modulus_sq_range(i);
    if (e.conj >= 0) {
      int j = e.conj;
      done[(size_t)i] = done[(size_t)j] = true;
      if (range.second <= 1) continue; // pair inside or on the circle
      if (e.modulus_sq) {
        exact_part *= *e.modulus_sq; // pair contributes |root|^2 exactly
        continue;
      }
      Interval m = rs.modulus_interval(i, w);
      float_parts.push_back(m.max_with_one());
      float_parts.push_back(rs.modulus_interval(j, w).max_with_one());
      continue;
    }
    done[(size_t)i] = true;
    if (range.second <= 1) continue;
    if (e.rational) {
      exact_part *= abs(*e.rational);
      continue;
    }
    if (range.first >= 1) {
      float_parts.push_back(rs.modulus_interval(i, w));
      continue;
    }
    float_parts.push_back(rs.modulus_interval(i, w).max_with_one());
  }

  if (float_parts.empty()) {
    out.value = Bound::of_rational(exact_part, w);
    return out;
  }
  Interval acc = Interval::exact(exact_part, w);
  for (const auto& m : float_parts) acc = acc * m;
  out.value = Bound::of_interval(acc);
  return out;
}

MeasureResult measure_of(const IntPoly& f, Prec start_prec, Prec prec_cap) {
  RootSet rs = find_roots(f, start_prec, prec_cap);
  return mahler_measure(f, rs);
}

InequalityReport check_mahler_classical(const IntPoly& f, Prec start_prec,
                                        Prec prec_cap) {
  int d = f.degree();
  if (d < 2) throw DomainError("classical bound needs degree >= 2");
  BigInt disc = discriminant(f);
  BigRat rhs_q = BigRat(abs(disc)) / rat_pow(BigRat(d), (unsigned long)d);
  bool two_term = is_two_term_equal_ends(f);
  std::string input = "f=" + f.to_text();

  return run_escalating_one(f, start_prec, prec_cap, [&](const RootSet& rs) {
    Prec w = rs.precision();
    Bound lhs = b_pow(mahler_measure(f, rs).value, 2L * d - 2);
    Bound rhs = Bound::of_rational(rhs_q, w);
    InequalityReport rep = make_report("mahler-classical", input, lhs, rhs, w);
    if (rep.is_equality()) {
      if (two_term) {
        rep.note = "equality; two-term shape a0*x^d+ad with |a0|=|ad|";
      } else {
        rep.holds = Verdict::Fails;
        rep.note = "certified equality outside the two-term equality family";
      }
    } else if (two_term) {
      if (rep.slack.is_exact()) {
        rep.holds = Verdict::Fails;
        rep.note = "two-term shape with |a0|=|ad| but no equality";
      } else {
        // The equality family must resolve exactly; force escalation.
        rep.holds = Verdict::Undecided;
      }
    }
    return rep;
  });
}

InequalityReport check_paired_bound(const IntPoly& f, std::optional<BigRat> r,
                                    Prec start_prec, Prec prec_cap) {
  int d = f.degree();
  if (d < 2) throw DomainError("paired-roots bound needs degree >= 2");
  if (!f.is_monic())
    throw HypothesisError("paired-roots bound requires a monic polynomial");
  if (r && *r < 1) throw HypothesisError("pairing threshold must be >= 1");
  BigInt disc = discriminant(f);
  std::string input = "f=" + f.to_text();

  if (disc == 0) {
    return run_escalating_one(f, start_prec, prec_cap, [&](const RootSet& rs) {
      Prec w = rs.precision();
      Bound lhs = b_pow(mahler_measure(f, rs).value, 2L * d - 3);
      Bound rhs = Bound::of_rational(BigRat(0), w);
      return make_report("paired", input + "; r=" + (r ? rat_str(*r) : "auto"),
                         lhs, rhs, w, "discriminant is zero; bound is trivial");
    });
  }

  return run_escalating_one(f, start_prec, prec_cap, [&](const RootSet& rs) {
    PairedProfile prof = derive_profile(rs, r);
    Prec w = rs.precision();
    Bound lhs = b_pow(mahler_measure(f, rs).value, 2L * d - 3);
    BigRat denom = rat_pow(BigRat(2) * prof.r, (unsigned long)(d * (d - 1)));
    Bound rhs = Bound::of_rational(BigRat(abs(disc)) / denom, w);
    std::string inp = input + "; r=" + rat_str(prof.r) + (prof.auto_r ? " (auto)" : "");
    return make_report("paired", inp, lhs, rhs, w);
  });
}

BigRat ruppert_quadratic(const BigRat& b, const BigRat& c) {
  BigRat disc = b * b - BigRat(4) * c;
  if (disc >= 0)
    throw DomainError("closed form needs a nonreal conjugate root pair");
  BigRat m = (b * b - disc) / BigRat(4); // (b^2 + |disc|)/4, here equal to c
  return m < 1 ? BigRat(1) : m;
}

std::vector<InequalityReport> check_l1(const IntPoly& f, Prec start_prec,
                                       Prec prec_cap) {
  int d = f.degree();
  if (d < 1) throw DomainError("coefficient-norm window needs degree >= 1");
  BigInt l1 = f.l1_norm();
  BigRat lower = BigRat(l1) / BigRat(int_pow(BigInt(2), (unsigned long)d));
  std::string input = "f=" + f.to_text();

  return run_escalating(f, start_prec, prec_cap, [&](const RootSet& rs) {
    Prec w = rs.precision();
    Bound m = mahler_measure(f, rs).value;
    std::vector<InequalityReport> reps;
    reps.push_back(make_report("l1-lower", input, m,
                               Bound::of_rational(lower, w), w));
    reps.push_back(make_report("l1-upper", input, Bound::of_integer(l1, w), m, w));
    return reps;
  });
}

std::vector<InequalityReport> check_disc_l1(const IntPoly& f,
                                            std::optional<BigRat> r,
                                            Prec start_prec, Prec prec_cap) {
  int d = f.degree();
  if (d < 2) throw DomainError("discriminant-norm bound needs degree >= 2");
  if (!f.is_monic())
    throw HypothesisError("discriminant-norm bound requires a monic polynomial");
  if (r && *r < 1) throw HypothesisError("pairing threshold must be >= 1");
  BigInt disc = discriminant(f);
  BigRat adisc(abs(disc));
  BigRat l1(f.l1_norm());
  std::string input = "f=" + f.to_text();
  Prec w = start_prec;

  std::vector<InequalityReport> reps;
  BigRat threshold(1);
  bool auto_r = !r.has_value();
  std::string note;
  if (disc == 0) {
    if (r) threshold = *r;
    note = "discriminant is zero; bound is trivial";
  } else {
    RootSet rs = find_roots(f, start_prec, prec_cap);
    w = std::max(w, rs.precision());
    PairedProfile prof = [&]() {
      for (;;) {
        try {
          return derive_profile(rs, r);
        } catch (const PrecisionError&) {
          if (rs.precision() >= prec_cap) throw;
          rs = find_roots(f, rs.precision() * 2, prec_cap);
          w = std::max(w, rs.precision());
        }
      }
    }();
    threshold = prof.r;
    auto_r = prof.auto_r;
  }

  BigRat main_lhs = rat_pow(BigRat(2) * threshold, (unsigned long)(d * (d - 1))) *
                    rat_pow(l1, (unsigned long)(2 * d - 3));
  std::string inp = input + "; r=" + rat_str(threshold) + (auto_r ? " (auto)" : "");
  reps.push_back(make_report("disc-l1", inp, Bound::of_rational(main_lhs, w),
                             Bound::of_rational(adisc, w), w, note));

  BigRat side_lhs = rat_pow(BigRat(d), (unsigned long)d) *
                    rat_pow(l1, (unsigned long)(2 * d - 2));
  reps.push_back(make_report("disc-l1-mahler", input,
                             Bound::of_rational(side_lhs, w),
                             Bound::of_rational(adisc, w), w));
  return reps;
}

} // namespace mg
