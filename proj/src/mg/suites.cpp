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

#include "suites.hpp"

#include <set>
#include <sstream>

#include "discriminant.hpp"
#include "energy.hpp"
#include "families.hpp"
#include "measure.hpp"
#include "numfield.hpp"
#include "poly.hpp"
#include "rng.hpp"
#include "roots.hpp"

namespace mg {

namespace {

Bound b_rat(const BigRat& q, Prec p) { return Bound::of_rational(q, p); }
Bound b_int(const BigInt& n, Prec p) { return Bound::of_integer(n, p); }

/* Equality demanded, not just >=: a strict surplus is a failure. */
InequalityReport identity_report(std::string name, std::string input,
                                 const Bound& lhs, const Bound& rhs, Prec p) {
  InequalityReport rep =
      make_report(std::move(name), std::move(input), lhs, rhs, p, "identity");
  if (rep.holds == Verdict::Holds && !rep.is_equality()) {
    rep.holds = Verdict::Fails;
    rep.note = "identity: sides differ";
  }
  return rep;
}

std::string fmt_bound(const Bound& b) {
  if (b.exact) return b.exact->str();
  return b.iv.lo().str() + ".." + b.iv.hi().str();
}

std::string fmt_verdict(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "yes";
    case Verdict::Fails: return "no";
    default: return "undecided";
  }
}

void append(SuiteResult& out, std::vector<InequalityReport> reps) {
  for (auto& r : reps) out.checks.push_back(std::move(r));
}

/* Degree-d integer polynomial, |coeff| <= 100, nonzero lead; monic on
 * request.  The draw order is part of the deterministic contract. */
IntPoly random_poly(Rng& g, int d, bool monic) {
  std::vector<BigInt> c(static_cast<size_t>(d) + 1);
  for (int j = 0; j < d; ++j) c[static_cast<size_t>(j)] = BigInt(g.uniform(-100, 100));
  if (monic) {
    c[static_cast<size_t>(d)] = 1;
  } else {
    long lead = 0;
    while (lead == 0) lead = g.uniform(-100, 100);
    c[static_cast<size_t>(d)] = BigInt(lead);
  }
  return IntPoly(std::move(c));
}

}  // namespace

int SuiteResult::holds() const {
  int n = 0;
  for (const auto& r : checks) n += r.holds == Verdict::Holds;
  return n;
}
int SuiteResult::fails() const {
  int n = 0;
  for (const auto& r : checks) n += r.holds == Verdict::Fails;
  return n;
}
int SuiteResult::undecided() const {
  int n = 0;
  for (const auto& r : checks) n += r.holds == Verdict::Undecided;
  return n;
}

nlohmann::ordered_json SuiteResult::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["summary"] = {{"checks", checks.size()},
                  {"holds", holds()},
                  {"fails", fails()},
                  {"undecided", undecided()}};
  j["records"] = records;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : checks) arr.push_back(r.to_json());
  j["checks"] = arr;
  return j;
}

SuiteResult run_identity_suite(const SuiteOptions& opt) {
  SuiteResult out;
  out.suite = "identities";
  const Prec p = opt.precision;

  /* (p+1)x^d - p: all roots strictly inside the unit circle, so the
   * measure is the lead coefficient and everything below is exact. */
  for (long q : {2L, 3L, 5L, 7L}) {
    for (int d = 2; d <= 6; ++d) {
      FamilyMember fm = binomial_family(BigInt(q), d);
      const std::string in = fm.poly.to_text();
      BigInt adsc = abs(discriminant(fm.poly));
      out.checks.push_back(identity_report("binomial-disc", in, b_int(adsc, p),
                                           b_int(fm.predicted_abs_disc, p), p));
      MeasureResult mr = measure_of(fm.poly, p, opt.prec_cap);
      out.checks.push_back(identity_report("binomial-measure", in, mr.value,
                                           b_int(*fm.predicted_measure, p), p));
      if (!mr.value.exact)
        throw PrecisionError("family measure did not certify exactly");
      /* M^{2d-2} d^d / |disc| collapses to ((p+1)/p)^{d-1}. */
      BigRat lhs = rat_pow(BigRat(*mr.value.exact), 2 * d - 2) *
                   BigRat(int_pow(BigInt(d), static_cast<unsigned long>(d))) /
                   BigRat(adsc);
      BigRat rhs = rat_pow(BigRat(q + 1, q), static_cast<unsigned long>(d - 1));
      out.checks.push_back(
          identity_report("binomial-ratio", in, b_rat(lhs, p), b_rat(rhs, p), p));
      append(out, check_l1(fm.poly, p, opt.prec_cap));
    }
  }

  /* Eisenstein family: exact discriminant, measure window M < 3p, and
   * the within-a-constant comparison M^{2d-2} <= (9/(d-1))^{d-1} |disc|
   * showing the exponent cannot be lowered on irreducible inputs. */
  for (long q : {2L, 3L, 5L}) {
    for (int d = 2; d <= 8; ++d) {
      FamilyMember fm = eisenstein_family(BigInt(q), d);
      const std::string in = fm.poly.to_text();
      BigInt adsc = abs(discriminant(fm.poly));
      out.checks.push_back(identity_report("eisenstein-disc", in, b_int(adsc, p),
                                           b_int(fm.predicted_abs_disc, p), p));
      MeasureResult mr = measure_of(fm.poly, p, opt.prec_cap);
      out.checks.push_back(make_report("eisenstein-measure-window", in,
                                       b_int(BigInt(3 * q), p), mr.value, p));
      BigRat cap = rat_pow(BigRat(9, d - 1), static_cast<unsigned long>(d - 1)) *
                   BigRat(adsc);
      out.checks.push_back(make_report("eisenstein-exponent-gap", in,
                                       b_rat(cap, p),
                                       b_pow(mr.value, 2 * d - 2), p));
      append(out, check_l1(fm.poly, p, opt.prec_cap));
    }
  }

  /* |disc(x^d - 1)| = d^d, the all-roots-on-the-circle extreme. */
  for (int d = 2; d <= 20; ++d) {
    std::vector<BigInt> c(static_cast<size_t>(d) + 1, BigInt(0));
    c[0] = -1;
    c.back() = 1;
    IntPoly f(std::move(c));
    out.checks.push_back(identity_report(
        "unit-roots-disc", f.to_text(), b_int(abs(discriminant(f)), p),
        b_int(int_pow(BigInt(d), static_cast<unsigned long>(d)), p), p));
  }

  /* Closed form for x^2 + bx + c with a nonreal pair: M = max(1, c),
   * confirmed against the certified root product. */
  for (long b = -3; b <= 3; ++b) {
    long cmin = (b * b) / 4 + 1;
    for (long cc : {cmin, cmin + 3, cmin + 10}) {
      IntPoly f(std::vector<BigInt>{BigInt(cc), BigInt(b), BigInt(1)});
      BigRat closed = ruppert_quadratic(BigRat(b), BigRat(cc));
      MeasureResult mr = measure_of(f, p, opt.prec_cap);
      out.checks.push_back(identity_report("quadratic-closed-form", f.to_text(),
                                           mr.value, b_rat(closed, p), p));
    }
  }

  /* Dominant trinomial: |disc| >= t^{2d-2} while the measure stays
   * within twice the dominant coefficient, so the discriminant exponent
   * is saturated at linear measure growth. */
  for (auto [d, w] : {std::pair<int, int>{3, 1}, {4, 2}, {5, 1}}) {
    for (long t : {10L, 1000L}) {
      IntPoly f = dominant_trinomial(d, w, t);
      const std::string in = f.to_text();
      out.checks.push_back(make_report(
          "trinomial-disc-growth", in, b_int(abs(discriminant(f)), p),
          b_int(int_pow(BigInt(t), static_cast<unsigned long>(2 * d - 2)), p), p));
      MeasureResult mr = measure_of(f, p, opt.prec_cap);
      out.checks.push_back(make_report("trinomial-measure-linear", in,
                                       b_int(BigInt(32) * d * (BigInt(d) * t + w), p),
                                       mr.value, p));
      append(out, check_l1(f, p, opt.prec_cap));
    }
  }

  out.records["families"] = {{"binomial", 20}, {"eisenstein", 21},
                             {"unit-roots", 19}, {"quadratic-closed-form", 21},
                             {"trinomial", 6}};
  return out;
}

SuiteResult run_inequality_suite(const SuiteOptions& opt) {
  SuiteResult out;
  out.suite = "inequalities";
  const Prec p = opt.precision;
  Rng g(opt.seed);

  /* Random stress for the classical bound; the coefficient-norm window
   * rides along on every input. */
  const int n_random = 1000;
  for (int i = 0; i < n_random; ++i) {
    IntPoly f = random_poly(g, static_cast<int>(g.uniform(2, 8)), false);
    out.checks.push_back(check_mahler_classical(f, p, opt.prec_cap));
    append(out, check_l1(f, p, opt.prec_cap));
  }

  /* a x^d - a: the equality family of the classical bound. */
  int equalities = 0;
  for (long a = 1; a <= 5; ++a) {
    for (int d = 2; d <= 5; ++d) {
      std::vector<BigInt> c(static_cast<size_t>(d) + 1, BigInt(0));
      c[0] = BigInt(-a);
      c.back() = BigInt(a);
      IntPoly f(std::move(c));
      InequalityReport rep = check_mahler_classical(f, p, opt.prec_cap);
      equalities += rep.is_equality();
      out.checks.push_back(std::move(rep));
      append(out, check_l1(f, p, opt.prec_cap));
    }
  }
  out.records["classical-equality-family"] = {{"members", 20},
                                              {"exact-equalities", equalities}};

  /* Monic products of negative-discriminant quadratics and unit-range
   * linear factors: every root above radius 1 arrives as a conjugate
   * pair, so the paired-roots hypothesis holds by construction.  The
   * same inputs feed the reversed discriminant-vs-norm bounds. */
  const int n_paired = 1000;
  for (int i = 0; i < n_paired; ++i) {
    int nq = static_cast<int>(g.uniform(1, 4));
    int nl = static_cast<int>(g.uniform(0, 2));
    IntPoly f = IntPoly::constant(BigInt(1));
    for (int j = 0; j < nq; ++j) {
      long b = g.uniform(-9, 9);
      long cc = (b * b) / 4 + 1 + g.uniform(0, 39);
      f = f * IntPoly(std::vector<BigInt>{BigInt(cc), BigInt(b), BigInt(1)});
    }
    for (int j = 0; j < nl; ++j) {
      long e = g.uniform(-1, 1);
      f = f * IntPoly(std::vector<BigInt>{BigInt(-e), BigInt(1)});
    }
    out.checks.push_back(check_paired_bound(f, BigRat(1), p, opt.prec_cap));
    append(out, check_l1(f, p, opt.prec_cap));
    append(out, check_disc_l1(f, BigRat(1), p, opt.prec_cap));
  }

  /* x^2 + R^2 meets the paired bound with zero slack at every R. */
  int zero_slack = 0;
  for (long R = 1; R <= 100; ++R) {
    IntPoly f(std::vector<BigInt>{BigInt(R) * R, BigInt(0), BigInt(1)});
    InequalityReport rep = check_paired_bound(f, BigRat(1), p, opt.prec_cap);
    zero_slack += rep.is_equality();
    out.checks.push_back(std::move(rep));
    append(out, check_l1(f, p, opt.prec_cap));
    append(out, check_disc_l1(f, BigRat(1), p, opt.prec_cap));
  }
  out.records["circle-family"] = {{"members", 100}, {"zero-slack", zero_slack}};
  out.records["random-classical"] = n_random;
  out.records["random-paired"] = n_paired;
  return out;
}

namespace {

/* Pairable-by-construction configuration: each above-threshold point is
 * partnered by a first-nonzero sign flip, which preserves the exact
 * squared norm; small points come from a fixed palette inside the unit
 * ball.  Coincident points are rerolled so the discriminant stays away
 * from the trivial zero. */
PointConfiguration random_config(Rng& g, int k, int nsmall,
                                 int npair, Prec p) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<std::vector<BigRat>> pts;
    for (int i = 0; i < nsmall; ++i) {
      std::vector<BigRat> v(static_cast<size_t>(k), BigRat(0));
      switch (g.uniform(0, 3)) {
        case 0: break;
        case 1: v[0] = BigRat(1, 2); break;
        case 2: v[0] = BigRat(-1, 2); break;
        default: v[1] = BigRat(1, 2); break;
      }
      pts.push_back(std::move(v));
    }
    for (int i = 0; i < npair; ++i) {
      std::vector<BigRat> v(static_cast<size_t>(k));
      long norm2 = 0;
      while (norm2 < 2) {
        norm2 = 0;
        for (int j = 0; j < k; ++j) {
          long x = g.uniform(-5, 5);
          v[static_cast<size_t>(j)] = BigRat(x);
          norm2 += x * x;
        }
      }
      std::vector<BigRat> w = v;
      for (auto& x : w) {
        if (x != 0) {
          x = -x;
          break;
        }
      }
      pts.push_back(std::move(v));
      pts.push_back(std::move(w));
    }
    std::set<std::vector<BigRat>> seen(pts.begin(), pts.end());
    if (seen.size() == pts.size())
      return PointConfiguration::of_rational(k, std::move(pts), p);
  }
  throw DomainError("could not draw a duplicate-free configuration");
}

}  // namespace

SuiteResult run_energy_suite(const SuiteOptions& opt) {
  SuiteResult out;
  out.suite = "energy";
  const Prec p = opt.precision;
  Rng g(opt.seed);

  /* Random pairable configurations with the full proof trace demanded
   * at every step; trace failures surface as their own check rows. */
  const int n_cfg = 1000;
  const int dims[3] = {2, 3, 5};
  int traces_ok = 0;
  for (int i = 0; i < n_cfg; ++i) {
    int k = dims[g.uniform(0, 2)];
    int nsmall = static_cast<int>(g.uniform(0, 2));
    int npair = static_cast<int>(g.uniform(1, 5));
    PointConfiguration cfg = random_config(g, k, nsmall, npair, p);
    ConfigCheck ck = check_paired_config(cfg, BigRat(1));
    bool tok = ck.trace.all_ok();
    traces_ok += tok;
    out.checks.push_back(std::move(ck.report));
    if (!tok) {
      std::ostringstream in;
      in << "config " << i << " k=" << k << " d=" << (nsmall + 2 * npair);
      out.checks.push_back(make_report("config-trace", in.str(),
                                       b_int(BigInt(0), p), b_int(BigInt(1), p),
                                       p, "proof trace bound violated"));
    }
  }
  out.records["configurations"] = {{"count", n_cfg}, {"traces-ok", traces_ok}};

  /* Sharpness family in the plane, d = 3: one unit point plus the
   * antipodal pair at radius R.  |disc| / M^{2d-3} stays inside a
   * fixed window and approaches (2r)^2 = 4, so the exponent 2d-3 is
   * exactly right; against the weaker exponent 2d-4 the same ratio
   * diverges by at least x50 per decade. */
  auto scales = nlohmann::ordered_json::array();
  BigRat prev_ratio2;
  for (int e = 1; e <= 6; ++e) {
    BigInt R = int_pow(BigInt(10), static_cast<unsigned long>(e));
    std::string in = "sphere-pair family k=2 d=3 r=1 R=" + R.str();
    PointConfiguration cfg = sharpness_family(2, 3, BigRat(1), BigRat(R), p);
    ConfigCheck ck = check_paired_config(cfg, BigRat(1));
    out.checks.push_back(std::move(ck.report));
    EnergyResult en = config_discriminant(cfg);
    Bound m = b_sqrt(config_measure_sq(cfg));
    if (!en.disc.exact || !m.exact)
      throw PrecisionError("sharpness family values did not certify exactly");
    BigRat disc = *en.disc.exact;
    BigRat M = *m.exact;  // R^2 exactly for this family
    BigRat ratio1 = disc / rat_pow(M, 3);
    BigRat ratio2 = disc / rat_pow(M, 2);
    out.checks.push_back(make_report("sharpness-window-upper", in,
                                     b_rat(BigRat(64), p), b_rat(ratio1, p), p));
    out.checks.push_back(make_report("sharpness-window-lower", in,
                                     b_rat(ratio1, p), b_rat(BigRat(39, 10), p), p));
    if (e >= 4) {
      BigRat gap = abs(ratio1 - 4);
      out.checks.push_back(make_report("sharpness-limit-gap", in,
                                       b_rat(BigRat(1, 25), p), b_rat(gap, p), p,
                                       "within 1% of the limit 4"));
    }
    if (e > 1) {
      out.checks.push_back(make_report("sharpness-decade-growth", in,
                                       b_rat(ratio2 / prev_ratio2, p),
                                       b_rat(BigRat(50), p), p,
                                       "ratio against the lowered exponent"));
    }
    prev_ratio2 = ratio2;
    scales.push_back({{"R", R.str()},
                      {"disc-over-M3", ratio1.str()},
                      {"disc-over-M2", ratio2.str()}});
  }
  out.records["sharpness-scales"] = scales;

  /* Configurations built from certified roots must reproduce the exact
   * polynomial discriminant to 1e-9 relative. */
  const int n_agree = 200;
  int agree = 0;
  for (int i = 0; i < n_agree; ++i) {
    IntPoly f = random_poly(g, static_cast<int>(g.uniform(2, 8)), true);
    BigInt adsc = abs(discriminant(f));
    RootSet rs = find_roots(f, p, opt.prec_cap);
    EnergyResult en = config_discriminant(config_from_roots(rs));
    Verdict v;
    if (adsc == 0) {
      v = (en.zero || en.disc.iv.contains_zero()) ? Verdict::Holds
                                                  : Verdict::Fails;
    } else {
      BigRat lo = en.disc.iv.lo().to_rational();
      BigRat hi = en.disc.iv.hi().to_rational();
      BigRat tol = BigRat(adsc) / BigInt(1000000000);
      v = (lo >= BigRat(adsc) - tol && hi <= BigRat(adsc) + tol)
              ? Verdict::Holds
              : Verdict::Fails;
    }
    InequalityReport rep =
        make_report("config-poly-disc", f.to_text(), en.disc, b_int(adsc, p), p,
                    "agreement within 1e-9 relative");
    rep.holds = v;
    agree += v == Verdict::Holds;
    out.checks.push_back(std::move(rep));
  }
  out.records["root-config-agreement"] = {{"count", n_agree}, {"pass", agree}};
  return out;
}

namespace {

void push_generator_checks(SuiteResult& out, const FieldOrder& k,
                           const GeneratorSearch& gs, const std::string& label,
                           int expect, Prec p) {
  std::set<std::string> minpolys;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& rec : gs.records) {
    std::string in = label + " T=" + rec.T.str();
    out.checks.push_back(
        make_report("generator-ratio", in, b_rat(rec.c_K, p), rec.ratio, p));
    if (rec.index && k.field_disc()) {
      out.checks.push_back(identity_report(
          "generator-index-square", in,
          b_rat(BigRat(*rec.index * *rec.index * abs(*k.field_disc())), p),
          b_int(abs(rec.disc_f), p), p));
    }
    bool ok = rec.generates && rec.separation_ok && rec.roots_bounded_ok &&
              rec.ratio_ok && rec.measure_shape_ok;
    out.checks.push_back(make_report("generator-verified", in,
                                     b_int(BigInt(ok ? 1 : 0), p),
                                     b_int(BigInt(1), p), p));
    minpolys.insert(rec.minpoly.to_text());
    arr.push_back(rec.to_json());
  }
  out.checks.push_back(identity_report(
      "generator-distinct", label, b_int(BigInt((long)minpolys.size()), p),
      b_int(BigInt(expect), p), p));
  out.records["generator-searches"].push_back(
      {{"field", label}, {"c", gs.c.str()}, {"records", arr}});
}

}  // namespace

SuiteResult run_field_suite(const SuiteOptions& opt) {
  SuiteResult out;
  out.suite = "fields";
  const Prec p = opt.precision;
  out.records["generator-searches"] = nlohmann::ordered_json::array();

  /* Box searches over five increasing T on four fields, auto side
   * length; every record is re-verified from scratch. */
  const struct { const char* poly; long disc; } gen_fields[] = {
      {"x^2+1", -4}, {"x^2-x+1", -3}, {"x^4+x^3+x^2+x+1", 125}, {"x^3-x-1", -23}};
  std::vector<BigRat> T_list;
  for (long t : {10L, 40L, 70L, 100L, 130L}) T_list.emplace_back(t);
  for (const auto& gf : gen_fields) {
    FieldOrder k = FieldOrder::build(IntPoly::parse(gf.poly), std::nullopt,
                                     BigInt(gf.disc));
    push_generator_checks(out, k, find_generators(k, T_list), gf.poly, 5, p);
  }

  /* The documented square-box instance at fixed c = 2, T = 10 on the
   * Gaussian integers; its record is pinned by the regression tests. */
  {
    FieldOrder qi =
        FieldOrder::build(IntPoly::parse("x^2+1"), std::nullopt, BigInt(-4));
    GeneratorSearch gs = find_generators(qi, {BigRat(10)}, BigRat(2));
    push_generator_checks(out, qi, gs, "x^2+1 c=2", 1, p);
    if (!gs.records.empty())
      out.records["pinned-square-search"] = gs.records[0].to_json();
  }

  /* Real-embedding variant on a real quadratic order. */
  {
    FieldOrder k2 =
        FieldOrder::build(IntPoly::parse("x^2-2"), std::nullopt, BigInt(8));
    std::vector<BigRat> T2{BigRat(10), BigRat(20), BigRat(30)};
    push_generator_checks(out, k2, find_generators_real_variant(k2, T2),
                          "x^2-2 real", 3, p);
  }

  /* Exact minimum measure over generators, then every field-level
   * bound at that minimum.  The eight imaginary quadratic orders
   * include the three where M = |disc|/4 exactly. */
  auto minima = nlohmann::ordered_json::array();
  const struct { const char* poly; long disc; } iq[] = {
      {"x^2-x+1", -3},  {"x^2+1", -4},    {"x^2-x+2", -7},  {"x^2+2", -8},
      {"x^2-x+3", -11}, {"x^2-x+4", -15}, {"x^2-x+5", -19}, {"x^2+5", -20}};
  for (const auto& f : iq) {
    FieldOrder k = FieldOrder::build(IntPoly::parse(f.poly), std::nullopt,
                                     BigInt(f.disc));
    MinMeasureResult mm = compute_M_OK(k, BigInt(6), opt.prec_cap);
    out.checks.push_back(make_report("min-measure-found", f.poly,
                                     b_int(BigInt(mm.found ? 1 : 0), p),
                                     b_int(BigInt(1), p), p));
    if (mm.found) append(out, check_field_bounds(k, mm.M, p));
    auto rec = mm.to_json();
    rec["field"] = f.poly;
    minima.push_back(std::move(rec));
  }

  /* One quartic minimum: the cyclotomic order at conductor five has a
   * degree-four generator of measure one. */
  {
    FieldOrder z5 = FieldOrder::build(IntPoly::parse("x^4+x^3+x^2+x+1"),
                                      std::nullopt, BigInt(125));
    MinMeasureResult mm = compute_M_OK(z5, BigInt(1), opt.prec_cap);
    out.checks.push_back(make_report("min-measure-found", "x^4+x^3+x^2+x+1",
                                     b_int(BigInt(mm.found ? 1 : 0), p),
                                     b_int(BigInt(1), p), p));
    if (mm.found) append(out, check_field_bounds(z5, mm.M, p));
    auto rec = mm.to_json();
    rec["field"] = "x^4+x^3+x^2+x+1";
    minima.push_back(std::move(rec));
  }
  out.records["minimum-measures"] = minima;
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"identities", "inequalities",
                                              "energy", "fields"};
  return names;
}

std::vector<SuiteResult> run_suites(const std::string& which,
                                    const SuiteOptions& opt) {
  std::vector<SuiteResult> out;
  if (which == "all" || which == "identities") out.push_back(run_identity_suite(opt));
  if (which == "all" || which == "inequalities")
    out.push_back(run_inequality_suite(opt));
  if (which == "all" || which == "energy") out.push_back(run_energy_suite(opt));
  if (which == "all" || which == "fields") out.push_back(run_field_suite(opt));
  if (out.empty())
    throw DomainError("unknown suite '" + which +
                      "'; expected all, identities, inequalities, energy, or fields");
  return out;
}

nlohmann::ordered_json suites_json(const std::vector<SuiteResult>& rs,
                                   const SuiteOptions& opt) {
  nlohmann::ordered_json j;
  j["seed"] = opt.seed;
  j["precision_bits"] = static_cast<long>(opt.precision);
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : rs) arr.push_back(r.to_json());
  j["suites"] = arr;
  return j;
}

std::string suites_csv(const std::vector<SuiteResult>& rs) {
  std::ostringstream os;
  os << "suite, check, lhs, rhs, holds, slack\n";
  for (const auto& r : rs) {
    for (const auto& c : r.checks) {
      os << r.suite << ", " << c.name << ", " << fmt_bound(c.lhs) << ", "
         << fmt_bound(c.rhs) << ", " << fmt_verdict(c.holds) << ", "
         << fmt_bound(c.slack) << "\n";
    }
  }
  return os.str();
}

}  // namespace mg
