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
#include "mg/energy.hpp"

#include <algorithm>
#include <sstream>

#include "mg/roots.hpp"

namespace mg {

namespace {

std::string rat_str(const BigRat& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

Prec cfg_prec(const PointConfiguration& cfg) {
  Prec p = 64;
  for (const auto& row : cfg.pts)
    for (const auto& b : row) p = std::max(p, b.prec());
  return p;
}

} // namespace

bool PointConfiguration::exact() const {
  for (const auto& row : pts)
    for (const auto& b : row)
      if (!b.exact) return false;
  return true;
}

Bound PointConfiguration::norm_sq(int i) const {
  const auto& row = pts.at((size_t)i);
  Bound acc = Bound::of_rational(BigRat(0), cfg_prec(*this));
  for (const auto& c : row) acc = b_add(acc, b_mul(c, c));
  return acc;
}

Bound PointConfiguration::dist_sq(int i, int j) const {
  const auto& a = pts.at((size_t)i);
  const auto& b = pts.at((size_t)j);
  Bound acc = Bound::of_rational(BigRat(0), cfg_prec(*this));
  for (int t = 0; t < k; ++t) {
    Bound di = b_sub(a[(size_t)t], b[(size_t)t]);
    acc = b_add(acc, b_mul(di, di));
  }
  return acc;
}

PointConfiguration PointConfiguration::of_rational(
    int k, std::vector<std::vector<BigRat>> rat_pts, Prec p) {
  PointConfiguration cfg;
  cfg.k = k;
  for (auto& row : rat_pts) {
    if ((int)row.size() != k)
      throw ParseError("point dimension does not match k");
    std::vector<Bound> out;
    for (auto& q : row) out.push_back(Bound::of_rational(q, p));
    cfg.pts.push_back(std::move(out));
  }
  if (cfg.d() < 2) throw ParseError("configuration needs at least 2 points");
  return cfg;
}

PointConfiguration PointConfiguration::of_intervals(
    int k, std::vector<std::vector<Interval>> iv_pts) {
  PointConfiguration cfg;
  cfg.k = k;
  for (auto& row : iv_pts) {
    if ((int)row.size() != k)
      throw ParseError("point dimension does not match k");
    std::vector<Bound> out;
    for (auto& v : row) out.push_back(Bound::of_interval(std::move(v)));
    cfg.pts.push_back(std::move(out));
  }
  if (cfg.d() < 2) throw ParseError("configuration needs at least 2 points");
  return cfg;
}

PointConfiguration PointConfiguration::from_json(const nlohmann::json& j,
                                                 Prec p) {
  if (!j.is_object() || !j.contains("k") || !j.contains("points"))
    throw ParseError("configuration needs fields k and points");
  int k = 0;
  try {
    k = j.at("k").get<int>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError("field k must be an integer");
  }
  if (k < 1) throw ParseError("ambient dimension k must be >= 1");
  const auto& arr = j.at("points");
  if (!arr.is_array()) throw ParseError("points must be an array");
  std::vector<std::vector<BigRat>> rows;
  for (const auto& pt : arr) {
    if (!pt.is_array()) throw ParseError("each point must be an array");
    std::vector<BigRat> row;
    for (const auto& e : pt) {
      if (e.is_number_integer()) {
        row.emplace_back(BigInt(e.get<long long>()));
      } else if (e.is_number_unsigned()) {
        row.emplace_back(BigInt(e.get<unsigned long long>()));
      } else if (e.is_string()) {
        row.push_back(parse_rational(e.get<std::string>()));
      } else if (e.is_number_float()) {
        // binary double, taken at face value
        row.push_back(Real::of(e.get<double>(), 64).to_rational());
      } else {
        throw ParseError("coordinate entries must be numbers or strings");
      }
    }
    rows.push_back(std::move(row));
  }
  return of_rational(k, std::move(rows), p);
}

PointConfiguration PointConfiguration::parse(const std::string& text, Prec p) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad configuration JSON: ") + e.what());
  }
  return from_json(j, p);
}

nlohmann::ordered_json PointConfiguration::to_json() const {
  nlohmann::ordered_json j;
  j["k"] = k;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& row : pts) {
    nlohmann::ordered_json pt = nlohmann::ordered_json::array();
    for (const auto& b : row) {
      if (b.exact)
        pt.push_back(rat_str(*b.exact));
      else
        pt.push_back(b.iv.mid().str());
    }
    arr.push_back(std::move(pt));
  }
  j["points"] = std::move(arr);
  return j;
}

Bound config_measure_sq(const PointConfiguration& cfg) {
  Bound acc = Bound::of_rational(BigRat(1), cfg_prec(cfg));
  for (int i = 0; i < cfg.d(); ++i)
    acc = b_mul(acc, b_max_with_one(cfg.norm_sq(i)));
  return acc;
}

Bound config_measure(const PointConfiguration& cfg) {
  return b_sqrt(config_measure_sq(cfg));
}

EnergyResult config_discriminant(const PointConfiguration& cfg) {
  Prec p = cfg_prec(cfg);
  EnergyResult out;
  Bound acc = Bound::of_rational(BigRat(1), p);
  for (int i = 0; i < cfg.d(); ++i)
    for (int j = i + 1; j < cfg.d(); ++j) acc = b_mul(acc, cfg.dist_sq(i, j));
  out.disc = acc;
  out.zero = acc.exact && *acc.exact == 0;
  if (out.zero) return out;
  // -log(disc): upper endpoint is +infinity unless disc is bounded away
  // from zero
  Real lo_e = r_neg(r_log(acc.iv.hi(), MPFR_RNDU));
  Real hi_e = acc.iv.lo().sgn() > 0 ? r_neg(r_log(acc.iv.lo(), MPFR_RNDD))
                                    : Real::pos_inf(p);
  out.e_log = Interval(lo_e, hi_e);
  return out;
}

namespace {

struct NormRange {
  int idx;
  BigRat lo, hi;
  bool exact;
};

bool nr_overlap(const NormRange& a, const NormRange& b) {
  return !(a.hi < b.lo || b.hi < a.lo);
}
bool nr_pairable(const NormRange& a, const NormRange& b) {
  if (a.exact && b.exact) return a.lo == b.lo;
  return nr_overlap(a, b);
}
bool nr_desc(const NormRange& a, const NormRange& b) {
  if (a.hi != b.hi) return a.hi > b.hi;
  if (a.lo != b.lo) return a.lo > b.lo;
  return a.idx < b.idx;
}

} // namespace

ConfigPairing derive_config_pairing(const PointConfiguration& cfg,
                                    std::optional<BigRat> r_opt) {
  int d = cfg.d();
  std::vector<NormRange> ranges;
  ranges.reserve((size_t)d);
  for (int i = 0; i < d; ++i) {
    Bound ns = cfg.norm_sq(i);
    if (ns.exact)
      ranges.push_back({i, *ns.exact, *ns.exact, true});
    else
      ranges.push_back(
          {i, ns.iv.lo().to_rational(), ns.iv.hi().to_rational(), false});
  }

  ConfigPairing out;
  if (r_opt) {
    if (*r_opt < 1) throw DomainError("pairing threshold must be >= 1");
    out.r = *r_opt;
  } else {
    out.auto_r = true;
    BigRat r2(1);
    std::vector<NormRange> sorted = ranges;
    std::sort(sorted.begin(), sorted.end(), nr_desc);
    size_t i = 0;
    while (i < sorted.size()) {
      if (i + 1 < sorted.size() && nr_pairable(sorted[i], sorted[i + 1])) {
        i += 2;
      } else {
        if (sorted[i].hi > r2) r2 = sorted[i].hi;
        i += 1;
      }
    }
    out.r = (r2 <= 1) ? BigRat(1) : rat_sqrt_upper(r2);
    if (out.r < 1) out.r = 1;
  }

  BigRat r2 = out.r * out.r;
  std::vector<NormRange> large;
  for (const NormRange& m : ranges) {
    if (m.lo > r2)
      large.push_back(m);
    else if (m.hi <= r2)
      out.small_indices.push_back(m.idx);
    else
      throw PrecisionError("cannot classify point " + std::to_string(m.idx) +
                           " against the pairing threshold");
  }
  std::sort(large.begin(), large.end(), nr_desc);
  for (size_t i = 0; i < large.size(); i += 2) {
    if (i + 1 >= large.size() || !nr_pairable(large[i], large[i + 1]))
      throw HypothesisError(
          "point of norm above the threshold has no equal-norm partner");
    out.pairs.emplace_back(large[i].idx, large[i + 1].idx);
  }
  return out;
}

bool ProofTrace::all_ok() const {
  auto ok = [](Verdict v) { return v == Verdict::Holds; };
  if (!ok(C0_ok) || !ok(c_dm_ok) || !ok(tail_ok) || !ok(decomposition_ok))
    return false;
  for (const auto& pb : per_pair)
    if (!ok(pb.sep_ok) || !ok(pb.betas_ok) || pb.beta_count != pb.beta_expected)
      return false;
  return true;
}

nlohmann::ordered_json ProofTrace::to_json() const {
  nlohmann::ordered_json j;
  j["C0"] = C0.to_json();
  j["C0_bound"] = C0_bound.to_json();
  j["C0_ok"] = to_string(C0_ok);
  nlohmann::ordered_json pp = nlohmann::ordered_json::array();
  for (const auto& pb : per_pair) {
    nlohmann::ordered_json e;
    e["pair"] = {pb.i, pb.j};
    e["sep_sq"] = pb.sep_sq.to_json();
    e["cap_sq"] = pb.cap_sq.to_json();
    e["sep_ok"] = to_string(pb.sep_ok);
    e["beta_count"] = pb.beta_count;
    e["beta_expected"] = pb.beta_expected;
    e["betas_ok"] = to_string(pb.betas_ok);
    pp.push_back(std::move(e));
  }
  j["per_pair_bounds"] = std::move(pp);
  j["S_sizes"] = S_sizes;
  j["c_dm"] = c_dm.to_json();
  j["c_dm_bound"] = c_dm_bound.to_json();
  j["c_dm_ok"] = to_string(c_dm_ok);
  j["tail_product"] = tail_product.to_json();
  j["tail_ok"] = to_string(tail_ok);
  j["decomposition_ok"] = to_string(decomposition_ok);
  j["all_ok"] = all_ok();
  return j;
}

namespace {

Verdict v_and(Verdict a, Verdict b) {
  if (a == Verdict::Fails || b == Verdict::Fails) return Verdict::Fails;
  if (a == Verdict::Undecided || b == Verdict::Undecided)
    return Verdict::Undecided;
  return Verdict::Holds;
}

/* Consistency of an exact regrouping: exact operands compare as equality,
 * enclosures count as consistent unless provably disjoint. */
Verdict consistent_eq(const Bound& a, const Bound& b) {
  if (a.exact && b.exact)
    return (*a.exact == *b.exact) ? Verdict::Holds : Verdict::Fails;
  bool disjoint = a.iv.hi() < b.iv.lo() || b.iv.hi() < a.iv.lo();
  return disjoint ? Verdict::Fails : Verdict::Holds;
}

} // namespace

ConfigCheck check_paired_config(const PointConfiguration& cfg,
                                std::optional<BigRat> r_opt) {
  int d = cfg.d();
  if (d < 2) throw DomainError("paired-points bound needs at least 2 points");
  if (r_opt && *r_opt < 1)
    throw HypothesisError("pairing threshold must be >= 1");
  Prec p = cfg_prec(cfg);
  long e_main = 2L * d - 3;

  ConfigCheck out;
  EnergyResult en = config_discriminant(cfg);
  Bound msq = config_measure_sq(cfg);
  std::ostringstream inp;
  inp << "config k=" << cfg.k << " d=" << d;

  if (en.zero) {
    out.trivial_zero = true;
    out.pairing.r = r_opt ? *r_opt : BigRat(1);
    out.pairing.auto_r = !r_opt;
    Bound lhs = b_sqrt(b_pow(msq, e_main));
    Bound rhs = Bound::of_rational(BigRat(0), p);
    out.report = make_report("paired-config", inp.str() + " r=" + rat_str(out.pairing.r),
                             lhs, rhs, p, "discriminant is zero; bound is trivial");
    return out;
  }

  out.pairing = derive_config_pairing(cfg, r_opt);
  const BigRat& r = out.pairing.r;
  int m = out.pairing.m();
  inp << " r=" << rat_str(r);
  if (out.pairing.auto_r) inp << " (auto)";

  // verdict from the squared comparison (stays exact for exact input)
  BigRat inv_pow = BigRat(1) / rat_pow(BigRat(2) * r, (unsigned long)(d * (d - 1)));
  Bound lhs_sq = b_pow(msq, e_main);
  Bound rhs = b_mul(Bound::of_rational(inv_pow, p), en.disc);
  Bound rhs_sq = b_pow(rhs, 2);
  Verdict main_v = b_certified_ge(lhs_sq, rhs_sq);

  Bound lhs = b_sqrt(lhs_sq);
  out.report = make_report("paired-config", inp.str(), lhs, rhs, p);
  out.report.holds = main_v;

  // ---- proof trace ----
  ProofTrace& tr = out.trace;

  // relabeled order: pairs by decreasing norm, then the small points
  struct PairRec {
    int a, b;
    Bound nsq; // max of the two members' squared norms
  };
  std::vector<PairRec> pairs;
  for (auto& [x, y] : out.pairing.pairs)
    pairs.push_back({x, y, b_max(cfg.norm_sq(x), cfg.norm_sq(y))});
  std::sort(pairs.begin(), pairs.end(), [](const PairRec& u, const PairRec& v) {
    if (u.nsq.exact && v.nsq.exact) return *u.nsq.exact > *v.nsq.exact;
    return u.nsq.iv.hi().to_rational() > v.nsq.iv.hi().to_rational();
  });

  Bound one = Bound::of_rational(BigRat(1), p);
  Bound four = Bound::of_rational(BigRat(4), p);

  // C0: pairwise squared distances among the small points
  tr.C0 = one;
  const auto& smalls = out.pairing.small_indices;
  for (size_t a = 0; a < smalls.size(); ++a)
    for (size_t b = a + 1; b < smalls.size(); ++b)
      tr.C0 = b_mul(tr.C0, cfg.dist_sq(smalls[a], smalls[b]));
  BigRat two_r = BigRat(2) * r;
  tr.C0_bound = Bound::of_rational(
      rat_pow(two_r, (unsigned long)((d - m) * (d - m - 1))), p);
  tr.C0_ok = b_certified_ge(tr.C0_bound, tr.C0);

  tr.c_dm = b_mul(tr.C0, Bound::of_rational(
                             rat_pow(BigRat(2), (unsigned long)(m * (2 * d - m - 1))), p));
  tr.c_dm_bound =
      Bound::of_rational(rat_pow(two_r, (unsigned long)(d * (d - 1))), p);
  tr.c_dm_ok = b_certified_ge(tr.c_dm_bound, tr.c_dm);

  tr.tail_product = one;
  Bound decomposition = tr.C0;
  int np = (int)pairs.size();
  for (int i = 0; i < np; ++i) {
    const PairRec& pr = pairs[(size_t)i];
    PairBoundRecord rec;
    rec.i = pr.a;
    rec.j = pr.b;
    rec.sep_sq = cfg.dist_sq(pr.a, pr.b);
    rec.cap_sq = b_mul(four, pr.nsq);
    rec.sep_ok = b_certified_ge(rec.cap_sq, rec.sep_sq);
    rec.beta_expected = d - 2 * (i + 1);

    Verdict betas = Verdict::Holds;
    Bound pair_part = rec.sep_sq;
    auto visit_beta = [&](int bidx) {
      ++rec.beta_count;
      Bound da = cfg.dist_sq(pr.a, bidx);
      Bound db = cfg.dist_sq(pr.b, bidx);
      betas = v_and(betas, b_certified_ge(rec.cap_sq, da));
      betas = v_and(betas, b_certified_ge(rec.cap_sq, db));
      pair_part = b_mul(pair_part, b_mul(da, db));
    };
    for (int jj = i + 1; jj < np; ++jj) {
      visit_beta(pairs[(size_t)jj].a);
      visit_beta(pairs[(size_t)jj].b);
    }
    for (int s : smalls) visit_beta(s);
    rec.betas_ok = betas;

    decomposition = b_mul(decomposition, pair_part);
    tr.tail_product =
        b_mul(tr.tail_product, b_pow(pr.nsq, 4L * ((i + 1) - 1)));
    tr.S_sizes.push_back(rec.beta_count);
    tr.per_pair.push_back(std::move(rec));
  }
  tr.tail_ok = b_certified_ge(tr.tail_product, one);
  tr.decomposition_ok = consistent_eq(decomposition, en.disc);
  return out;
}

PointConfiguration sharpness_family(int k, int d, const BigRat& r,
                                    const BigRat& R, Prec p) {
  if (k < 1) throw DomainError("ambient dimension must be >= 1");
  if (d < 2) throw DomainError("family needs at least 2 points");
  if (r <= 0 || R <= r) throw DomainError("family needs R > r > 0");
  int n_fix = d - 2;
  if (k == 1 && n_fix > 2)
    throw DomainError("a 0-sphere offers only two distinct placements");

  std::vector<std::vector<BigRat>> pts;
  // fixed points on the radius-r sphere: rational circle parametrization
  // (1-t^2, 2t)/(1+t^2) at t = 0, 1, 2, ...; distinct by monotone first
  // coordinate
  for (int j = 0; j < n_fix; ++j) {
    std::vector<BigRat> row((size_t)k, BigRat(0));
    if (k == 1) {
      row[0] = (j == 0) ? r : -r;
    } else {
      BigRat t(j);
      BigRat den = BigRat(1) + t * t;
      row[0] = r * (BigRat(1) - t * t) / den;
      row[1] = r * (BigRat(2) * t) / den;
    }
    pts.push_back(std::move(row));
  }
  // the antipodal pair R*e_k, -R*e_k
  for (int sgn : {1, -1}) {
    std::vector<BigRat> row((size_t)k, BigRat(0));
    row[(size_t)k - 1] = BigRat(sgn) * R;
    pts.push_back(std::move(row));
  }
  return PointConfiguration::of_rational(k, std::move(pts), p);
}

PointConfiguration config_from_roots(const RootSet& rs) {
  PointConfiguration cfg;
  cfg.k = 2;
  for (int i = 0; i < rs.degree(); ++i) {
    const CertifiedRoot& e = rs.entry(i);
    if (e.rational) {
      // snapped roots keep exact coordinates; repeated rational roots
      // then collapse the configuration discriminant to an exact zero
      cfg.pts.push_back({Bound::of_rational(*e.rational, rs.precision()),
                         Bound::of_rational(BigRat(0), rs.precision())});
    } else {
      CInterval b = rs.enclosure(i);
      cfg.pts.push_back({Bound::of_interval(b.re), Bound::of_interval(b.im)});
    }
  }
  if (cfg.d() < 2) throw ParseError("configuration needs at least 2 points");
  return cfg;
}

} // namespace mg
