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

#include "../include/mahlergauge.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "mg/energy.hpp"
#include "mg/measure.hpp"
#include "mg/numfield.hpp"
#include "mg/poly.hpp"
#include "mg/roots.hpp"
#include "mg/suites.hpp"

using namespace mg;

struct mg_poly {
  IntPoly p;
};
struct mg_field {
  FieldOrder k;
};

namespace {

thread_local std::string t_last_error;

constexpr long kDefaultPrec = 128;
constexpr long kPrecCap = 4096;

Prec norm_prec(long precision) {
  if (precision == 0) return kDefaultPrec;
  if (precision < 8 || precision > kPrecCap)
    throw DomainError("precision must be between 8 and 4096 bits");
  return static_cast<Prec>(precision);
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(char** slot, const std::string& s) {
  if (slot) *slot = dup_string(s);
}

/* Exceptions cross the C boundary as status codes; the message lands in
 * the thread-local error slot. */
template <typename Fn>
mg_status guarded(Fn&& fn) {
  try {
    fn();
    t_last_error.clear();
    return MG_OK;
  } catch (const Error& e) {
    t_last_error = e.what();
    switch (e.code()) {
      case 2: return MG_ERR_PARSE;
      case 3: return MG_ERR_HYPOTHESIS;
      case 4: return MG_ERR_DOMAIN;
      case 5: return MG_ERR_PRECISION;
      case 6: return MG_ERR_BUDGET;
      default: return MG_ERR_INTERNAL;
    }
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return MG_ERR_INTERNAL;
  }
}

void require(const void* ptr, const char* what) {
  if (!ptr) throw DomainError(std::string("null argument: ") + what);
}

std::optional<BigRat> parse_opt_rational(const char* text) {
  if (!text || !*text) return std::nullopt;
  return parse_rational(text);
}

nlohmann::ordered_json reports_json(const std::vector<InequalityReport>& reps) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : reps) arr.push_back(r.to_json());
  return arr;
}

bool all_hold(const std::vector<InequalityReport>& reps) {
  for (const auto& r : reps)
    if (r.holds != Verdict::Holds) return false;
  return true;
}

nlohmann::ordered_json roots_json(const RootSet& rs) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& e : rs.entries()) {
    nlohmann::ordered_json r;
    r["re"] = e.value.re.str();
    r["im"] = e.value.im.str();
    r["re_approx"] = e.value.re.to_double();
    r["im_approx"] = e.value.im.to_double();
    r["radius"] = e.radius.str();
    r["multiplicity"] = e.multiplicity;
    r["real"] = e.real;
    if (e.rational) r["rational"] = e.rational->str();
    if (e.modulus_sq) r["modulus_sq"] = e.modulus_sq->str();
    arr.push_back(std::move(r));
  }
  return arr;
}

}  // namespace

extern "C" {

const char* mg_version(void) { return "0.1.0"; }

long mg_default_precision(void) { return kDefaultPrec; }

const char* mg_last_error(void) { return t_last_error.c_str(); }

void mg_string_free(char* s) { std::free(s); }

mg_status mg_poly_parse(const char* text, mg_poly** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new mg_poly{IntPoly::parse(text)};
  });
}

void mg_poly_free(mg_poly* p) { delete p; }

mg_status mg_poly_to_text(const mg_poly* p, char** out) {
  return guarded([&] {
    require(p, "poly");
    require(out, "out");
    *out = dup_string(p->p.to_text());
  });
}

int mg_poly_degree(const mg_poly* p) { return p ? p->p.degree() : -1; }

mg_status mg_measure(const mg_poly* p, long precision, char** json_out) {
  return guarded([&] {
    require(p, "poly");
    Prec w = norm_prec(precision);
    MeasureResult mr = measure_of(p->p, w, kPrecCap);
    RootSet rs = find_roots(p->p, w, kPrecCap);
    nlohmann::ordered_json j;
    j["poly"] = p->p.to_text();
    j["value"] = mr.value.to_json();
    j["value_approx"] = mr.value.iv.lo().to_double();
    j["l1_lower"] = mr.l1_lower.str();
    j["l1_upper"] = mr.l1_upper.str();
    j["precision_bits"] = static_cast<long>(w);
    j["roots"] = roots_json(rs);
    emit(json_out, j.dump(2));
  });
}

mg_status mg_check(const mg_poly* p, const char* which, const char* r_text,
                   long precision, char** json_out, int* holds_out) {
  return guarded([&] {
    require(p, "poly");
    require(which, "which");
    Prec w = norm_prec(precision);
    std::optional<BigRat> r = parse_opt_rational(r_text);
    std::vector<InequalityReport> reps;
    std::string subject(which);
    if (subject == "mahler") {
      reps.push_back(check_mahler_classical(p->p, w, kPrecCap));
    } else if (subject == "paired") {
      reps.push_back(check_paired_bound(p->p, r, w, kPrecCap));
    } else if (subject == "l1") {
      reps = check_l1(p->p, w, kPrecCap);
    } else if (subject == "cor15") {
      reps = check_disc_l1(p->p, r, w, kPrecCap);
    } else {
      throw DomainError("unknown check '" + subject +
                        "'; expected mahler, paired, l1, or cor15");
    }
    if (holds_out) *holds_out = all_hold(reps) ? 1 : 0;
    emit(json_out, reports_json(reps).dump(2));
  });
}

mg_status mg_energy_check(const char* config_json, const char* r_text,
                          long precision, char** json_out, int* holds_out) {
  return guarded([&] {
    require(config_json, "config_json");
    Prec w = norm_prec(precision);
    PointConfiguration cfg = PointConfiguration::parse(config_json, w);
    ConfigCheck ck = check_paired_config(cfg, parse_opt_rational(r_text));
    nlohmann::ordered_json j;
    j["report"] = ck.report.to_json();
    j["trace"] = ck.trace.to_json();
    nlohmann::ordered_json pairing;
    pairing["r"] = ck.pairing.r.str();
    pairing["auto_r"] = ck.pairing.auto_r;
    auto pairs = nlohmann::ordered_json::array();
    for (auto [a, b] : ck.pairing.pairs) pairs.push_back({a, b});
    pairing["pairs"] = pairs;
    pairing["small_indices"] = ck.pairing.small_indices;
    j["pairing"] = pairing;
    j["trivial_zero"] = ck.trivial_zero;
    if (holds_out) *holds_out = ck.report.holds == Verdict::Holds ? 1 : 0;
    emit(json_out, j.dump(2));
  });
}

mg_status mg_field_from_spec(const char* spec_json, mg_field** out) {
  return guarded([&] {
    require(spec_json, "spec_json");
    require(out, "out");
    nlohmann::json spec;
    try {
      spec = nlohmann::json::parse(spec_json);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("field spec: ") + e.what());
    }
    *out = new mg_field{order_from_spec(spec)};
  });
}

void mg_field_free(mg_field* k) { delete k; }

mg_status mg_field_info(const mg_field* k, char** json_out) {
  return guarded([&] {
    require(k, "field");
    const FieldOrder& K = k->k;
    nlohmann::ordered_json j;
    j["poly"] = K.poly().to_text();
    j["degree"] = K.degree();
    j["real_embeddings"] = K.reals();
    j["conjugate_pairs"] = K.pairs();
    j["disc"] = K.disc().str();
    if (K.field_disc()) j["field_disc"] = K.field_disc()->str();
    j["power_basis"] = K.power_basis();
    MinkowskiLattice lat = minkowski_lattice(K);
    j["covolume"] = lat.covolume.lo().str() + ".." + lat.covolume.hi().str();
    emit(json_out, j.dump(2));
  });
}

mg_status mg_field_search_generators(const mg_field* k, const char* T_csv,
                                     const char* c_text, int real_variant,
                                     char** json_out) {
  return guarded([&] {
    require(k, "field");
    require(T_csv, "T_csv");
    std::vector<BigRat> T_list;
    std::string s(T_csv);
    size_t pos = 0;
    while (pos <= s.size()) {
      size_t next = s.find(',', pos);
      if (next == std::string::npos) next = s.size();
      std::string tok = s.substr(pos, next - pos);
      if (!tok.empty()) T_list.push_back(parse_rational(tok));
      pos = next + 1;
    }
    if (T_list.empty()) throw DomainError("empty T list");
    std::optional<BigRat> c = parse_opt_rational(c_text);
    GeneratorSearch gs = real_variant
                             ? find_generators_real_variant(k->k, T_list, c)
                             : find_generators(k->k, T_list, c);
    nlohmann::ordered_json j;
    j["c"] = gs.c.str();
    auto arr = nlohmann::ordered_json::array();
    for (const auto& rec : gs.records) arr.push_back(rec.to_json());
    j["records"] = arr;
    j["notices"] = gs.notices;
    emit(json_out, j.dump(2));
  });
}

mg_status mg_field_min_measure(const mg_field* k, const char* T_max_text,
                               char** json_out) {
  return guarded([&] {
    require(k, "field");
    require(T_max_text, "T_max");
    BigInt T_max;
    try {
      T_max = BigInt(T_max_text);
    } catch (const std::exception&) {
      throw ParseError(std::string("not an integer: ") + T_max_text);
    }
    MinMeasureResult mm = compute_M_OK(k->k, T_max);
    emit(json_out, mm.to_json().dump(2));
  });
}

mg_status mg_field_check_bounds(const mg_field* k, const char* M_text,
                                long precision, char** json_out,
                                int* holds_out) {
  return guarded([&] {
    require(k, "field");
    require(M_text, "M");
    Prec w = norm_prec(precision);
    Bound M = Bound::of_rational(parse_rational(M_text), w);
    std::vector<InequalityReport> reps = check_field_bounds(k->k, M, w);
    if (holds_out) *holds_out = all_hold(reps) ? 1 : 0;
    emit(json_out, reports_json(reps).dump(2));
  });
}

mg_status mg_repro(const char* which, unsigned long long seed, long precision,
                   char** json_out, char** csv_out, int* holds_out) {
  return guarded([&] {
    require(which, "which");
    SuiteOptions opt;
    opt.seed = seed;
    opt.precision = norm_prec(precision);
    std::vector<SuiteResult> rs = run_suites(which, opt);
    bool ok = true;
    for (const auto& r : rs) ok = ok && r.fails() == 0 && r.undecided() == 0;
    if (holds_out) *holds_out = ok ? 1 : 0;
    emit(json_out, suites_json(rs, opt).dump(2));
    emit(csv_out, suites_csv(rs));
  });
}

}  // extern "C"
