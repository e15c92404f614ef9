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

/* Command-line front end.  All mathematics goes through the C API; this
 * file only shuffles text, files, flags, and exit codes.
 *
 * Exit codes: 0 checked statement holds (or informational command
 * succeeded), 1 check failed or was undecided, 2 usage / parse / I/O
 * problem, 3 input violates a theorem hypothesis. */

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mahlergauge.h"
#include "nlohmann/json.hpp"

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitUsage = 2;
constexpr int kExitHypothesis = 3;

struct StringGuard {
  char* s = nullptr;
  ~StringGuard() { mg_string_free(s); }
  char** slot() { return &s; }
  std::string str() const { return s ? s : ""; }
};

struct PolyGuard {
  mg_poly* p = nullptr;
  ~PolyGuard() { mg_poly_free(p); }
};

struct FieldGuard {
  mg_field* k = nullptr;
  ~FieldGuard() { mg_field_free(k); }
};

int fail_with(mg_status st) {
  std::fprintf(stderr, "error: %s\n", mg_last_error());
  switch (st) {
    case MG_ERR_PARSE:
    case MG_ERR_DOMAIN: return kExitUsage;
    case MG_ERR_HYPOTHESIS: return kExitHypothesis;
    default: return kExitFails;  // precision, budget, internal
  }
}

/* --precision beats MAHLER_GAUGE_PRECISION beats the built-in 128. */
long resolve_precision(long flag_value, bool flag_set, bool* bad_env) {
  *bad_env = false;
  if (flag_set) return flag_value;
  const char* env = std::getenv("MAHLER_GAUGE_PRECISION");
  if (!env || !*env) return 0;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (!end || *end != '\0' || v <= 0) {
    *bad_env = true;
    return 0;
  }
  return v;
}

bool read_file(const std::string& path, std::string* out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  *out = ss.str();
  return true;
}

bool write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << content;
  return out.good();
}

int cmd_measure(const std::string& poly_text, long precision) {
  PolyGuard poly;
  mg_status st = mg_poly_parse(poly_text.c_str(), &poly.p);
  if (st != MG_OK) return fail_with(st);
  StringGuard json;
  st = mg_measure(poly.p, precision, json.slot());
  if (st != MG_OK) return fail_with(st);
  auto j = nlohmann::json::parse(json.str());
  std::printf("poly: %s\n", j["poly"].get<std::string>().c_str());
  if (j["value"]["exact"].is_string())
    std::printf("M = %s (exact)\n", j["value"]["exact"].get<std::string>().c_str());
  else
    std::printf("M ~= %.10f\n", j["value_approx"].get<double>());
  std::printf("enclosure: [%s, %s] at %ld bits\n",
              j["value"]["lo"].get<std::string>().c_str(),
              j["value"]["hi"].get<std::string>().c_str(),
              j["precision_bits"].get<long>());
  std::printf("window: 2^-d * l1 = %s <= M <= l1 = %s\n",
              j["l1_lower"].get<std::string>().c_str(),
              j["l1_upper"].get<std::string>().c_str());
  std::printf("roots:\n");
  for (const auto& r : j["roots"]) {
    double re = r["re_approx"].get<double>();
    double im = r["im_approx"].get<double>();
    std::string line;
    char buf[96];
    if (r["real"].get<bool>()) {
      std::snprintf(buf, sizeof buf, "  %.10f", re);
    } else {
      std::snprintf(buf, sizeof buf, "  %.10f %c %.10fi", re,
                    im < 0 ? '-' : '+', im < 0 ? -im : im);
    }
    line = buf;
    if (r.contains("rational")) line += " (rational)";
    int mult = r["multiplicity"].get<int>();
    if (mult > 1) line += " x" + std::to_string(mult);
    std::printf("%s\n", line.c_str());
  }
  return kExitHolds;
}

int cmd_check(const std::string& subject, const std::string& poly_text,
              const std::string& r_text, long precision) {
  PolyGuard poly;
  mg_status st = mg_poly_parse(poly_text.c_str(), &poly.p);
  if (st != MG_OK) return fail_with(st);
  StringGuard json;
  int holds = 0;
  st = mg_check(poly.p, subject.c_str(), r_text.empty() ? nullptr : r_text.c_str(),
                precision, json.slot(), &holds);
  if (st != MG_OK) return fail_with(st);
  std::printf("%s\n", json.str().c_str());
  return holds ? kExitHolds : kExitFails;
}

int cmd_energy(const std::string& config_path, const std::string& r_text,
               long precision) {
  std::string config;
  if (!read_file(config_path, &config)) {
    std::fprintf(stderr, "error: cannot read %s\n", config_path.c_str());
    return kExitUsage;
  }
  StringGuard json;
  int holds = 0;
  mg_status st = mg_energy_check(config.c_str(),
                                 r_text.empty() ? nullptr : r_text.c_str(),
                                 precision, json.slot(), &holds);
  if (st != MG_OK) return fail_with(st);
  std::printf("%s\n", json.str().c_str());
  return holds ? kExitHolds : kExitFails;
}

int cmd_field(const std::string& action, const std::string& spec_path,
              std::vector<std::string> T_list, int count,
              const std::string& c_text, const std::string& T_max,
              const std::string& M_text, long precision) {
  std::string spec;
  if (!read_file(spec_path, &spec)) {
    std::fprintf(stderr, "error: cannot read %s\n", spec_path.c_str());
    return kExitUsage;
  }
  FieldGuard field;
  mg_status st = mg_field_from_spec(spec.c_str(), &field.k);
  if (st != MG_OK) return fail_with(st);

  if (action == "info") {
    StringGuard json;
    st = mg_field_info(field.k, json.slot());
    if (st != MG_OK) return fail_with(st);
    std::printf("%s\n", json.str().c_str());
    return kExitHolds;
  }

  if (action == "search-gen" || action == "search-gen-real") {
    if (T_list.empty()) T_list.push_back("10");
    /* --count n extends the last T in steps of 30 up to n values. */
    while (count > static_cast<int>(T_list.size())) {
      long last = std::strtol(T_list.back().c_str(), nullptr, 10);
      T_list.push_back(std::to_string(last + 30));
    }
    std::string csv;
    for (size_t i = 0; i < T_list.size(); ++i) {
      if (i) csv += ",";
      csv += T_list[i];
    }
    StringGuard json;
    st = mg_field_search_generators(field.k, csv.c_str(),
                                    c_text.empty() ? nullptr : c_text.c_str(),
                                    action == "search-gen-real" ? 1 : 0,
                                    json.slot());
    if (st != MG_OK) return fail_with(st);
    std::printf("%s\n", json.str().c_str());
    auto j = nlohmann::json::parse(json.str());
    for (const auto& rec : j["records"]) {
      bool ok = rec["generates"].get<bool>() && rec["separation_ok"].get<bool>() &&
                rec["roots_bounded_ok"].get<bool>() && rec["ratio_ok"].get<bool>() &&
                rec["measure_shape_ok"].get<bool>();
      if (!ok) return kExitFails;
    }
    return kExitHolds;
  }

  if (action == "min-mahler") {
    StringGuard json;
    st = mg_field_min_measure(field.k, T_max.c_str(), json.slot());
    if (st != MG_OK) return fail_with(st);
    std::printf("%s\n", json.str().c_str());
    return kExitHolds;
  }

  if (action == "check-bounds") {
    std::string m = M_text;
    if (m.empty()) {
      /* No measure given: evaluate the bounds at the exact minimum over
       * generators, searched up to --T-max. */
      StringGuard mm_json;
      st = mg_field_min_measure(field.k, T_max.c_str(), mm_json.slot());
      if (st != MG_OK) return fail_with(st);
      auto mm = nlohmann::json::parse(mm_json.str());
      if (!mm["found"].get<bool>() || !mm["M"]["exact"].is_string()) {
        std::fprintf(stderr,
                     "error: no generator with measure <= %s; raise --T-max "
                     "or pass --M\n",
                     T_max.c_str());
        return kExitFails;
      }
      m = mm["M"]["exact"].get<std::string>();
    }
    StringGuard json;
    int holds = 0;
    st = mg_field_check_bounds(field.k, m.c_str(), precision, json.slot(), &holds);
    if (st != MG_OK) return fail_with(st);
    std::printf("%s\n", json.str().c_str());
    return holds ? kExitHolds : kExitFails;
  }

  std::fprintf(stderr, "error: unknown field action '%s'\n", action.c_str());
  return kExitUsage;
}

int cmd_repro(const std::string& suite, unsigned long long seed, long precision,
              const std::string& out_path, const std::string& csv_path) {
  StringGuard json, csv;
  int holds = 0;
  mg_status st = mg_repro(suite.c_str(), seed, precision, json.slot(),
                          csv_path.empty() ? nullptr : csv.slot(), &holds);
  if (st != MG_OK) return fail_with(st);
  if (out_path.empty()) {
    std::printf("%s\n", json.str().c_str());
  } else if (!write_file(out_path, json.str() + "\n")) {
    std::fprintf(stderr, "error: cannot write %s\n", out_path.c_str());
    return kExitUsage;
  }
  if (!csv_path.empty() && !write_file(csv_path, csv.str())) {
    std::fprintf(stderr, "error: cannot write %s\n", csv_path.c_str());
    return kExitUsage;
  }
  return holds ? kExitHolds : kExitFails;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mahler gauge: certified Mahler measures, discriminants, and "
               "the inequalities connecting them"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  long precision = 0;
  bool precision_set = false;

  std::string poly_text, subject, r_text;
  auto* measure = app.add_subcommand("measure", "certified Mahler measure of an integer polynomial");
  measure->add_option("poly", poly_text, "polynomial, e.g. \"x^3-2x+1\"")->required();
  measure->add_option("--precision", precision, "working precision in bits")
      ->each([&](const std::string&) { precision_set = true; });

  auto* check = app.add_subcommand("check", "verify one inequality on a polynomial");
  check->add_option("subject", subject,
                    "mahler | paired | l1 | cor15 (reversed norm bound)")
      ->required();
  check->add_option("poly", poly_text, "polynomial")->required();
  check->add_option("--r", r_text, "pairing threshold (rational, >= 1); derived when omitted");
  check->add_option("--precision", precision, "working precision in bits")
      ->each([&](const std::string&) { precision_set = true; });

  std::string config_path;
  auto* energy = app.add_subcommand("energy", "paired-points bound with proof trace on a point configuration");
  energy->add_option("config", config_path, "JSON file: {\"k\": n, \"points\": [[..], ..]}")
      ->required();
  energy->add_option("--r", r_text, "pairing threshold (rational, >= 1); derived when omitted");
  energy->add_option("--precision", precision, "working precision in bits")
      ->each([&](const std::string&) { precision_set = true; });

  std::string action, spec_path, c_text, T_max = "5", M_text;
  std::vector<std::string> T_list;
  int count = 0;
  auto* field = app.add_subcommand("field", "number-field searches and bounds");
  field->add_option("action", action,
                    "info | search-gen | search-gen-real | min-mahler | check-bounds")
      ->required();
  field->add_option("spec", spec_path, "field spec JSON file")->required();
  field->add_option("--T", T_list, "box offset(s) for generator searches (repeatable)");
  field->add_option("--count", count, "extend the T sequence to this many values");
  field->add_option("--c", c_text, "fixed box side length (default: automatic)");
  field->add_option("--T-max", T_max, "measure ceiling for min-mahler / check-bounds (default 5)");
  field->add_option("--M", M_text, "measure value for check-bounds (skips the minimum search)");
  field->add_option("--precision", precision, "working precision in bits")
      ->each([&](const std::string&) { precision_set = true; });

  std::string suite = "all", out_path, csv_path;
  unsigned long long seed = 1;
  auto* repro = app.add_subcommand("repro", "deterministic verification suites");
  repro->add_option("suite", suite, "all | identities | inequalities | energy | fields");
  repro->add_option("--seed", seed, "random stream seed (default 1)");
  repro->add_option("--out", out_path, "write report JSON here instead of stdout");
  repro->add_option("--csv", csv_path, "also write the fixed-column CSV summary here");
  repro->add_option("--precision", precision, "working precision in bits")
      ->each([&](const std::string&) { precision_set = true; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  bool bad_env = false;
  long prec = resolve_precision(precision, precision_set, &bad_env);
  if (bad_env) {
    std::fprintf(stderr, "error: MAHLER_GAUGE_PRECISION must be a positive integer\n");
    return kExitUsage;
  }

  if (measure->parsed()) return cmd_measure(poly_text, prec);
  if (check->parsed()) return cmd_check(subject, poly_text, r_text, prec);
  if (energy->parsed()) return cmd_energy(config_path, r_text, prec);
  if (field->parsed())
    return cmd_field(action, spec_path, T_list, count, c_text, T_max, M_text, prec);
  if (repro->parsed()) return cmd_repro(suite, seed, prec, out_path, csv_path);
  return kExitUsage;
}
