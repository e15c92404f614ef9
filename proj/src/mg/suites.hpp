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

#ifndef MG_SUITES_HPP
#define MG_SUITES_HPP

#include <string>
#include <vector>

#include "../../vendor/nlohmann/json.hpp"
#include "report.hpp"

namespace mg {

/* Batch verification over fixed families plus seeded random stress
 * inputs.  Runs are deterministic end to end: suites execute serially,
 * randomness comes from a fully specified engine, and every value is
 * rendered through the exact rational / dyadic printers, so identical
 * options produce byte-identical JSON and CSV. */
struct SuiteOptions {
  unsigned long long seed = 1;
  Prec precision = 128;
  Prec prec_cap = 4096;
};

struct SuiteResult {
  std::string suite;
  std::vector<InequalityReport> checks;
  nlohmann::ordered_json records = nlohmann::ordered_json::object();

  int holds() const;
  int fails() const;
  int undecided() const;
  nlohmann::ordered_json to_json() const;
};

/* Closed-form identities, confirmed exactly: the two-coefficient family
 * (p+1)x^d - p (measure, discriminant, and the classical-bound ratio),
 * the Eisenstein family (discriminant plus measure window), x^d - 1
 * against d^d, the conjugate-pair quadratic closed form, and the
 * dominant-trinomial growth floor. */
SuiteResult run_identity_suite(const SuiteOptions& opt = {});

/* The classical and paired-roots measure/discriminant inequalities on
 * seeded random polynomials, the binomial equality family, monic
 * products with conjugate-pair roots, and x^2 + R^2 where the paired
 * bound is met with zero slack.  Every polynomial also goes through the
 * coefficient-norm window and, where the pairing hypothesis holds, the
 * reversed discriminant-vs-norm bounds. */
SuiteResult run_inequality_suite(const SuiteOptions& opt = {});

/* Point-configuration energy checks: seeded random pairable
 * configurations in R^2, R^3, R^5 with full proof traces, the
 * two-large-points sharpness family across six scales, and agreement
 * between configuration discriminants built from certified roots and
 * the exact polynomial discriminant. */
SuiteResult run_energy_suite(const SuiteOptions& opt = {});

/* Number-field checks: verified generator searches over Minkowski boxes
 * (square and real-embedding variants), the exact minimum measure over
 * generators for eight imaginary quadratic orders and one quartic, and
 * every applicable field-level measure bound. */
SuiteResult run_field_suite(const SuiteOptions& opt = {});

const std::vector<std::string>& suite_names();

/* which: a suite name or "all".  Unknown names are a domain error. */
std::vector<SuiteResult> run_suites(const std::string& which,
                                    const SuiteOptions& opt = {});

nlohmann::ordered_json suites_json(const std::vector<SuiteResult>& rs,
                                   const SuiteOptions& opt);

/* Fixed columns: suite, check, lhs, rhs, holds, slack. */
std::string suites_csv(const std::vector<SuiteResult>& rs);

}  // namespace mg

#endif
