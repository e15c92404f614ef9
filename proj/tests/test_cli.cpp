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

/* End-to-end runs of the installed binary.  MG_CLI_PATH and MG_DATA_DIR
 * are injected by the build. */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int code = -1;
  std::string out;  // stdout and stderr interleaved
};

RunResult run(const std::string& args, const std::string& env_prefix = "") {
  std::string cmd;
  if (!env_prefix.empty()) cmd += env_prefix + " ";
  cmd += std::string(MG_CLI_PATH) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  RunResult r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string data(const std::string& rel) {
  return std::string(MG_DATA_DIR) + "/" + rel;
}

void write_tmp(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  REQUIRE(out.good());
  out << content;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool has(const RunResult& r, const std::string& needle) {
  return r.out.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("measure output, exact and approximate") {
  RunResult r = run("measure \"3x^2-2\"");
  CHECK(r.code == 0);
  CHECK(has(r, "M = 3 (exact)"));
  CHECK(has(r, "window: 2^-d * l1 = 5/4 <= M <= l1 = 5"));
  CHECK(has(r, "0.8164965809"));

  r = run("measure \"x^2-x-1\"");
  CHECK(r.code == 0);
  CHECK(has(r, "M ~= 1.6180339887"));
  CHECK(has(r, "enclosure: ["));
}

TEST_CASE("check exit codes carry the verdict") {
  RunResult r = run("check mahler \"x^2+1\"");
  CHECK(r.code == 0);
  CHECK(has(r, "two-term"));

  r = run("check paired \"x^2+4\" --r 1");
  CHECK(r.code == 0);
  CHECK(has(r, "\"exact\": \"0\""));  // zero slack

  r = run("check paired \"x^2-x-1\" --r 1");
  CHECK(r.code == 3);
  CHECK(has(r, "partner"));

  r = run("check mahler \"x^^2\"");
  CHECK(r.code == 2);
  CHECK(has(r, "missing exponent"));

  r = run("check bogus \"x^2+1\"");
  CHECK(r.code == 2);
  CHECK(has(r, "cor15"));
}

TEST_CASE("energy command reads a configuration file") {
  const std::string cfg = "/tmp/mg-cli-test-pair.json";
  write_tmp(cfg, R"({"k":3,"points":[[1,0,0],[-1,0,0]]})");
  RunResult r = run("energy " + cfg + " --r 1");
  CHECK(r.code == 0);
  CHECK(has(r, "\"trivial_zero\": false"));
  CHECK(has(r, "\"holds\": true"));

  const std::string lone = "/tmp/mg-cli-test-lone.json";
  write_tmp(lone, R"({"k":3,"points":[[2,0,0],[0,0,1]]})");
  r = run("energy " + lone + " --r 1");
  CHECK(r.code == 3);

  r = run("energy /tmp/mg-cli-test-does-not-exist.json");
  CHECK(r.code == 2);
  CHECK(has(r, "cannot read"));
}

TEST_CASE("field info") {
  RunResult r = run("field info " + data("fields/qi.json"));
  CHECK(r.code == 0);
  CHECK(has(r, "\"degree\": 2"));
  CHECK(has(r, "\"conjugate_pairs\": 1"));
  CHECK(has(r, "\"covolume\""));

  r = run("field info /tmp/mg-cli-test-missing-field.json");
  CHECK(r.code == 2);
  CHECK(has(r, "cannot read"));

  r = run("field frobnicate " + data("fields/qi.json"));
  CHECK(r.code == 2);
  CHECK(has(r, "unknown field action"));
}

TEST_CASE("pinned generator search") {
  RunResult r = run("field search-gen " + data("fields/qi.json") + " --T 10 --c 2");
  CHECK(r.code == 0);
  CHECK(has(r, "x^2-22x+410"));
  CHECK(has(r, "\"index\": \"17\""));
  CHECK(has(r, "\"ratio_ok\": true"));
}

TEST_CASE("minimum measure and field bounds") {
  RunResult r = run("field min-mahler " + data("fields/qi.json") + " --T-max 2");
  CHECK(r.code == 0);
  CHECK(has(r, "\"found\": true"));
  CHECK(has(r, "\"exact\": \"1\""));

  // default path: search the minimum first, then evaluate every bound there
  r = run("field check-bounds " + data("fields/q8.json"));
  CHECK(r.code == 0);
  CHECK(has(r, "field-imquad"));
  CHECK(has(r, "field-upper"));

  r = run("field check-bounds " + data("fields/qi.json") + " --M 1");
  CHECK(r.code == 0);
}

TEST_CASE("real-embedding variant is required for totally real fields") {
  RunResult r = run("field search-gen " + data("fields/sqrt2.json") + " --T 10");
  CHECK(r.code == 3);
  CHECK(has(r, "real-embedding variant"));

  r = run("field search-gen-real " + data("fields/sqrt2.json") + " --T 10");
  CHECK(r.code == 0);
  CHECK(has(r, "\"generates\": true"));
}

TEST_CASE("reproduction run is byte-identical") {
  const std::string j1 = "/tmp/mg-cli-test-r1.json", c1 = "/tmp/mg-cli-test-r1.csv";
  const std::string j2 = "/tmp/mg-cli-test-r2.json", c2 = "/tmp/mg-cli-test-r2.csv";
  RunResult r = run("repro identities --out " + j1 + " --csv " + c1);
  CHECK(r.code == 0);
  r = run("repro identities --out " + j2 + " --csv " + c2);
  CHECK(r.code == 0);
  CHECK(slurp(j1) == slurp(j2));
  CHECK(slurp(c1) == slurp(c2));
  CHECK(slurp(c1).rfind("suite, check, lhs, rhs, holds, slack", 0) == 0);
  CHECK(slurp(j1).find("\"seed\": 1") != std::string::npos);

  r = run("repro bogus");
  CHECK(r.code == 2);
}

TEST_CASE("precision resolution order") {
  const std::string out = "/tmp/mg-cli-test-prec.json";
  RunResult r = run("repro identities --out " + out,
                    "MAHLER_GAUGE_PRECISION=64");
  CHECK(r.code == 0);
  CHECK(slurp(out).find("\"precision_bits\": 64") != std::string::npos);

  r = run("repro identities --precision 128 --out " + out,
          "MAHLER_GAUGE_PRECISION=64");
  CHECK(r.code == 0);
  CHECK(slurp(out).find("\"precision_bits\": 128") != std::string::npos);

  r = run("measure \"x^2+1\"", "MAHLER_GAUGE_PRECISION=abc");
  CHECK(r.code == 2);
  CHECK(has(r, "MAHLER_GAUGE_PRECISION"));
}

TEST_CASE("usage errors") {
  RunResult r = run("");
  CHECK(r.code == 2);
  r = run("--help");
  CHECK(r.code == 0);
  CHECK(has(r, "measure"));
  CHECK(has(r, "repro"));
}
