// Copyright 2026 The qspfact Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qsp/pipeline.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "qsp/errors.hpp"

#include <nlohmann/json.hpp>

using namespace qsp;

TEST_CASE("end-to-end on a small Hamiltonian simulation target") {
  RunOptions opt;
  RunResult res = run(TargetSpec::hamsim_re(25.0), opt);
  CHECK(res.report.err_linf_rel <= 1e-10);
  CHECK(res.report.alpha_rel_spread <= 1e-8);
  CHECK(res.report.unitarity_defect <= 1e-9);
  CHECK(res.phases.phis.size() == static_cast<size_t>(res.report.degree + 1));
  CHECK(res.report.degree % 2 == 0);
}

TEST_CASE("low-degree exact polynomial: a = 0.3 T_3") {
  // f = T_3 is already a polynomial; the full pipeline must hit 1e-11.
  std::string path = "/tmp/qsp_t3_samples.txt";
  {
    std::ofstream out(path);
    const int n = 64;
    for (int i = 0; i < n; ++i) {
      char buf[48];
      std::snprintf(buf, sizeof buf, "%.17g\n", std::cos(3.0 * 2.0 * M_PI * i / n));
      out << buf;
    }
  }
  RunResult res = run(TargetSpec::custom_samples(path, Parity::Odd));
  CHECK(res.report.degree == 3);
  CHECK(res.report.err_linf_rel <= 1e-11);
}

TEST_CASE("determinism: same seed, bit-identical phases files") {
  RunOptions opt;
  opt.seed = 7;
  opt.b_mode = BSpec::Mode::Randomized;
  auto spec = TargetSpec::fermidirac(20.0);
  RunResult r1 = run(spec, opt);
  RunResult r2 = run(spec, opt);
  write_phases_file("/tmp/qsp_phases_1.txt", r1.phases, "fermidirac");
  write_phases_file("/tmp/qsp_phases_2.txt", r2.phases, "fermidirac");
  std::ifstream f1("/tmp/qsp_phases_1.txt"), f2("/tmp/qsp_phases_2.txt");
  std::stringstream s1, s2;
  s1 << f1.rdbuf();
  s2 << f2.rdbuf();
  CHECK(s1.str() == s2.str());
  CHECK(!s1.str().empty());
}

TEST_CASE("phases file round-trip and header format") {
  PhaseFactors phases;
  phases.degree = 2;
  phases.phis = {0.1, -0.25, 1.0 / 3.0};
  write_phases_file("/tmp/qsp_phases_rt.txt", phases, "filter");
  std::ifstream in("/tmp/qsp_phases_rt.txt");
  std::string header;
  std::getline(in, header);
  CHECK(header == "# degree=2 parity=0 family=filter");

  PhaseFactors back = read_phases_file("/tmp/qsp_phases_rt.txt");
  REQUIRE(back.phis.size() == 3);
  CHECK(back.degree == 2);
  for (size_t i = 0; i < 3; ++i) CHECK(back.phis[i] == phases.phis[i]);
}

TEST_CASE("report JSON carries the spec'd keys") {
  RunResult res = run(TargetSpec::hamsim_im(10.0));
  auto j = nlohmann::json::parse(report_to_json(res.report));
  CHECK(j["family"] == "hamsim-im");
  CHECK(j["params"]["tau"] == 10.0);
  CHECK(j["degree"].is_number_integer());
  CHECK(j["ns"].is_number_integer());
  for (const char* key :
       {"approx_ms", "ghat_ms", "solve_m_ms", "complete_ms", "peel_ms", "verify_ms"}) {
    CHECK(j["timings"][key].is_number_integer());
    CHECK(j["timings"][key].get<long>() >= 0);
  }
  CHECK(j["err_linf_rel"].is_number());
  CHECK(j["diagnostics"]["alpha_rel_spread"].is_number());
  CHECK(j["diagnostics"]["outer_iters"].is_number_integer());
  CHECK(j["diagnostics"]["cg_iters_total"].is_number_integer());
  CHECK(j["diagnostics"]["max_truncation"].is_number());
}

TEST_CASE("error CSV has the right header and rows") {
  RunResult res = run(TargetSpec::hamsim_im(10.0));
  write_error_csv("/tmp/qsp_err.csv", res.phases, res.a, 32);
  std::ifstream in("/tmp/qsp_err.csv");
  std::string line;
  std::getline(in, line);
  CHECK(line == "x,a,re_p_tilde,abs_err");
  int rows = 0;
  while (std::getline(in, line)) {
    if (!line.empty()) ++rows;
  }
  CHECK(rows == 32);
}

TEST_CASE("stage errors carry the stage name") {
  // An absurd ns_factor starves compute_ghat of resolution.
  RunOptions opt;
  opt.rows_l = 100000;  // forces the resolution check to fail
  try {
    run(TargetSpec::hamsim_re(10.0), opt);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("compute_ghat") != std::string::npos);
  }
}
