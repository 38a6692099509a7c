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

#ifndef QSP_PIPELINE_HPP
#define QSP_PIPELINE_HPP

#include <string>

#include "qsp/approx.hpp"
#include "qsp/completion.hpp"
#include "qsp/peel.hpp"
#include "qsp/targets.hpp"
#include "qsp/verify.hpp"

namespace qsp {

struct RunOptions {
  BSpec::Mode b_mode = BSpec::Mode::LeadingOnly;
  double b_amplitude = 0.4;
  uint64_t seed = 0;
  double eps_scale = 0x1p-52;
  int rows_l = 0;       // 0 -> 2d+2
  int ns_factor = 40;   // sampling grid is ns_factor * d
  double threshold = 1e-12;
  double tol = 1e-10;   // pass/fail gate on err_linf_rel
};

struct RunReport {
  std::string family;
  std::string param_name;
  double param_value = 0;
  int degree = 0;
  int ns = 0;
  long approx_ms = 0, ghat_ms = 0, solve_m_ms = 0, complete_ms = 0, peel_ms = 0, verify_ms = 0;
  double err_linf_rel = 0;
  double alpha_rel_spread = 0;
  double unitarity_defect = 0;
  double max_truncation = 0;
  int outer_iters = 0;
  long cg_iters_total = 0;

  long total_ms() const {
    return approx_ms + ghat_ms + solve_m_ms + complete_ms + peel_ms + verify_ms;
  }
};

struct RunResult {
  RunReport report;
  PhaseFactors phases;
  TrigPoly a;
};

/// approximate -> make_b -> compute_ghat -> solve_m -> complete ->
/// extract_phases -> error_estimate; stage failures are rethrown with the
/// stage name prefixed.
RunResult run(const TargetSpec& spec, const RunOptions& options = {});

std::string report_to_json(const RunReport& report);

/// Plain-text phases file: a `# degree=... parity=... family=...` comment
/// line followed by d+1 angles, 17 significant digits, one per line.
void write_phases_file(const std::string& path, const PhaseFactors& phases,
                       const std::string& family);
PhaseFactors read_phases_file(const std::string& path);

/// CSV of the verification grid: header x,a,re_p_tilde,abs_err.
void write_error_csv(const std::string& path, const PhaseFactors& phases, const TrigPoly& a,
                     int grid_size = 0);

}  // namespace qsp

#endif
