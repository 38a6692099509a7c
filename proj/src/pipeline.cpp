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

#include <chrono>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qsp/errors.hpp"

namespace qsp {
namespace {

using Clock = std::chrono::steady_clock;

long elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

template <typename F>
auto stage(const char* name, long& slot, F&& body) {
  const auto start = Clock::now();
  try {
    auto out = body();
    slot = elapsed_ms(start);
    return out;
  } catch (const Error& e) {
    throw Error(std::string(name) + ": " + e.what());
  }
}

int round_up_even(int n) { return (n % 2 == 0) ? n : n + 1; }

}  // namespace

RunResult run(const TargetSpec& spec, const RunOptions& options) {
  RunResult result;
  RunReport& rep = result.report;
  rep.family = family_name(spec.family());
  rep.param_name = spec.param_name();
  rep.param_value = spec.param();

  ApproxOptions aopt;
  aopt.threshold = options.threshold;
  aopt.ns_factor = options.ns_factor;
  aopt.degree_hint = spec.known_degree();  // filter is already a trig polynomial

  const ApproxResult approx = stage("approximate", rep.approx_ms, [&] {
    return approximate(spec, spec.parity(), aopt);
  });
  result.a = approx.a;
  const int d = approx.degree;
  rep.degree = d;
  rep.ns = round_up_even(std::max(options.ns_factor * d, 2 * (4 * d + 2) + 2));

  BSpec bspec;
  bspec.mode = options.b_mode;
  bspec.amplitude = options.b_amplitude;
  bspec.seed = options.seed;
  const TrigPoly b = make_b(d, bspec);

  const HankelSystem sys = stage("compute_ghat", rep.ghat_ms, [&] {
    return compute_ghat(approx.a, b, rep.ns, options.rows_l);
  });

  SolveStats stats;
  const std::vector<double> m = stage("solve_m", rep.solve_m_ms, [&] {
    return solve_m(sys, options.eps_scale, options.seed, &stats);
  });
  rep.outer_iters = stats.outer_iters;
  rep.cg_iters_total = stats.cg_iters_total;

  const CompletionResult completion = stage("complete", rep.complete_ms, [&] {
    return complete(approx.a, b, m, rep.ns);
  });
  rep.alpha_rel_spread = completion.diagnostics.alpha_rel_spread;

  PeelDiagnostics pdiag;
  result.phases = stage("extract_phases", rep.peel_ms, [&] {
    auto [phases, diag] = extract_phases(completion);
    pdiag = diag;
    return phases;
  });
  rep.max_truncation = pdiag.max_truncation;

  const ReconstructionReport verify = stage("error_estimate", rep.verify_ms, [&] {
    return error_estimate(result.phases, result.a);
  });
  rep.err_linf_rel = verify.err_linf_rel;
  rep.unitarity_defect =
      std::max(verify.max_unitarity_defect, completion.diagnostics.unitarity_defect);
  return result;
}

std::string report_to_json(const RunReport& report) {
  nlohmann::json j;
  j["family"] = report.family;
  if (!report.param_name.empty()) j["params"][report.param_name] = report.param_value;
  j["degree"] = report.degree;
  j["ns"] = report.ns;
  j["timings"] = {{"approx_ms", report.approx_ms},   {"ghat_ms", report.ghat_ms},
                  {"solve_m_ms", report.solve_m_ms}, {"complete_ms", report.complete_ms},
                  {"peel_ms", report.peel_ms},       {"verify_ms", report.verify_ms}};
  j["err_linf_rel"] = report.err_linf_rel;
  j["diagnostics"] = {{"alpha_rel_spread", report.alpha_rel_spread},
                      {"unitarity_defect", report.unitarity_defect},
                      {"outer_iters", report.outer_iters},
                      {"cg_iters_total", report.cg_iters_total},
                      {"max_truncation", report.max_truncation}};
  return j.dump(2);
}

void write_phases_file(const std::string& path, const PhaseFactors& phases,
                       const std::string& family) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open " + path + " for writing");
  out << "# degree=" << phases.degree << " parity=" << phases.parity() << " family=" << family
      << "\n";
  char buf[64];
  for (double phi : phases.phis) {
    std::snprintf(buf, sizeof buf, "%.17g\n", phi);
    out << buf;
  }
}

PhaseFactors read_phases_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  PhaseFactors phases;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    phases.phis.push_back(std::stod(line));
  }
  if (phases.phis.empty()) throw InputError("phases file is empty: " + path);
  phases.degree = static_cast<int>(phases.phis.size()) - 1;
  return phases;
}

void write_error_csv(const std::string& path, const PhaseFactors& phases, const TrigPoly& a,
                     int grid_size) {
  if (grid_size <= 0) grid_size = 4 * (phases.degree + 1);
  std::ofstream out(path);
  if (!out) throw InputError("cannot open " + path + " for writing");
  out << "x,a,re_p_tilde,abs_err\n";
  char buf[160];
  for (int j = 0; j < grid_size; ++j) {
    const double t = std::numbers::pi * static_cast<double>(j) / static_cast<double>(grid_size - 1);
    const double x = std::cos(t);
    const double av = a.eval(t).real();
    const double pv = reconstruct(phases, t)[0].real();
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", x, av, pv, std::abs(pv - av));
    out << buf;
  }
}

}  // namespace qsp
