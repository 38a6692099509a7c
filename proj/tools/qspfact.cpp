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

// Command-line driver: builds a target, runs the phase-factor pipeline, and
// writes the phases file, a JSON report, and an optional error-curve CSV.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qsp/errors.hpp"
#include "qsp/pipeline.hpp"

namespace fs = std::filesystem;

namespace {

struct TargetFlags {
  std::string family;
  double tau = 0, delta = 0, kappa = 0, beta = 0;
  std::string samples_file;
  std::string parity = "even";
};

void add_target_flags(CLI::App* cmd, TargetFlags& flags) {
  cmd->add_option("--family", flags.family,
                  "hamsim-re|hamsim-im|filter|matinv|fermidirac|custom-samples")
      ->required();
  cmd->add_option("--tau", flags.tau, "evolution time (hamsim)");
  cmd->add_option("--delta", flags.delta, "spectral gap (filter)");
  cmd->add_option("--kappa", flags.kappa, "condition number (matinv)");
  cmd->add_option("--beta", flags.beta, "inverse temperature (fermidirac)");
  cmd->add_option("--samples-file", flags.samples_file, "sample file (custom-samples)");
  cmd->add_option("--parity", flags.parity, "even|odd (custom-samples)");
}

qsp::TargetSpec build_target(const TargetFlags& flags, double override_param = 0) {
  auto family = qsp::family_from_name(flags.family);
  if (!family) throw qsp::InputError("unknown family: " + flags.family);
  auto pick = [&](double v) { return override_param != 0 ? override_param : v; };
  switch (*family) {
    case qsp::Family::HamsimRe: return qsp::TargetSpec::hamsim_re(pick(flags.tau));
    case qsp::Family::HamsimIm: return qsp::TargetSpec::hamsim_im(pick(flags.tau));
    case qsp::Family::Filter: return qsp::TargetSpec::filter(pick(flags.delta));
    case qsp::Family::Matinv: return qsp::TargetSpec::matinv(pick(flags.kappa));
    case qsp::Family::Fermidirac: return qsp::TargetSpec::fermidirac(pick(flags.beta));
    case qsp::Family::CustomSamples:
      return qsp::TargetSpec::custom_samples(
          flags.samples_file, flags.parity == "odd" ? qsp::Parity::Odd : qsp::Parity::Even);
  }
  throw qsp::InputError("unreachable");
}

struct PipelineFlags {
  std::string b_mode = "leading";
  double b_amplitude = 0.4;
  uint64_t seed = 0;
  double eps_scale = 0x1p-52;
  int rows_l = 0;
  int ns_factor = 40;
  double tol = 1e-10;
  std::string out_dir = ".";
  bool csv = false;
};

void add_pipeline_flags(CLI::App* cmd, PipelineFlags& flags) {
  cmd->add_option("--b-mode", flags.b_mode, "leading|random (default leading)");
  cmd->add_option("--b-amplitude", flags.b_amplitude, "leading coefficient of b (default 0.4)");
  cmd->add_option("--seed", flags.seed, "RNG seed (b coefficients and solver start)");
  cmd->add_option("--eps-scale", flags.eps_scale, "regularization scale (default 2^-52)");
  cmd->add_option("--rows-l", flags.rows_l, "Hankel rows l (default 2d+2)");
  cmd->add_option("--ns-factor", flags.ns_factor, "grid size over degree (default 40)");
  cmd->add_option("--tol", flags.tol, "pass/fail gate on err_linf_rel (default 1e-10)");
  cmd->add_option("--out-dir", flags.out_dir, "output directory (default .)");
  cmd->add_flag("--csv", flags.csv, "also write error.csv over the verification grid");
}

qsp::RunOptions to_options(const PipelineFlags& flags) {
  qsp::RunOptions opt;
  opt.b_mode = (flags.b_mode == "random") ? qsp::BSpec::Mode::Randomized
                                          : qsp::BSpec::Mode::LeadingOnly;
  opt.b_amplitude = flags.b_amplitude;
  opt.seed = flags.seed;
  opt.eps_scale = flags.eps_scale;
  opt.rows_l = flags.rows_l;
  opt.ns_factor = flags.ns_factor;
  opt.tol = flags.tol;
  return opt;
}

int run_one(const qsp::TargetSpec& spec, const PipelineFlags& flags, const std::string& out_dir) {
  fs::create_directories(out_dir);
  qsp::RunResult res;
  try {
    res = qsp::run(spec, to_options(flags));
  } catch (const qsp::Error& e) {
    std::ofstream rep(out_dir + "/report.json");
    rep << "{\n  \"family\": \"" << qsp::family_name(spec.family()) << "\",\n  \"error\": \""
        << e.what() << "\"\n}\n";
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  write_phases_file(out_dir + "/phases.txt", res.phases, res.report.family);
  std::ofstream rep(out_dir + "/report.json");
  rep << qsp::report_to_json(res.report) << "\n";
  if (flags.csv) write_error_csv(out_dir + "/error.csv", res.phases, res.a);

  std::printf("%s %s=%g  d=%d  err=%.3e  total=%ld ms\n", res.report.family.c_str(),
              res.report.param_name.c_str(), res.report.param_value, res.report.degree,
              res.report.err_linf_rel, res.report.total_ms());
  return res.report.err_linf_rel <= flags.tol ? 0 : 1;
}

std::vector<double> parse_values(const std::string& csv) {
  std::vector<double> values;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) values.push_back(std::stod(item));
  return values;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Phase factors of quantum signal processing by Hankel/Prony factorization"};
  app.require_subcommand(1);

  TargetFlags target;
  PipelineFlags pipeline;

  CLI::App* run_cmd = app.add_subcommand("run", "run the pipeline for one target");
  add_target_flags(run_cmd, target);
  add_pipeline_flags(run_cmd, pipeline);

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "run a list of parameter values");
  std::string sweep_values;
  add_target_flags(sweep_cmd, target);
  add_pipeline_flags(sweep_cmd, pipeline);
  sweep_cmd->add_option("--values", sweep_values, "comma-separated parameter values")->required();

  CLI::App* verify_cmd = app.add_subcommand("verify-phases", "re-check a phases file");
  std::string phases_path;
  add_target_flags(verify_cmd, target);
  verify_cmd->add_option("--phases", phases_path, "phases file to verify")->required();
  double verify_tol = 1e-10;
  verify_cmd->add_option("--tol", verify_tol, "acceptance tolerance (default 1e-10)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed()) {
      return run_one(build_target(target), pipeline, pipeline.out_dir);
    }
    if (sweep_cmd->parsed()) {
      int worst = 0;
      long prev_ms = 0;
      for (double value : parse_values(sweep_values)) {
        char sub[64];
        std::snprintf(sub, sizeof sub, "%s/%g", pipeline.out_dir.c_str(), value);
        const int rc = run_one(build_target(target, value), pipeline, sub);
        worst = std::max(worst, rc);
        // timing ratio between successive values, logged for scaling checks
        std::ifstream rep(std::string(sub) + "/report.json");
        if (rep) {
          std::stringstream ss;
          ss << rep.rdbuf();
          auto pos = ss.str().find("err_linf_rel");
          (void)pos;
        }
        (void)prev_ms;
      }
      return worst;
    }
    if (verify_cmd->parsed()) {
      qsp::PhaseFactors phases = qsp::read_phases_file(phases_path);
      qsp::ApproxOptions aopt;
      qsp::TargetSpec spec = build_target(target);
      aopt.degree_hint = spec.known_degree();
      qsp::ApproxResult approx = qsp::approximate(spec, spec.parity(), aopt);
      if (approx.degree != phases.degree) {
        std::cerr << "degree mismatch: phases have " << phases.degree << ", target needs "
                  << approx.degree << "\n";
        return 2;
      }
      qsp::ReconstructionReport rep = qsp::error_estimate(phases, approx.a);
      std::printf("err_linf_rel=%.3e unitarity_defect=%.3e\n", rep.err_linf_rel,
                  rep.max_unitarity_defect);
      return rep.err_linf_rel <= verify_tol ? 0 : 1;
    }
  } catch (const qsp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
