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

#include "qsp/targets.hpp"

#include <cmath>
#include <fstream>

#include "qsp/errors.hpp"

namespace qsp {

std::string family_name(Family f) {
  switch (f) {
    case Family::HamsimRe: return "hamsim-re";
    case Family::HamsimIm: return "hamsim-im";
    case Family::Filter: return "filter";
    case Family::Matinv: return "matinv";
    case Family::Fermidirac: return "fermidirac";
    case Family::CustomSamples: return "custom-samples";
  }
  return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
  if (name == "hamsim-re") return Family::HamsimRe;
  if (name == "hamsim-im") return Family::HamsimIm;
  if (name == "filter") return Family::Filter;
  if (name == "matinv") return Family::Matinv;
  if (name == "fermidirac") return Family::Fermidirac;
  if (name == "custom-samples") return Family::CustomSamples;
  return std::nullopt;
}

double chebyshev_t(int k, double y) {
  if (std::abs(y) <= 1.0) return std::cos(k * std::acos(y));
  const double sign = (y < 0.0 && k % 2 != 0) ? -1.0 : 1.0;
  return sign * std::cosh(k * std::acosh(std::abs(y)));
}

TargetSpec::TargetSpec(Family f, double param, Parity parity)
    : family_(f), param_(param), parity_(parity) {}

TargetSpec TargetSpec::hamsim_re(double tau) {
  if (!(tau > 0.0)) throw InputError("hamsim: tau must be positive");
  return TargetSpec(Family::HamsimRe, tau, Parity::Even);
}

TargetSpec TargetSpec::hamsim_im(double tau) {
  if (!(tau > 0.0)) throw InputError("hamsim: tau must be positive");
  return TargetSpec(Family::HamsimIm, tau, Parity::Odd);
}

TargetSpec TargetSpec::filter(double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw InputError("filter: delta must lie in (0,1)");
  return TargetSpec(Family::Filter, delta, Parity::Even);
}

TargetSpec TargetSpec::matinv(double kappa) {
  if (!(kappa > 1.0)) throw InputError("matinv: kappa must exceed 1");
  return TargetSpec(Family::Matinv, kappa, Parity::Odd);
}

TargetSpec TargetSpec::fermidirac(double beta) {
  if (!(beta > 0.0)) throw InputError("fermidirac: beta must be positive");
  return TargetSpec(Family::Fermidirac, beta, Parity::Odd);
}

TargetSpec TargetSpec::custom_samples(const std::string& file, Parity parity) {
  std::ifstream in(file);
  if (!in) throw InputError("custom-samples: cannot open " + file);
  std::vector<Complex> samples;
  double v;
  while (in >> v) samples.push_back(Complex(v));
  if (samples.size() < 2 || samples.size() % 2 != 0)
    throw InputError("custom-samples: sample count must be even and >= 2");
  const int n = static_cast<int>(samples.size());
  TargetSpec spec(Family::CustomSamples, 0.0, parity);
  spec.custom_interp_ =
      TrigPoly::from_spectrum(analyze(samples, UnitCircleGrid(n)), n / 2 - 1);
  return spec;
}

std::string TargetSpec::param_name() const {
  switch (family_) {
    case Family::HamsimRe:
    case Family::HamsimIm: return "tau";
    case Family::Filter: return "delta";
    case Family::Matinv: return "kappa";
    case Family::Fermidirac: return "beta";
    case Family::CustomSamples: return "";
  }
  return "";
}

int TargetSpec::known_degree() const {
  if (family_ == Family::Filter) {
    const int k = static_cast<int>(std::lround(20.0 / param_));
    return 2 * k;
  }
  return 0;
}

double TargetSpec::eval_t(double t) const { return eval_x(std::cos(t)); }

double TargetSpec::eval_x(double x) const {
  switch (family_) {
    case Family::HamsimRe:
      return std::cos(param_ * x);
    case Family::HamsimIm:
      return std::sin(param_ * x);
    case Family::Filter: {
      const double d2 = param_ * param_;
      const int k = static_cast<int>(std::lround(20.0 / param_));
      const double num = chebyshev_t(k, -1.0 + 2.0 * (x * x - d2) / (1.0 - d2));
      const double den = chebyshev_t(k, -1.0 - 2.0 * d2 / (1.0 - d2));
      return num / den;
    }
    case Family::Matinv: {
      // Removable singularity at x = 0; expm1 keeps the small-|x| regime
      // accurate down to the analytic limit 0.
      if (x == 0.0) return 0.0;
      const double s = 5.0 * param_ * x;
      return -std::expm1(-s * s) / x;
    }
    case Family::Fermidirac:
      // (1 - e^{bx})/(1 + e^{bx}) without overflow for large bx.
      return -std::tanh(0.5 * param_ * x);
    case Family::CustomSamples: {
      const Complex v = custom_interp_.eval(std::acos(std::clamp(x, -1.0, 1.0)));
      return v.real();
    }
  }
  return 0.0;
}

}  // namespace qsp
