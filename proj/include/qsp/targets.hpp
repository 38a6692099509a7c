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

#ifndef QSP_TARGETS_HPP
#define QSP_TARGETS_HPP

#include <optional>
#include <string>

#include "qsp/trig_poly.hpp"

namespace qsp {

enum class Family { HamsimRe, HamsimIm, Filter, Matinv, Fermidirac, CustomSamples };

std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

/// A builtin or user-supplied real target function f on [-1,1].
///
/// Builtin families:
///   hamsim-re    cos(tau x)                                   (even, tau > 0)
///   hamsim-im    sin(tau x)                                   (odd,  tau > 0)
///   filter       T_k(-1 + 2(x^2-D^2)/(1-D^2)) / T_k(-1 - 2D^2/(1-D^2)),
///                k = round(20/Delta)                          (even, Delta in (0,1))
///   matinv       (1 - exp(-(5 kappa x)^2)) / x                (odd,  kappa > 1)
///   fermidirac   (1 - e^{beta x}) / (1 + e^{beta x})          (odd,  beta > 0)
///   custom       trig interpolation of samples f(cos t_n) on a uniform
///                even-size t grid, one value per line in `file`.
class TargetSpec {
 public:
  static TargetSpec hamsim_re(double tau);
  static TargetSpec hamsim_im(double tau);
  static TargetSpec filter(double delta);
  static TargetSpec matinv(double kappa);
  static TargetSpec fermidirac(double beta);
  static TargetSpec custom_samples(const std::string& file, Parity parity);

  Family family() const { return family_; }
  Parity parity() const { return parity_; }
  double param() const { return param_; }
  std::string param_name() const;

  /// For the filter family the target is already a trigonometric polynomial
  /// of degree exactly 2k; zero for the other families.
  int known_degree() const;

  /// The lifted target f(t) = f(x = cos t).
  double eval_t(double t) const;
  double eval_x(double x) const;

 private:
  TargetSpec(Family f, double param, Parity parity);
  Family family_;
  double param_ = 0.0;
  Parity parity_;
  TrigPoly custom_interp_;  // CustomSamples only
};

/// Chebyshev polynomial T_k, evaluated by the cos/cosh closed form so that
/// arguments outside [-1,1] do not overflow for large k.
double chebyshev_t(int k, double y);

}  // namespace qsp

#endif
