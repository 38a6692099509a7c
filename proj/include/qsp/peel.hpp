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

#ifndef QSP_PEEL_HPP
#define QSP_PEEL_HPP

#include <utility>
#include <vector>

#include "qsp/completion.hpp"
#include "qsp/trig_poly.hpp"

namespace qsp {

/// The output sequence Phi = (phi_0, ..., phi_d), each angle in [-pi, pi].
struct PhaseFactors {
  std::vector<double> phis;
  int degree = 0;

  int parity() const { return degree % 2; }
};

struct PeelDiagnostics {
  double max_modulus_mismatch = 0;  // max over steps of ||p_n| - |r_n||
  double max_truncation = 0;        // largest discarded above-degree coefficient
};

/// phi = arg(p_top / r_top) / 2, principal branch, in (-pi/2, pi/2].
double solve_phi(Complex p_top, Complex r_top, PeelDiagnostics* diag = nullptr);

/// One degree-reduction step: right-multiplies (p, r) by
/// diag(e^{-i phi}, e^{i phi}) * [[cos t, -i sin t], [-i sin t, cos t]]
/// in coefficient space and truncates to degree n-1. The coefficients above
/// degree n-1 must vanish to round-off; a residual above 1e-6 aborts.
std::pair<TrigPoly, TrigPoly> peel_step(const TrigPoly& p, const TrigPoly& r, double phi, int n,
                                        PeelDiagnostics* diag = nullptr);

/// Full extraction loop, n = d down to 1, then phi_0 = arg(p_0).
std::pair<PhaseFactors, PeelDiagnostics> extract_phases(const TrigPoly& p, const TrigPoly& r);
std::pair<PhaseFactors, PeelDiagnostics> extract_phases(const CompletionResult& completion);

}  // namespace qsp

#endif
