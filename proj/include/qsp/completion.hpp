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

#ifndef QSP_COMPLETION_HPP
#define QSP_COMPLETION_HPP

#include <cstdint>
#include <vector>

#include "qsp/trig_poly.hpp"

namespace qsp {

/// Choice of the companion function b(t) = b_d sin(dt) + b_{d-2} sin((d-2)t) + ...
/// The leading coefficient dominates; that is what keeps the Hankel system at
/// full numerical rank 2d.
struct BSpec {
  enum class Mode { LeadingOnly, Randomized };
  Mode mode = Mode::LeadingOnly;
  double amplitude = 0.4;  // in (0, 0.5]
  uint64_t seed = 0;       // Randomized mode
};

TrigPoly make_b(int d, const BSpec& spec);

/// The Fourier-coefficient sequence ghat_{-1} .. ghat_{-(2d+l)} defining the
/// l x (2d+1) Hankel matrix H with H[i][j] = ghat_{-(i+j+1)} implicitly.
struct HankelSystem {
  std::vector<double> ghat;  // ghat[j] = ghat_{-(j+1)}
  int rows = 0;              // l >= 2d+1
  int cols = 0;              // 2d+1

  int degree() const { return (cols - 1) / 2; }
  double entry(int i, int j) const { return ghat[static_cast<size_t>(i + j)]; }
  double frobenius_norm() const;
  double max_abs() const;
};

/// Samples g(t) = 1/(1 - a(t)^2 - b(t)^2) on an even grid of size ns and
/// returns the negative-frequency Fourier coefficients feeding the Hankel
/// system, with l rows (default 2d+2). Requires min(1 - a^2 - b^2) >= 0.5.
HankelSystem compute_ghat(const TrigPoly& a, const TrigPoly& b, int ns, int rows_l = 0);

/// H*v (or H^T*v) by circulant embedding and one FFT convolution; the dense
/// matrix is never materialized.
std::vector<double> hankel_matvec(const HankelSystem& sys, const std::vector<double>& v,
                                  bool transpose = false);

struct SolveStats {
  int outer_iters = 0;
  long cg_iters_total = 0;
};

/// Null vector of H by inverse power iteration on eps*I + H^T H with
/// eps = (eps_scale * ||H||_F)^2, inner solves by CG; returned monic
/// (m[2d] = 1).
std::vector<double> solve_m(const HankelSystem& sys, double eps_scale = 0x1p-52,
                            uint64_t seed = 0, SolveStats* stats = nullptr);

struct CompletionDiagnostics {
  double alpha_rel_spread = 0;
  double m_residual = 0;  // ||H m||_inf / (||ghat||_inf ||m||_2)
  double unitarity_defect = 0;
};

struct CompletionResult {
  TrigPoly p;  // a + i c, degree d
  TrigPoly r;  // b + i d, degree d
  double alpha = 0;
  std::vector<double> m;  // monic, length 2d+1
  CompletionDiagnostics diagnostics;
};

/// Builds e(z) = z^{-d} m(z), the constant alpha, and the completed pair
/// (p, r) with |p|^2 + |r|^2 = 1 on the circle. ns = 0 picks a default grid.
CompletionResult complete(const TrigPoly& a, const TrigPoly& b, const std::vector<double>& m,
                          int ns = 0);

}  // namespace qsp

#endif
