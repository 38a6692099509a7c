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

#ifndef QSP_VERIFY_HPP
#define QSP_VERIFY_HPP

#include <array>
#include <vector>

#include "qsp/peel.hpp"
#include "qsp/trig_poly.hpp"

namespace qsp {

/// Row-major 2x2 complex matrix.
using Matrix2 = std::array<Complex, 4>;

Matrix2 matmul(const Matrix2& a, const Matrix2& b);

/// The signal-processing product e^{i phi_0 Z} e^{itX} e^{i phi_1 Z} ... with
/// X = [[0,1],[1,0]] and Z = [[1,0],[0,-1]]; unitary within round-off.
Matrix2 reconstruct(const PhaseFactors& phis, double t);

struct ReconstructionReport {
  double err_linf_rel = 0;       // ||Re p~ - a||_inf / ||a||_inf
  int grid_size = 0;
  double max_unitarity_defect = 0;
};

/// Relative sup-norm error between Re(U_11) and a over a uniform t grid on
/// [0, pi] (Chebyshev points in x, endpoints included). grid_size = 0 picks
/// the default 4*(d+1).
ReconstructionReport error_estimate(const PhaseFactors& phis, const TrigPoly& a,
                                    int grid_size = 0);

/// Test oracle: the monic characteristic polynomial of the roots of
/// 1 - a^2(z) - b^2(z) inside the unit disk, via companion-matrix
/// eigenvalues. Desk scale only (d <= 64); the production path never
/// computes roots.
std::vector<double> oracle_char_poly(const TrigPoly& a, const TrigPoly& b);

}  // namespace qsp

#endif
