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

#include "qsp/verify.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <iostream>
#include <numbers>

#include "qsp/errors.hpp"

namespace qsp {

Matrix2 matmul(const Matrix2& a, const Matrix2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Matrix2 reconstruct(const PhaseFactors& phis, double t) {
  // Extended-precision accumulation: a plain double product loses ~d ulps
  // over the chain, which at d ~ 100 already exceeds the 1e-13 regime the
  // verification is meant to resolve.
  using LC = std::complex<long double>;
  const long double tl = static_cast<long double>(t);
  const LC cx(std::cos(tl));
  const LC is(0.0L, std::sin(tl));

  auto e = [](long double phi) -> LC { return LC(std::cos(phi), std::sin(phi)); };

  const long double phi0 = static_cast<long double>(phis.phis[0]);
  LC u0 = e(phi0), u1 = LC(0.0L), u2 = LC(0.0L), u3 = e(-phi0);
  for (size_t j = 1; j < phis.phis.size(); ++j) {
    // u <- u * rx(t) * rz(phi_j), with the diagonal rz folded in columnwise.
    const long double phi = static_cast<long double>(phis.phis[j]);
    const LC ep = e(phi), em = e(-phi);
    const LC v0 = (u0 * cx + u1 * is) * ep, v1 = (u0 * is + u1 * cx) * em;
    const LC v2 = (u2 * cx + u3 * is) * ep, v3 = (u2 * is + u3 * cx) * em;
    u0 = v0;
    u1 = v1;
    u2 = v2;
    u3 = v3;
  }
  return {Complex(static_cast<double>(u0.real()), static_cast<double>(u0.imag())),
          Complex(static_cast<double>(u1.real()), static_cast<double>(u1.imag())),
          Complex(static_cast<double>(u2.real()), static_cast<double>(u2.imag())),
          Complex(static_cast<double>(u3.real()), static_cast<double>(u3.imag()))};
}

ReconstructionReport error_estimate(const PhaseFactors& phis, const TrigPoly& a, int grid_size) {
  const int d = phis.degree;
  if (grid_size <= 0) grid_size = 4 * (d + 1);
  if (grid_size < 2 * (d + 1)) throw InputError("error_estimate: grid too small");

  double max_err = 0.0, max_a = 0.0, max_defect = 0.0;
  for (int j = 0; j < grid_size; ++j) {
    const double t = std::numbers::pi * static_cast<double>(j) / static_cast<double>(grid_size - 1);
    const Matrix2 u = reconstruct(phis, t);
    const double av = a.eval(t).real();
    max_err = std::max(max_err, std::abs(u[0].real() - av));
    max_a = std::max(max_a, std::abs(av));

    // ||U* U - I||_max
    const Complex g00 = std::conj(u[0]) * u[0] + std::conj(u[2]) * u[2] - 1.0;
    const Complex g01 = std::conj(u[0]) * u[1] + std::conj(u[2]) * u[3];
    const Complex g11 = std::conj(u[1]) * u[1] + std::conj(u[3]) * u[3] - 1.0;
    max_defect = std::max({max_defect, std::abs(g00), std::abs(g01), std::abs(g11)});
  }

  ReconstructionReport report;
  report.err_linf_rel = max_err / max_a;
  report.grid_size = grid_size;
  report.max_unitarity_defect = max_defect;
  return report;
}

std::vector<double> oracle_char_poly(const TrigPoly& a, const TrigPoly& b) {
  const int d = std::max(a.degree(), b.degree());
  if (d > 64) throw InputError("oracle_char_poly: desk scale only (d <= 64)");

  // Coefficients of q(z) = 1 - a^2(z) - b^2(z) over k = -2d..2d, read off a
  // sampling grid (exact for a trig polynomial of degree 2d).
  int ns = 4 * d + 4;
  UnitCircleGrid grid(ns);
  const std::vector<Complex> as = synthesize(a, grid);
  const std::vector<Complex> bs = synthesize(b, grid);
  std::vector<Complex> q(static_cast<size_t>(ns));
  for (int n = 0; n < ns; ++n)
    q[static_cast<size_t>(n)] =
        Complex(1.0) - as[static_cast<size_t>(n)] * as[static_cast<size_t>(n)] -
        bs[static_cast<size_t>(n)] * bs[static_cast<size_t>(n)];
  const Spectrum spec = analyze(q, grid);

  // P(z) = z^{2d} q(z), a degree-4d polynomial with P(0) != 0.
  const int deg = 4 * d;
  std::vector<Complex> poly(static_cast<size_t>(deg + 1));
  for (int j = 0; j <= deg; ++j) poly[static_cast<size_t>(j)] = spec.at(j - 2 * d);
  double pmax = 0.0;
  for (const auto& c : poly) pmax = std::max(pmax, std::abs(c));
  if (std::abs(poly.back()) < 1e-13 * pmax)
    throw InputError("oracle_char_poly: vanishing leading coefficient");

  // Companion-matrix eigenvalues.
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -poly[static_cast<size_t>(i)] / poly.back();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, /*computeEigenvectors=*/false);
  std::vector<Complex> roots(solver.eigenvalues().data(),
                             solver.eigenvalues().data() + deg);

  // The roots pair up as xi <-> 1/xi; exactly 2d lie inside the unit circle.
  std::sort(roots.begin(), roots.end(),
            [](const Complex& x, const Complex& y) { return std::abs(x) < std::abs(y); });
  for (int j = 0; j < 2 * d; ++j) {
    if (std::abs(1.0 - std::abs(roots[static_cast<size_t>(j)])) < 1e-8)
      std::cerr << "oracle_char_poly: warning, root within 1e-8 of the unit circle\n";
  }

  // Expand the monic product over the 2d inside roots (lowest power first).
  std::vector<Complex> mc{Complex(1.0)};
  for (int j = 0; j < 2 * d; ++j) {
    std::vector<Complex> next(mc.size() + 1, Complex(0.0));
    for (size_t i = 0; i < mc.size(); ++i) {
      next[i + 1] += mc[i];
      next[i] -= roots[static_cast<size_t>(j)] * mc[i];
    }
    mc = std::move(next);
  }
  std::vector<double> m(static_cast<size_t>(2 * d + 1));
  for (int j = 0; j <= 2 * d; ++j) m[static_cast<size_t>(j)] = mc[static_cast<size_t>(j)].real();
  return m;
}

}  // namespace qsp
