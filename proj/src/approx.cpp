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

#include "qsp/approx.hpp"

#include <algorithm>
#include <cmath>

#include "qsp/errors.hpp"

namespace qsp {
namespace {

std::vector<Complex> sample_target(const TargetSpec& f, const UnitCircleGrid& grid) {
  std::vector<Complex> vals(static_cast<size_t>(grid.size));
  for (int n = 0; n < grid.size; ++n) vals[static_cast<size_t>(n)] = Complex(f.eval_t(grid.node(n)));
  return vals;
}

int round_up_even(int n) { return (n % 2 == 0) ? n : n + 1; }

// Largest frequency whose coefficient (on either side) is at or above the cut.
int last_significant_frequency(const Spectrum& s, double cut) {
  for (int k = s.ns / 2 - 1; k >= 1; --k) {
    if (std::abs(s.at(k)) >= cut || std::abs(s.at(-k)) >= cut) return k;
  }
  return 0;
}

}  // namespace

ApproxResult approximate(const TargetSpec& f, Parity parity, const ApproxOptions& options) {
  if (parity == Parity::None) throw InputError("approximate: parity must be even or odd");

  int d;
  if (options.degree_hint > 0) {
    d = options.degree_hint;
  } else {
    // The paper's grid is 40*d, but d is unknown before one transform; double
    // the grid until the top quarter of the spectrum has fallen below the
    // threshold, then read d off the decayed spectrum.
    int ns = round_up_even(options.initial_grid);
    Spectrum spec;
    for (;;) {
      UnitCircleGrid grid(ns);
      spec = analyze(sample_target(f, grid), grid);
      const double cut = options.threshold * spec.max_abs();
      bool top_quiet = true;
      for (int k = 3 * ns / 8; k <= ns / 2 - 1 && top_quiet; ++k) {
        if (std::abs(spec.at(k)) >= cut || std::abs(spec.at(-k)) >= cut) top_quiet = false;
      }
      if (top_quiet) break;
      ns *= 2;
      if (ns > options.max_grid)
        throw DegreeOverflowError(
            "approximate: no adequate degree below the grid cap; raise max_grid");
    }
    d = last_significant_frequency(spec, options.threshold * spec.max_abs());
  }
  if (d < 1) d = 1;
  if (parity_of_degree(d) != parity) ++d;

  // Final pass on the production grid.
  const int ns = round_up_even(std::max(options.ns_factor * d, 2 * d + 2));
  UnitCircleGrid grid(ns);
  const Spectrum spec = analyze(sample_target(f, grid), grid);
  const double gmax = spec.max_abs();

  double tail = 0.0;
  for (int k = d + 1; k <= ns / 2 - 1; ++k)
    tail = std::max({tail, std::abs(spec.at(k)), std::abs(spec.at(-k))});
  tail /= gmax;
  if (options.degree_hint == 0 && tail > options.threshold)
    throw DegreeOverflowError("approximate: spectrum tail above threshold on the final grid");

  // f(cos t) is even in t and real, so ghat_k is real and even in k up to
  // round-off. Symmetrize, then zero the wrong-parity entries exactly.
  std::vector<Complex> coeffs(static_cast<size_t>(2 * d + 1), Complex(0.0));
  double imag_defect = 0.0;
  const int wrong = (parity == Parity::Even) ? 1 : 0;
  for (int k = -d; k <= d; ++k) {
    if (((k % 2) + 2) % 2 == wrong) continue;
    imag_defect = std::max(imag_defect, std::abs(spec.at(k).imag()));
    coeffs[static_cast<size_t>(k + d)] = Complex(0.5 * (spec.at(k).real() + spec.at(-k).real()));
  }
  if (imag_defect > 1e-12 * gmax)
    throw InputError("approximate: target is not real-valued within tolerance");

  TrigPoly raw(d, std::move(coeffs), parity);
  const double norm = raw.linf_norm();
  if (!(norm > 0.0)) throw InputError("approximate: target has zero infinity norm");
  const double factor = 0.3 / norm;

  ApproxResult result;
  result.a = raw.scaled(factor);
  result.degree = d;
  result.scale = factor;
  result.tail_bound = tail;
  result.ns = ns;
  return result;
}

std::pair<std::function<double(double)>, std::function<double(double)>> parity_split(
    const TargetSpec& f) {
  auto even = [f](double x) { return 0.5 * (f.eval_x(x) + f.eval_x(-x)); };
  auto odd = [f](double x) { return 0.5 * (f.eval_x(x) - f.eval_x(-x)); };
  return {even, odd};
}

}  // namespace qsp
