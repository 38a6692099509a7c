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

#ifndef QSP_APPROX_HPP
#define QSP_APPROX_HPP

#include <functional>
#include <utility>

#include "qsp/targets.hpp"
#include "qsp/trig_poly.hpp"

namespace qsp {

struct ApproxResult {
  TrigPoly a;         // real-valued, declared parity, ||a||_inf = 0.3
  int degree = 0;     // d, same parity as the target
  double scale = 0;   // factor the target was multiplied by (0.3/||f||_inf)
  double tail_bound = 0;  // max dropped |ghat_k| relative to max |ghat|
  int ns = 0;             // final sampling grid size
};

struct ApproxOptions {
  double threshold = 1e-12;
  int initial_grid = 1024;  // doubling-search start
  int max_grid = 1 << 22;   // doubling-search cap
  int ns_factor = 40;       // final grid is ns_factor * d, rounded up to even
  int degree_hint = 0;      // >0 skips the doubling search (exact trig polys)
};

/// Truncated-Fourier approximation of the target on [-1,1]:
/// samples f(cos t) on a uniform circle grid, truncates the spectrum at the
/// smallest parity-consistent degree d whose tail falls below
/// threshold * max|ghat|, and rescales to ||a||_inf = 0.3.
ApproxResult approximate(const TargetSpec& f, Parity parity,
                         const ApproxOptions& options = {});

/// Even/odd split of a real function of x: (f(x)+f(-x))/2 and (f(x)-f(-x))/2.
std::pair<std::function<double(double)>, std::function<double(double)>> parity_split(
    const TargetSpec& f);

}  // namespace qsp

#endif
