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

#include "qsp/trig_poly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qsp/errors.hpp"
#include "qsp/fft.hpp"

namespace qsp {

UnitCircleGrid::UnitCircleGrid(int n) : size(n) {
  if (n <= 0 || n % 2 != 0) throw InputError("grid size must be a positive even integer");
}

double UnitCircleGrid::node(int n) const {
  return 2.0 * std::numbers::pi * static_cast<double>(n) / static_cast<double>(size);
}

Complex Spectrum::at(int k) const {
  int j = k + ns / 2 - 1;
  if (j < 0 || j >= ns) throw InputError("spectrum frequency out of range");
  return coeffs[static_cast<size_t>(j)];
}

double Spectrum::max_abs() const {
  double m = 0.0;
  for (const auto& c : coeffs) m = std::max(m, std::abs(c));
  return m;
}

TrigPoly::TrigPoly() : degree_(0), parity_(Parity::None), coeffs_(1, Complex(0.0)) {}

TrigPoly::TrigPoly(int degree, std::vector<Complex> coeffs, Parity parity)
    : degree_(degree), parity_(parity), coeffs_(std::move(coeffs)) {
  if (degree_ < 0) throw InputError("negative degree");
  if (coeffs_.size() != static_cast<size_t>(2 * degree_ + 1))
    throw InputError("coefficient count must be 2*degree+1");
}

TrigPoly TrigPoly::zero(int degree, Parity parity) {
  return TrigPoly(degree, std::vector<Complex>(2 * degree + 1, Complex(0.0)), parity);
}

TrigPoly TrigPoly::from_spectrum(const Spectrum& s, int degree, Parity parity) {
  if (degree > s.ns / 2 - 1) throw InputError("spectrum does not resolve requested degree");
  std::vector<Complex> c(2 * degree + 1);
  for (int k = -degree; k <= degree; ++k) c[static_cast<size_t>(k + degree)] = s.at(k);
  return TrigPoly(degree, std::move(c), parity);
}

Complex TrigPoly::coeff(int k) const {
  if (k < -degree_ || k > degree_) return Complex(0.0);
  return coeffs_[static_cast<size_t>(k + degree_)];
}

Complex TrigPoly::eval(double t) const {
  // Horner in z over k = -n..n: p(t) = z^{-n} * (c_{-n} + z*(c_{-n+1} + ...)).
  const Complex z = std::polar(1.0, t);
  Complex acc(0.0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc * std::polar(1.0, -static_cast<double>(degree_) * t);
}

TrigPoly TrigPoly::reversed() const {
  std::vector<Complex> c(coeffs_.rbegin(), coeffs_.rend());
  return TrigPoly(degree_, std::move(c), parity_);
}

double TrigPoly::linf_norm(int oversample) const {
  if (oversample < 4) throw InputError("oversample must be >= 4");
  int n = oversample * (2 * degree_ + 2);
  if (n % 2 != 0) ++n;
  UnitCircleGrid grid(n);
  const std::vector<Complex> vals = synthesize(*this, grid);
  const double h = 2.0 * std::numbers::pi / static_cast<double>(n);

  // The grid localizes every maximum of |p|; a ternary search in each
  // bracketing interval then recovers it to machine precision.
  double m = 0.0;
  for (int i = 0; i < n; ++i) {
    const double v = std::abs(vals[static_cast<size_t>(i)]);
    m = std::max(m, v);
    const double prev = std::abs(vals[static_cast<size_t>((i + n - 1) % n)]);
    const double next = std::abs(vals[static_cast<size_t>((i + 1) % n)]);
    if (v < prev || v < next) continue;
    double lo = grid.node(i) - h, hi = grid.node(i) + h;
    for (int it = 0; it < 80 && hi - lo > 1e-15; ++it) {
      const double t1 = lo + (hi - lo) / 3.0, t2 = hi - (hi - lo) / 3.0;
      if (std::abs(eval(t1)) < std::abs(eval(t2)))
        lo = t1;
      else
        hi = t2;
    }
    m = std::max(m, std::abs(eval(0.5 * (lo + hi))));
  }
  return m;
}

TrigPoly TrigPoly::scaled(Complex factor) const {
  std::vector<Complex> c(coeffs_);
  for (auto& v : c) v *= factor;
  return TrigPoly(degree_, std::move(c), parity_);
}

bool TrigPoly::parity_pattern_ok() const {
  if (parity_ == Parity::None) return true;
  const int wrong = (parity_ == Parity::Even) ? 1 : 0;
  for (int k = -degree_; k <= degree_; ++k) {
    if (((k % 2) + 2) % 2 == wrong && coeff(k) != Complex(0.0)) return false;
  }
  return true;
}

double TrigPoly::real_symmetry_defect() const {
  double m = 0.0;
  for (int k = 0; k <= degree_; ++k) m = std::max(m, std::abs(coeff(-k) - std::conj(coeff(k))));
  return m;
}

double TrigPoly::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

Spectrum analyze(const std::vector<Complex>& samples, const UnitCircleGrid& grid) {
  const int n = grid.size;
  if (samples.size() != static_cast<size_t>(n))
    throw InputError("sample count does not match grid size");
  std::vector<Complex> bins = fft::forward(samples);
  Spectrum s;
  s.ns = n;
  s.coeffs.resize(static_cast<size_t>(n));
  const double scale = 1.0 / static_cast<double>(n);
  for (int k = -n / 2 + 1; k <= n / 2; ++k) {
    const int bin = ((k % n) + n) % n;
    s.coeffs[static_cast<size_t>(k + n / 2 - 1)] = bins[static_cast<size_t>(bin)] * scale;
  }
  return s;
}

std::vector<Complex> synthesize(const TrigPoly& p, const UnitCircleGrid& grid) {
  const int n = grid.size;
  if (n < 2 * p.degree() + 2) throw InputError("grid too small: synthesis would alias");
  std::vector<Complex> bins(static_cast<size_t>(n), Complex(0.0));
  for (int k = -p.degree(); k <= p.degree(); ++k) {
    const int bin = ((k % n) + n) % n;
    bins[static_cast<size_t>(bin)] += p.coeff(k);
  }
  return fft::inverse(bins);
}

}  // namespace qsp
