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

#ifndef QSP_TRIG_POLY_HPP
#define QSP_TRIG_POLY_HPP

#include <complex>
#include <vector>

namespace qsp {

using Complex = std::complex<double>;

enum class Parity { Even, Odd, None };

/// Parity of a degree: even degrees pair with Parity::Even, odd with Odd.
inline Parity parity_of_degree(int d) { return (d % 2 == 0) ? Parity::Even : Parity::Odd; }

/// Uniform grid of angles t_n = 2*pi*n/N on the unit circle, N even.
struct UnitCircleGrid {
  int size = 0;

  explicit UnitCircleGrid(int n);
  double node(int n) const;
};

/// Fourier coefficients of N samples, indexed -N/2 < k <= N/2.
struct Spectrum {
  int ns = 0;                   // grid size the coefficients came from
  std::vector<Complex> coeffs;  // coeffs[j] holds frequency k = j - ns/2 + 1

  Complex at(int k) const;
  double max_abs() const;
};

/// A Laurent/trigonometric polynomial sum_{k=-n}^{n} c_k z^k on z = e^{it}.
///
/// The carrier type for a, b, c, d, e, p, r, g throughout the pipeline.
/// Values are immutable after construction; all operations are pure.
class TrigPoly {
 public:
  TrigPoly();  // zero polynomial of degree 0

  /// coeffs has exactly 2*degree+1 entries, c_{-n}..c_{n} in order.
  TrigPoly(int degree, std::vector<Complex> coeffs, Parity parity = Parity::None);

  /// Zero polynomial of the given degree.
  static TrigPoly zero(int degree, Parity parity = Parity::None);

  /// Truncation of a spectrum to degree n (requires spectrum to resolve n).
  static TrigPoly from_spectrum(const Spectrum& s, int degree, Parity parity = Parity::None);

  int degree() const { return degree_; }
  Parity parity() const { return parity_; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }

  /// Coefficient of z^k; zero outside [-degree, degree].
  Complex coeff(int k) const;

  /// Direct summation sum_k c_k e^{ikt}; reference evaluation path.
  Complex eval(double t) const;

  /// The map z -> 1/z: coefficient k of the result is coefficient -k of *this.
  TrigPoly reversed() const;

  /// Max |p(t_n)| over a grid of size oversample*(2*degree+2), oversample >= 4.
  /// A lower bound on the true sup norm, tight to O(degree^-2 oversample^-2).
  double linf_norm(int oversample = 16) const;

  TrigPoly scaled(Complex factor) const;

  /// True iff the zero pattern of the coefficients matches the declared parity
  /// exactly (vacuously true for Parity::None).
  bool parity_pattern_ok() const;

  /// max_k |c_{-k} - conj(c_k)|; zero iff the polynomial is real-valued.
  double real_symmetry_defect() const;

  double max_abs_coeff() const;

 private:
  int degree_;
  Parity parity_;
  std::vector<Complex> coeffs_;
};

/// Forward transform: ghat_k = (1/N) sum_n samples[n] e^{-ik t_n}.
/// Exact inverse of synthesize up to round-off.
Spectrum analyze(const std::vector<Complex>& samples, const UnitCircleGrid& grid);

/// Evaluates p at every grid node; requires grid.size >= 2*degree + 2.
std::vector<Complex> synthesize(const TrigPoly& p, const UnitCircleGrid& grid);

}  // namespace qsp

#endif
