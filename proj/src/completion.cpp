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

#include "qsp/completion.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "qsp/errors.hpp"
#include "qsp/fft.hpp"

namespace qsp {
namespace {

int round_up_even(int n) { return (n % 2 == 0) ? n : n + 1; }

int next_pow2(int n) {
  int p = 1;
  while (p < n) p *= 2;
  return p;
}

// Correlation kernel shared by H and H^T: y_i = sum_j ghat[i+j] v_j. The FFT
// of the zero-padded ghat sequence is computed once and reused per product.
class HankelOperator {
 public:
  explicit HankelOperator(const HankelSystem& sys)
      : rows_(sys.rows), cols_(sys.cols), kernel_len_(static_cast<int>(sys.ghat.size())) {
    fft_len_ = next_pow2(kernel_len_ + std::max(rows_, cols_));
    std::vector<Complex> padded(static_cast<size_t>(fft_len_), Complex(0.0));
    for (int j = 0; j < kernel_len_; ++j) padded[static_cast<size_t>(j)] = Complex(sys.ghat[static_cast<size_t>(j)]);
    kernel_fft_ = fft::forward(padded);
  }

  std::vector<double> apply(const std::vector<double>& v, bool transpose) const {
    const int in_dim = transpose ? rows_ : cols_;
    const int out_dim = transpose ? cols_ : rows_;
    if (v.size() != static_cast<size_t>(in_dim)) throw InputError("hankel_matvec: length mismatch");
    std::vector<Complex> padded(static_cast<size_t>(fft_len_), Complex(0.0));
    for (int j = 0; j < in_dim; ++j)
      padded[static_cast<size_t>(in_dim - 1 - j)] = Complex(v[static_cast<size_t>(j)]);
    std::vector<Complex> vf = fft::forward(padded);
    for (int k = 0; k < fft_len_; ++k)
      vf[static_cast<size_t>(k)] *= kernel_fft_[static_cast<size_t>(k)];
    std::vector<Complex> conv = fft::inverse(vf);
    std::vector<double> out(static_cast<size_t>(out_dim));
    const double scale = 1.0 / static_cast<double>(fft_len_);
    for (int i = 0; i < out_dim; ++i)
      out[static_cast<size_t>(i)] = conv[static_cast<size_t>(in_dim - 1 + i)].real() * scale;
    return out;
  }

 private:
  int rows_, cols_, kernel_len_, fft_len_;
  std::vector<Complex> kernel_fft_;
};

double norm2(const std::vector<double>& v) {
  return std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
}

// One inverse-power step: solves (eps I + H^T H) x = b by CG with the
// recursive residual as the stopping test.
std::vector<double> cg_solve(const HankelOperator& op, double eps, const std::vector<double>& b,
                             long* iters) {
  const size_t n = b.size();
  const double bnorm = norm2(b);
  std::vector<double> x(n, 0.0), r(b), p(b);
  double rs = std::inner_product(r.begin(), r.end(), r.begin(), 0.0);
  constexpr int kMaxIters = 500;
  constexpr double kRelTol = 1e-12;
  // The recursive residual keeps decreasing long after the true residual has
  // saturated; for the near-singular regularized system that is the usable
  // stopping quantity. A stall (or even a round-off blow-up) still leaves x
  // pointing into the small-singular-value subspace, which is all the outer
  // power iteration needs, so a stalled solve is returned rather than
  // rejected; the outer iteration has its own convergence test.
  for (int it = 0; it < kMaxIters; ++it) {
    std::vector<double> ap = op.apply(op.apply(p, false), true);
    for (size_t i = 0; i < n; ++i) ap[i] += eps * p[i];
    const double pap = std::inner_product(p.begin(), p.end(), ap.begin(), 0.0);
    if (!(pap > 0.0)) break;  // curvature lost to round-off
    const double step = rs / pap;
    for (size_t i = 0; i < n; ++i) {
      x[i] += step * p[i];
      r[i] -= step * ap[i];
    }
    const double rs_new = std::inner_product(r.begin(), r.end(), r.begin(), 0.0);
    if (iters) ++*iters;
    if (std::sqrt(rs_new) <= kRelTol * bnorm) return x;
    const double beta = rs_new / rs;
    rs = rs_new;
    for (size_t i = 0; i < n; ++i) p[i] = r[i] + beta * p[i];
  }
  return x;
}

}  // namespace

double HankelSystem::frobenius_norm() const {
  double acc = 0.0;
  const int len = static_cast<int>(ghat.size());
  for (int k = 0; k < len; ++k) {
    const int mult = std::min({k + 1, rows, cols, len - k});
    acc += mult * ghat[static_cast<size_t>(k)] * ghat[static_cast<size_t>(k)];
  }
  return std::sqrt(acc);
}

double HankelSystem::max_abs() const {
  double m = 0.0;
  for (double v : ghat) m = std::max(m, std::abs(v));
  return m;
}

TrigPoly make_b(int d, const BSpec& spec) {
  if (d < 1) throw InputError("make_b: degree must be >= 1 (constant targets need no completion)");
  if (!(spec.amplitude > 0.0 && spec.amplitude <= 0.5))
    throw InputError("make_b: amplitude must lie in (0, 0.5]");

  // sin(kt) = (z^k - z^{-k})/(2i): coefficient -i/2 at +k, +i/2 at -k.
  std::vector<Complex> coeffs(static_cast<size_t>(2 * d + 1), Complex(0.0));
  auto add_sin = [&](int k, double amp) {
    coeffs[static_cast<size_t>(k + d)] += Complex(0.0, -0.5 * amp);
    coeffs[static_cast<size_t>(-k + d)] += Complex(0.0, 0.5 * amp);
  };

  add_sin(d, spec.amplitude);
  if (spec.mode == BSpec::Mode::Randomized) {
    std::mt19937_64 rng(spec.seed);
    std::uniform_real_distribution<double> uni(-spec.amplitude / (4.0 * d),
                                               spec.amplitude / (4.0 * d));
    for (int k = d - 2; k >= 1; k -= 2) add_sin(k, uni(rng));
  }

  TrigPoly b(d, std::move(coeffs), parity_of_degree(d));
  const double norm = b.linf_norm();
  if (norm > spec.amplitude * (1.0 + 1e-12)) b = b.scaled(spec.amplitude / norm);
  return b;
}

HankelSystem compute_ghat(const TrigPoly& a, const TrigPoly& b, int ns, int rows_l) {
  const int d = std::max(a.degree(), b.degree());
  const int l = (rows_l > 0) ? rows_l : 2 * d + 2;
  if (l < 2 * d + 1) throw InputError("compute_ghat: need at least 2d+1 rows");
  const int needed = 2 * d + l;  // lowest frequency index used
  if (ns % 2 != 0 || ns <= 2 * needed)
    throw InputError("compute_ghat: grid too small to resolve ghat_{-(2d+l)}");

  UnitCircleGrid grid(ns);
  const std::vector<Complex> as = synthesize(a, grid);
  const std::vector<Complex> bs = synthesize(b, grid);
  std::vector<Complex> g(static_cast<size_t>(ns));
  double qmin = 1.0;
  for (int n = 0; n < ns; ++n) {
    const double av = as[static_cast<size_t>(n)].real();
    const double bv = bs[static_cast<size_t>(n)].real();
    const double q = 1.0 - av * av - bv * bv;
    qmin = std::min(qmin, q);
    g[static_cast<size_t>(n)] = Complex(1.0 / q);
  }
  if (qmin < 0.5)
    throw ScalingError("compute_ghat: 1 - a^2 - b^2 dips below 0.5; reduce ||a|| or ||b||");

  const Spectrum spec = analyze(g, grid);
  const double gmax = spec.max_abs();
  HankelSystem sys;
  sys.rows = l;
  sys.cols = 2 * d + 1;
  sys.ghat.resize(static_cast<size_t>(needed));
  double imag_defect = 0.0;
  for (int j = 0; j < needed; ++j) {
    const Complex c = spec.at(-(j + 1));
    imag_defect = std::max(imag_defect, std::abs(c.imag()));
    sys.ghat[static_cast<size_t>(j)] = c.real();
  }
  if (imag_defect > 1e-13 * gmax)
    throw InputError("compute_ghat: ghat has a non-negligible imaginary part");
  return sys;
}

std::vector<double> hankel_matvec(const HankelSystem& sys, const std::vector<double>& v,
                                  bool transpose) {
  return HankelOperator(sys).apply(v, transpose);
}

std::vector<double> solve_m(const HankelSystem& sys, double eps_scale, uint64_t seed,
                            SolveStats* stats) {
  const int n = sys.cols;
  const double fro = sys.frobenius_norm();
  if (!(fro > 0.0)) throw NormalizationError("solve_m: degenerate system, ghat vanishes");
  const double eps = (eps_scale * fro) * (eps_scale * fro);
  const HankelOperator op(sys);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::vector<double> m(static_cast<size_t>(n));
  for (auto& v : m) v = uni(rng);
  const double n0 = norm2(m);
  for (auto& v : m) v /= n0;

  constexpr int kMaxOuter = 20;
  constexpr double kStopTol = 4 * 0x1p-52;
  long cg_total = 0;
  int outer = 0;
  double last_diff = 1.0;
  bool converged = false;
  for (; outer < kMaxOuter; ++outer) {
    std::vector<double> x = cg_solve(op, eps, m, &cg_total);
    const double xn = norm2(x);
    if (!(xn > 0.0)) throw NormalizationError("solve_m: iterate collapsed to zero");
    double diff_plus = 0.0, diff_minus = 0.0;
    for (size_t i = 0; i < m.size(); ++i) {
      const double nv = x[i] / xn;
      diff_plus = std::max(diff_plus, std::abs(nv - m[i]));
      diff_minus = std::max(diff_minus, std::abs(nv + m[i]));
      m[i] = nv;
    }
    const double diff = std::min(diff_plus, diff_minus);
    // Converged outright, or stalled at the round-off plateau left by the
    // inexact inner solves; both leave the direction fully resolved.
    if (diff <= kStopTol || (diff <= 1e-10 && diff >= 0.5 * last_diff)) {
      ++outer;
      converged = true;
      break;
    }
    last_diff = diff;
  }
  if (!converged && last_diff > 1e-8)
    throw ConditioningError("solve_m: inverse power iteration failed to converge");
  if (stats) {
    stats->outer_iters = outer;
    stats->cg_iters_total = cg_total;
  }

  const double lead = m.back();
  if (std::abs(lead) < 1e-8)
    throw NormalizationError("solve_m: negligible leading coefficient; b is a bad choice");
  for (auto& v : m) v /= lead;
  return m;
}

CompletionResult complete(const TrigPoly& a, const TrigPoly& b, const std::vector<double>& m,
                          int ns) {
  if (m.size() % 2 != 1 || m.size() < 3) throw InputError("complete: m must have odd length >= 3");
  const int d = static_cast<int>(m.size() - 1) / 2;
  if (std::abs(m.back() - 1.0) > 1e-12) throw InputError("complete: m must be monic");
  if (a.degree() > d || b.degree() > d) throw InputError("complete: degree of a or b exceeds m's");

  // e(z) = z^{-d} m(z): coefficient of z^k is m[k+d].
  std::vector<Complex> ec(static_cast<size_t>(2 * d + 1));
  for (int k = -d; k <= d; ++k) ec[static_cast<size_t>(k + d)] = Complex(m[static_cast<size_t>(k + d)]);
  const TrigPoly e(d, std::move(ec), Parity::None);

  if (ns <= 0) ns = round_up_even(std::max(40 * d, 4 * d + 4));
  UnitCircleGrid grid(ns);
  const std::vector<Complex> es = synthesize(e, grid);
  const std::vector<Complex> ers = synthesize(e.reversed(), grid);
  const std::vector<Complex> as = synthesize(a, grid);
  const std::vector<Complex> bs = synthesize(b, grid);

  // alpha is the pointwise ratio (1-a^2-b^2)/(e(z) e(1/z)); constant iff m is
  // the true characteristic polynomial. The grid mean suppresses round-off.
  std::vector<double> ratios(static_cast<size_t>(ns));
  double alpha = 0.0;
  for (int n = 0; n < ns; ++n) {
    const double av = as[static_cast<size_t>(n)].real();
    const double bv = bs[static_cast<size_t>(n)].real();
    const double q = 1.0 - av * av - bv * bv;
    const Complex den = es[static_cast<size_t>(n)] * ers[static_cast<size_t>(n)];
    ratios[static_cast<size_t>(n)] = (q / den).real();
    alpha += ratios[static_cast<size_t>(n)];
  }
  alpha /= ns;
  double spread = 0.0;
  for (double v : ratios) spread = std::max(spread, std::abs(v - alpha));
  if (!(alpha > 0.0) || spread / alpha > 1e-8)
    throw CompletionError("complete: alpha is not constant; m is not the characteristic polynomial");

  // c = sqrt(alpha)(e(z)+e(1/z))/2, d = sqrt(alpha)(e(z)-e(1/z))/(2i).
  const double sq = std::sqrt(alpha);
  const Parity par = parity_of_degree(d);
  std::vector<Complex> pc(static_cast<size_t>(2 * d + 1)), rc(static_cast<size_t>(2 * d + 1));
  for (int k = -d; k <= d; ++k) {
    const double ek = m[static_cast<size_t>(k + d)];
    const double erk = m[static_cast<size_t>(d - k)];
    const double cv = sq * 0.5 * (ek + erk);   // coeff of c at k
    const double idv = sq * 0.5 * (ek - erk);  // coeff of i*d at k: i*(e-erev)/(2i) = (e-erev)/2
    pc[static_cast<size_t>(k + d)] = a.coeff(k) + Complex(0.0, cv);
    rc[static_cast<size_t>(k + d)] = b.coeff(k) + Complex(idv, 0.0);
  }
  CompletionResult result;
  result.p = TrigPoly(d, std::move(pc), par);
  result.r = TrigPoly(d, std::move(rc), par);
  result.alpha = alpha;
  result.m = m;
  result.diagnostics.alpha_rel_spread = spread / alpha;

  // Unitarity certificate on the grid.
  const std::vector<Complex> ps = synthesize(result.p, grid);
  const std::vector<Complex> rs = synthesize(result.r, grid);
  double defect = 0.0;
  for (int n = 0; n < ns; ++n) {
    const double u = std::norm(ps[static_cast<size_t>(n)]) + std::norm(rs[static_cast<size_t>(n)]);
    defect = std::max(defect, std::abs(u - 1.0));
  }
  result.diagnostics.unitarity_defect = defect;

  // Residual of the Prony identity H m = 0 for the returned m.
  if (ns > 2 * (4 * d + 2)) {
    const HankelSystem sys = compute_ghat(a, b, ns);
    const std::vector<double> hm = hankel_matvec(sys, m, false);
    double res = 0.0;
    for (double v : hm) res = std::max(res, std::abs(v));
    result.diagnostics.m_residual = res / (sys.max_abs() * norm2(m));
  }
  return result;
}

}  // namespace qsp
