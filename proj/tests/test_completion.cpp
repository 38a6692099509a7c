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

#include <cmath>
#include <random>

#include "doctest.h"
#include "qsp/errors.hpp"
#include "qsp/verify.hpp"

using namespace qsp;

namespace {

// The d=1 worked example: a = 0.3 cos t, b = 0.4 sin t. Then
// 1 - a^2 - b^2 = 0.875 + 0.035 cos 2t, and the two roots inside the unit
// circle solve u^2 + 50u + 1 = 0 in u = z^2, giving m = (v, 0, 1) with
// v = 25 - sqrt(624).
constexpr double kE1V = 0.020008006406406764;  // 25 - sqrt(624)

TrigPoly e1_a() {
  return TrigPoly(1, {Complex(0.15), Complex(0.0), Complex(0.15)}, Parity::Odd);
}

TrigPoly e1_b() { return make_b(1, BSpec{}); }

// Dense reference product for the FFT matvec.
std::vector<double> dense_matvec(const HankelSystem& sys, const std::vector<double>& v,
                                 bool transpose) {
  const int rows = transpose ? sys.cols : sys.rows;
  const int cols = transpose ? sys.rows : sys.cols;
  std::vector<double> y(static_cast<size_t>(rows), 0.0);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      y[static_cast<size_t>(i)] +=
          (transpose ? sys.entry(j, i) : sys.entry(i, j)) * v[static_cast<size_t>(j)];
  return y;
}

// Random real trig poly of exact parity with ||.||_inf = 0.3.
TrigPoly random_a(int d, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::vector<Complex> c(static_cast<size_t>(2 * d + 1), Complex(0.0));
  for (int k = d % 2; k <= d; k += 2) {
    double v = (k == d) ? (uni(rng) > 0 ? 1.0 : -1.0) * (0.5 + 0.5 * std::abs(uni(rng)))
                        : uni(rng);
    c[static_cast<size_t>(d + k)] = Complex(0.5 * v);
    c[static_cast<size_t>(d - k)] = Complex(0.5 * v);
  }
  TrigPoly a(d, std::move(c), parity_of_degree(d));
  return a.scaled(0.3 / a.linf_norm());
}

}  // namespace

TEST_CASE("make_b leading-only") {
  TrigPoly b1 = make_b(1, BSpec{});
  CHECK(b1.coeff(1) == Complex(0.0, -0.2));
  CHECK(b1.coeff(-1) == Complex(0.0, 0.2));

  TrigPoly b3 = make_b(3, BSpec{});
  CHECK(b3.coeff(3) == Complex(0.0, -0.2));
  CHECK(b3.coeff(1) == Complex(0.0));
  CHECK(b3.coeff(-1) == Complex(0.0));
  CHECK(b3.linf_norm() == doctest::Approx(0.4).epsilon(1e-10));
}

TEST_CASE("make_b randomized: dominant leading coefficient, bounded norm") {
  BSpec spec;
  spec.mode = BSpec::Mode::Randomized;
  spec.seed = 42;
  TrigPoly b = make_b(4, spec);
  CHECK(b.parity_pattern_ok());
  CHECK(b.linf_norm() <= 0.4 + 1e-12);
  // |b_4| = 0.4 dominates: sin-coefficient amplitude is 2|c_4|
  double lead = 2.0 * std::abs(b.coeff(4));
  CHECK(lead == doctest::Approx(0.4).epsilon(0.05));
  for (int k : {2}) CHECK(2.0 * std::abs(b.coeff(k)) <= 0.4 / (4.0 * 4.0) * 1.001);
  // deterministic under a fixed seed
  TrigPoly b2 = make_b(4, spec);
  for (int k = -4; k <= 4; ++k) CHECK(b.coeff(k) == b2.coeff(k));
}

TEST_CASE("make_b rejects d=0 and bad amplitudes") {
  CHECK_THROWS_AS(make_b(0, BSpec{}), InputError);
  BSpec bad;
  bad.amplitude = 0.6;
  CHECK_THROWS_AS(make_b(3, bad), InputError);
}

TEST_CASE("compute_ghat on E1 matches the Poisson-kernel expansion") {
  // 1/(A + B cos s) = (1/sqrt(A^2-B^2)) sum_k q^|k| e^{iks} with
  // q = (-A + sqrt(A^2-B^2))/B; here s = 2t, A = 0.875, B = 0.035.
  const double A = 0.875, B = 0.035;
  const double rt = std::sqrt(A * A - B * B);
  const double g0 = 1.0 / rt;
  const double q = (-A + rt) / B;

  HankelSystem sys = compute_ghat(e1_a(), e1_b(), 40);
  CHECK(sys.rows == 4);
  CHECK(sys.cols == 3);
  CHECK(g0 == doctest::Approx(1.143772).epsilon(1e-6));

  CHECK(sys.ghat[0] == doctest::Approx(0.0));                  // ghat_{-1}
  CHECK(sys.ghat[1] == doctest::Approx(g0 * q).epsilon(1e-12));  // ghat_{-2} ~ -0.022885
  CHECK(sys.ghat[1] == doctest::Approx(-0.022885).epsilon(1e-4));
  CHECK(sys.ghat[2] == doctest::Approx(0.0));
  CHECK(sys.ghat[3] == doctest::Approx(g0 * q * q).epsilon(1e-10));
  CHECK(sys.ghat[4] == doctest::Approx(0.0));  // odd frequencies all vanish
  CHECK(sys.ghat[5] == doctest::Approx(g0 * q * q * q).epsilon(1e-8));
}

TEST_CASE("compute_ghat degenerate and near-singular inputs") {
  // a = b = 0: g = 1, all negative-frequency coefficients vanish; the
  // degeneracy surfaces later as a rank error in solve_m.
  TrigPoly zero1 = TrigPoly::zero(1);
  HankelSystem sys = compute_ghat(zero1, zero1, 40);
  for (double v : sys.ghat) CHECK(std::abs(v) < 1e-15);
  CHECK_THROWS_AS(solve_m(sys), NormalizationError);

  // ||a|| too large -> scaling error
  TrigPoly big(1, {Complex(0.45), Complex(0.0), Complex(0.45)}, Parity::Odd);
  CHECK_THROWS_AS(compute_ghat(big, make_b(1, BSpec{}), 40), ScalingError);
}

TEST_CASE("hankel_matvec picks columns of the 3x3 Hankel of (1,2,3,4,5)") {
  HankelSystem sys;
  sys.ghat = {1, 2, 3, 4, 5};
  sys.rows = 3;
  sys.cols = 3;
  auto y1 = hankel_matvec(sys, {1, 0, 0});
  CHECK(y1[0] == doctest::Approx(1.0));
  CHECK(y1[1] == doctest::Approx(2.0));
  CHECK(y1[2] == doctest::Approx(3.0));
  auto y2 = hankel_matvec(sys, {0, 0, 1});
  CHECK(y2[0] == doctest::Approx(3.0));
  CHECK(y2[1] == doctest::Approx(4.0));
  CHECK(y2[2] == doctest::Approx(5.0));
  CHECK_THROWS_AS(hankel_matvec(sys, {1, 0}), InputError);
}

TEST_CASE("hankel_matvec FFT path vs dense oracle, 401 columns") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  HankelSystem sys;
  const int d = 200;
  sys.cols = 2 * d + 1;  // 401
  sys.rows = 2 * d + 2;
  sys.ghat.resize(static_cast<size_t>(sys.rows + sys.cols - 1));
  for (auto& v : sys.ghat) v = uni(rng);

  std::vector<double> v(static_cast<size_t>(sys.cols)), w(static_cast<size_t>(sys.rows));
  for (auto& x : v) x = uni(rng);
  for (auto& x : w) x = uni(rng);

  auto fwd = hankel_matvec(sys, v, false);
  auto fwd_ref = dense_matvec(sys, v, false);
  auto tr = hankel_matvec(sys, w, true);
  auto tr_ref = dense_matvec(sys, w, true);
  double scale = sys.max_abs() * static_cast<double>(sys.cols);
  for (size_t i = 0; i < fwd.size(); ++i) CHECK(std::abs(fwd[i] - fwd_ref[i]) < 1e-13 * scale);
  for (size_t i = 0; i < tr.size(); ++i) CHECK(std::abs(tr[i] - tr_ref[i]) < 1e-13 * scale);
}

TEST_CASE("solve_m on E1 recovers m = (v, 0, 1)") {
  HankelSystem sys = compute_ghat(e1_a(), e1_b(), 40);
  SolveStats stats;
  auto m = solve_m(sys, 0x1p-52, 1, &stats);
  REQUIRE(m.size() == 3);
  CHECK(m[0] == doctest::Approx(kE1V).epsilon(1e-10));
  CHECK(std::abs(m[1]) < 1e-12);
  CHECK(m[2] == 1.0);
  CHECK(stats.outer_iters <= 5);

  // Prony identity residual
  auto hm = hankel_matvec(sys, m);
  for (double v : hm) CHECK(std::abs(v) < 1e-10 * sys.max_abs() * std::sqrt(1.0 + kE1V * kE1V));
}

TEST_CASE("solve_m matches the companion-matrix oracle for random instances") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 19);  // 2..20
    TrigPoly a = random_a(d, rng);
    BSpec bspec;
    bspec.mode = BSpec::Mode::Randomized;
    bspec.seed = rng();
    TrigPoly b = make_b(d, bspec);
    int ns = 40 * d + (40 * d) % 2;
    HankelSystem sys = compute_ghat(a, b, ns);
    auto m = solve_m(sys, 0x1p-52, 123);
    auto m_ref = oracle_char_poly(a, b);
    REQUIRE(m.size() == m_ref.size());
    for (size_t i = 0; i < m.size(); ++i) CHECK(m[i] == doctest::Approx(m_ref[i]).epsilon(1e-8));
  }
}

TEST_CASE("complete on E1: alpha, c, d, and unitarity") {
  TrigPoly a = e1_a();
  TrigPoly b = e1_b();
  const std::vector<double> m = {kE1V, 0.0, 1.0};
  CompletionResult res = complete(a, b, m, 40);

  const double alpha_ref = 0.875 / (1.0 + kE1V * kE1V);
  CHECK(res.alpha == doctest::Approx(alpha_ref).epsilon(1e-12));
  CHECK(res.alpha == doctest::Approx(0.874650).epsilon(1e-5));
  CHECK(res.diagnostics.alpha_rel_spread <= 1e-8);

  // c(t) = sqrt(alpha)(1+v) cos t, d(t) = sqrt(alpha)(1-v) sin t
  const double sq = std::sqrt(alpha_ref);
  CHECK(res.p.coeff(1).imag() == doctest::Approx(0.5 * sq * (1.0 + kE1V)).epsilon(1e-12));
  CHECK(2.0 * res.p.coeff(1).imag() == doctest::Approx(0.953943).epsilon(1e-5));
  CHECK(res.p.coeff(1).real() == doctest::Approx(0.15));
  // r = b + id: coefficient at +1 is sqrt(alpha)(1-v)/2 - 0.2i
  CHECK(res.r.coeff(1).real() == doctest::Approx(0.5 * sq * (1.0 - kE1V)).epsilon(1e-12));
  CHECK(2.0 * res.r.coeff(1).real() == doctest::Approx(0.916513).epsilon(1e-5));
  CHECK(res.r.coeff(1).imag() == doctest::Approx(-0.2));

  CHECK(res.diagnostics.unitarity_defect <= 1e-10);
  CHECK(res.diagnostics.m_residual <= 1e-10);
}

TEST_CASE("complete with all roots at the origin needs constant 1-a^2-b^2") {
  // e(z) = z^d: 1 - a^2 - b^2 must be the constant alpha. A synthetic pair
  // with 1 - a^2 - b^2 = const does not exist among real trig polys with
  // d >= 1, so the mismatch must surface as a completion error.
  TrigPoly a = e1_a();
  TrigPoly b = e1_b();
  CHECK_THROWS_AS(complete(a, b, {0.0, 0.0, 1.0}, 40), CompletionError);
}

TEST_CASE("complete rejects a non-monic m") {
  CHECK_THROWS_AS(complete(e1_a(), e1_b(), {kE1V, 0.0, 2.0}, 40), InputError);
}

TEST_CASE("positivity floor holds for scaled inputs") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 5; ++trial) {
    const int d = 3 + static_cast<int>(rng() % 10);
    TrigPoly a = random_a(d, rng);
    TrigPoly b = make_b(d, BSpec{});
    UnitCircleGrid grid(40 * d + (40 * d) % 2);
    auto as = synthesize(a, grid);
    auto bs = synthesize(b, grid);
    for (int n = 0; n < grid.size; ++n) {
      double q = 1.0 - std::norm(as[static_cast<size_t>(n)]) - std::norm(bs[static_cast<size_t>(n)]);
      CHECK(q >= 0.75 - 1e-12);
    }
  }
}
