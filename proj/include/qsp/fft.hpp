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

#ifndef QSP_FFT_HPP
#define QSP_FFT_HPP

#include <complex>
#include <vector>

namespace qsp::fft {

/// Unnormalized forward DFT: out[k] = sum_n in[n] exp(-2*pi*i*k*n/N).
/// Any length N >= 1. Re-entrant (the FFTW planner is serialized internally).
std::vector<std::complex<double>> forward(const std::vector<std::complex<double>>& in);

/// Unnormalized inverse DFT: out[n] = sum_k in[k] exp(+2*pi*i*k*n/N).
std::vector<std::complex<double>> inverse(const std::vector<std::complex<double>>& in);

}  // namespace qsp::fft

#endif
