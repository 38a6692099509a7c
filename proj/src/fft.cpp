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

#include "qsp/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace qsp::fft {
namespace {

// The FFTW planner is not thread-safe; plans are cached per (size, sign) and
// executed with the new-array interface. FFTW_UNALIGNED so execution does not
// depend on caller buffer alignment.
class PlanCache {
 public:
  static PlanCache& instance() {
    static PlanCache cache;
    return cache;
  }

  void execute(int sign, const std::vector<std::complex<double>>& in,
               std::vector<std::complex<double>>& out) {
    const size_t n = in.size();
    out.resize(n);
    fftw_plan plan;
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto key = std::make_pair(n, sign);
      auto it = plans_.find(key);
      if (it == plans_.end()) {
        // Planning with FFTW_ESTIMATE does not touch the buffers, so the
        // caller arrays can be used directly as the prototype.
        plan = fftw_plan_dft_1d(
            static_cast<int>(n),
            reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in.data())),
            reinterpret_cast<fftw_complex*>(out.data()), sign,
            FFTW_ESTIMATE | FFTW_UNALIGNED);
        plans_.emplace(key, plan);
      } else {
        plan = it->second;
      }
    }
    fftw_execute_dft(
        plan,
        reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in.data())),
        reinterpret_cast<fftw_complex*>(out.data()));
  }

 private:
  PlanCache() = default;
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }
  std::mutex mutex_;
  std::map<std::pair<size_t, int>, fftw_plan> plans_;
};

}  // namespace

std::vector<std::complex<double>> forward(const std::vector<std::complex<double>>& in) {
  std::vector<std::complex<double>> out;
  PlanCache::instance().execute(FFTW_FORWARD, in, out);
  return out;
}

std::vector<std::complex<double>> inverse(const std::vector<std::complex<double>>& in) {
  std::vector<std::complex<double>> out;
  PlanCache::instance().execute(FFTW_BACKWARD, in, out);
  return out;
}

}  // namespace qsp::fft
