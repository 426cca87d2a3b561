// Copyright 2026 The Noisemix Authors
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

#include "noisemix/fft.hpp"

#include <fftw3.h>

#include <mutex>

#include "noisemix/errors.hpp"

namespace noisemix {

namespace {

// FFTW plan creation/destruction is not thread-safe; execution is.
std::mutex& plan_mutex() {
  static std::mutex m;
  return m;
}

std::vector<std::complex<double>> transform(
    std::span<const std::complex<double>> in, int sign) {
  if (in.empty()) fail("invalid-input", "FFT of an empty sequence");
  const auto n = static_cast<int>(in.size());
  std::vector<std::complex<double>> out(in.size());

  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(plan_mutex());
    plan = fftw_plan_dft_1d(
        n,
        reinterpret_cast<fftw_complex*>(
            const_cast<std::complex<double>*>(in.data())),
        reinterpret_cast<fftw_complex*>(out.data()), sign,
        FFTW_ESTIMATE | FFTW_PRESERVE_INPUT);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(plan_mutex());
    fftw_destroy_plan(plan);
  }
  return out;
}

}  // namespace

std::vector<std::complex<double>> fft(
    std::span<const std::complex<double>> in) {
  return transform(in, FFTW_FORWARD);
}

std::vector<std::complex<double>> ifft(
    std::span<const std::complex<double>> in) {
  auto out = transform(in, FFTW_BACKWARD);
  const double scale = 1.0 / static_cast<double>(in.size());
  for (auto& v : out) v *= scale;
  return out;
}

std::vector<std::complex<double>> analytic_signal(std::span<const double> x) {
  if (x.empty()) fail("invalid-input", "analytic signal of an empty buffer");
  std::vector<std::complex<double>> cx(x.begin(), x.end());
  auto spectrum = fft(cx);

  // One-sided spectrum: keep DC (and Nyquist for even N), double the
  // positive frequencies, zero the negative ones.
  const std::size_t n = spectrum.size();
  const std::size_t half = n / 2;
  for (std::size_t k = 1; k < n; ++k) {
    if (k < half || (k == half && n % 2 == 1))
      spectrum[k] *= 2.0;
    else if (k > half)
      spectrum[k] = 0.0;
  }
  return ifft(spectrum);
}

std::vector<std::complex<double>> analytic_signal(const AudioBuffer& buffer) {
  require_nonempty(buffer, "buffer");
  return analytic_signal(std::span<const double>(buffer.samples));
}

}  // namespace noisemix
