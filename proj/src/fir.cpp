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

#include "noisemix/fir.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "noisemix/errors.hpp"

namespace noisemix {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Stopband attenuation target for every internal lowpass.
constexpr double kStopbandDb = 80.0;

double sinc(double x) {
  if (std::abs(x) < 1e-12) return 1.0;
  return std::sin(kPi * x) / (kPi * x);
}

}  // namespace

double bessel_i0(double x) {
  // Power series; converges quickly for the argument range Kaiser windows
  // use (|x| <= beta ~ 8).
  const double half = x / 2.0;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 64; ++k) {
    term *= (half / k) * (half / k);
    sum += term;
    if (term < sum * 1e-18) break;
  }
  return sum;
}

std::vector<double> design_lowpass_fir(double cutoff_hz, double rate_hz) {
  if (!(rate_hz > 0.0) || !std::isfinite(rate_hz)) {
    fail("invalid-parameter", "sample rate must be positive and finite");
  }
  const double nyquist = rate_hz / 2.0;
  if (!(cutoff_hz > 0.0) || !(cutoff_hz < nyquist)) {
    fail("invalid-parameter",
         "lowpass cutoff must lie strictly between 0 and the Nyquist rate");
  }

  // Transition band around the cutoff; the stop edge may not cross Nyquist.
  double pass_edge = 0.9 * cutoff_hz;
  double stop_edge = std::min(1.1 * cutoff_hz, 0.9999 * nyquist);
  const double width = stop_edge - pass_edge;
  const double fc = (pass_edge + stop_edge) / 2.0;  // ideal -6 dB point

  // Kaiser design equations for the requested attenuation.
  const double beta = 0.1102 * (kStopbandDb - 8.7);
  const double delta_omega = 2.0 * kPi * width / rate_hz;
  std::size_t taps =
      static_cast<std::size_t>(std::ceil((kStopbandDb - 7.95) / (2.285 * delta_omega))) + 1;
  if (taps % 2 == 0) ++taps;
  if (taps < 3) taps = 3;
  if (taps > 65535) {
    fail("invalid-parameter", "lowpass cutoff is too narrow for this rate");
  }

  const double mid = static_cast<double>(taps - 1) / 2.0;
  const double i0_beta = bessel_i0(beta);
  const double f = 2.0 * fc / rate_hz;
  std::vector<double> h(taps);
  double dc = 0.0;
  for (std::size_t i = 0; i < taps; ++i) {
    const double t = static_cast<double>(i) - mid;
    const double r = t / mid;  // in [-1, 1]
    const double window = bessel_i0(beta * std::sqrt(std::max(0.0, 1.0 - r * r))) / i0_beta;
    h[i] = f * sinc(f * t) * window;
    dc += h[i];
  }
  // Normalize to exactly unit DC gain.
  for (double& v : h) v /= dc;
  return h;
}

std::vector<double> fir_filter_same(std::span<const double> x,
                                    std::span<const double> taps) {
  if (taps.empty()) fail("invalid-parameter", "FIR filter needs at least one tap");
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(x.size());
  const std::ptrdiff_t m = static_cast<std::ptrdiff_t>(taps.size());
  const std::ptrdiff_t mid = (m - 1) / 2;
  std::vector<double> y(x.size(), 0.0);
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    // y[i] = sum_j taps[j] * x[i + mid - j], zeros outside the input.
    const std::ptrdiff_t j_lo = std::max<std::ptrdiff_t>(0, i + mid - (n - 1));
    const std::ptrdiff_t j_hi = std::min<std::ptrdiff_t>(m - 1, i + mid);
    double acc = 0.0;
    for (std::ptrdiff_t j = j_lo; j <= j_hi; ++j) {
      acc += taps[static_cast<std::size_t>(j)] *
             x[static_cast<std::size_t>(i + mid - j)];
    }
    y[static_cast<std::size_t>(i)] = acc;
  }
  return y;
}

std::vector<std::complex<double>> fir_filter_same(
    std::span<const std::complex<double>> x, std::span<const double> taps) {
  if (taps.empty()) fail("invalid-parameter", "FIR filter needs at least one tap");
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(x.size());
  const std::ptrdiff_t m = static_cast<std::ptrdiff_t>(taps.size());
  const std::ptrdiff_t mid = (m - 1) / 2;
  std::vector<std::complex<double>> y(x.size(), {0.0, 0.0});
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const std::ptrdiff_t j_lo = std::max<std::ptrdiff_t>(0, i + mid - (n - 1));
    const std::ptrdiff_t j_hi = std::min<std::ptrdiff_t>(m - 1, i + mid);
    double re = 0.0;
    double im = 0.0;
    for (std::ptrdiff_t j = j_lo; j <= j_hi; ++j) {
      const double t = taps[static_cast<std::size_t>(j)];
      const std::complex<double>& v = x[static_cast<std::size_t>(i + mid - j)];
      re += t * v.real();
      im += t * v.imag();
    }
    y[static_cast<std::size_t>(i)] = {re, im};
  }
  return y;
}

AudioBuffer lowpass(const AudioBuffer& buffer, double cutoff_hz) {
  require_valid(buffer, "buffer");
  const std::vector<double> taps =
      design_lowpass_fir(cutoff_hz, static_cast<double>(buffer.sample_rate_hz));
  AudioBuffer out;
  out.sample_rate_hz = buffer.sample_rate_hz;
  out.samples = fir_filter_same(std::span<const double>(buffer.samples), taps);
  return out;
}

std::vector<std::complex<double>> lowpass(
    std::span<const std::complex<double>> x, double cutoff_hz, double rate_hz) {
  const std::vector<double> taps = design_lowpass_fir(cutoff_hz, rate_hz);
  return fir_filter_same(x, taps);
}

}  // namespace noisemix
