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

#include "noisemix/resample.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "noisemix/errors.hpp"
#include "noisemix/fir.hpp"

namespace noisemix {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Kernel parameters: Kaiser beta 8 (~80 dB sidelobes), 32 sinc zero
// crossings per side, 512 table entries per crossing.
constexpr int kZeroCrossings = 32;
constexpr int kTableOversample = 512;

// Table of sinc(s) * kaiser(s / kZeroCrossings) for s in [0, kZeroCrossings],
// step 1 / kTableOversample, with one trailing zero as interpolation guard.
const std::vector<double>& kernel_table() {
  static const std::vector<double> table = [] {
    constexpr double beta = 8.0;
    const double i0_beta = bessel_i0(beta);
    const std::size_t n =
        static_cast<std::size_t>(kZeroCrossings) * kTableOversample + 2;
    std::vector<double> t(n, 0.0);
    for (std::size_t j = 0; j + 1 < n; ++j) {
      const double s = static_cast<double>(j) / kTableOversample;
      const double sinc = (s == 0.0) ? 1.0 : std::sin(kPi * s) / (kPi * s);
      const double r = s / kZeroCrossings;
      const double window =
          bessel_i0(beta * std::sqrt(std::max(0.0, 1.0 - r * r))) / i0_beta;
      t[j] = sinc * window;
    }
    return t;
  }();
  return table;
}

// Windowed-sinc weight at scaled distance |s| (sinc periods), interpolated
// linearly from the table.  Zero outside the kernel support.
inline double kernel_at(double s) {
  const std::vector<double>& table = kernel_table();
  const double pos = std::abs(s) * kTableOversample;
  const std::size_t idx = static_cast<std::size_t>(pos);
  if (idx + 1 >= table.size()) return 0.0;
  const double frac = pos - static_cast<double>(idx);
  return table[idx] + frac * (table[idx + 1] - table[idx]);
}

}  // namespace

AudioBuffer resample(const AudioBuffer& in, int new_rate_hz) {
  require_valid(in, "input");
  if (new_rate_hz <= 0) {
    fail("invalid-parameter", "target sample rate must be positive");
  }
  if (new_rate_hz == in.sample_rate_hz) return in;

  const std::uint64_t n = in.samples.size();
  const std::uint64_t old_rate = static_cast<std::uint64_t>(in.sample_rate_hz);
  const std::uint64_t new_rate = static_cast<std::uint64_t>(new_rate_hz);
  // round(n * new / old), exact in integers.
  const std::uint64_t out_len = (n * new_rate + old_rate / 2) / old_rate;

  AudioBuffer out;
  out.sample_rate_hz = new_rate_hz;
  out.samples.assign(static_cast<std::size_t>(out_len), 0.0);
  if (out_len == 0) return out;

  // When decimating, shrink the kernel cutoff to the output Nyquist rate and
  // widen its support correspondingly.
  const double cutoff_scale =
      std::min(1.0, static_cast<double>(new_rate) / static_cast<double>(old_rate));
  const double half_width = kZeroCrossings / cutoff_scale;

  for (std::uint64_t k = 0; k < out_len; ++k) {
    // Source position of output sample k: t = k * old / new input samples,
    // split into an exact integer quotient and a remainder.
    const std::uint64_t num = k * old_rate;
    const std::uint64_t q = num / new_rate;
    const double frac =
        static_cast<double>(num % new_rate) / static_cast<double>(new_rate);
    const double t = static_cast<double>(q) + frac;

    const std::int64_t i_lo =
        std::max<std::int64_t>(0, static_cast<std::int64_t>(std::ceil(t - half_width)));
    const std::int64_t i_hi = std::min<std::int64_t>(
        static_cast<std::int64_t>(n) - 1,
        static_cast<std::int64_t>(std::floor(t + half_width)));
    double acc = 0.0;
    for (std::int64_t i = i_lo; i <= i_hi; ++i) {
      const double s = (static_cast<double>(i) - t) * cutoff_scale;
      acc += kernel_at(s) * in.samples[static_cast<std::size_t>(i)];
    }
    out.samples[static_cast<std::size_t>(k)] = acc * cutoff_scale;
  }
  return out;
}

std::vector<std::complex<double>> bandlimited_interp(
    std::span<const std::complex<double>> in, double start, double step,
    std::size_t out_len) {
  if (!(step > 0.0) || step > 1.0 || !std::isfinite(step) || !std::isfinite(start)) {
    fail("invalid-parameter", "interpolation step must lie in (0, 1]");
  }
  std::vector<std::complex<double>> out(out_len, {0.0, 0.0});
  const std::int64_t n = static_cast<std::int64_t>(in.size());
  for (std::size_t k = 0; k < out_len; ++k) {
    const double t = start + static_cast<double>(k) * step;
    const std::int64_t i_lo =
        std::max<std::int64_t>(0, static_cast<std::int64_t>(std::ceil(t - kZeroCrossings)));
    const std::int64_t i_hi = std::min<std::int64_t>(
        n - 1, static_cast<std::int64_t>(std::floor(t + kZeroCrossings)));
    double re = 0.0;
    double im = 0.0;
    for (std::int64_t i = i_lo; i <= i_hi; ++i) {
      const double w = kernel_at(static_cast<double>(i) - t);
      const std::complex<double>& v = in[static_cast<std::size_t>(i)];
      re += w * v.real();
      im += w * v.imag();
    }
    out[k] = {re, im};
  }
  return out;
}

}  // namespace noisemix
