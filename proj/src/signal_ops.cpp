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

#include "noisemix/signal_ops.hpp"

#include <cmath>

#include "noisemix/errors.hpp"

namespace noisemix {

void require_nonempty(const AudioBuffer& buffer, const char* what) {
  if (buffer.samples.empty())
    fail("invalid-input", std::string(what) + " is empty");
}

void require_finite(const AudioBuffer& buffer, const char* what) {
  for (double s : buffer.samples) {
    if (!std::isfinite(s))
      fail("invalid-input", std::string(what) + " contains a non-finite sample");
  }
}

void require_valid(const AudioBuffer& buffer, const char* what) {
  require_nonempty(buffer, what);
  if (buffer.sample_rate_hz <= 0)
    fail("invalid-input", std::string(what) + " has non-positive sample rate");
  require_finite(buffer, what);
}

namespace {

// Kahan-compensated sum of squares.
double sum_squares(std::span<const double> x) {
  double sum = 0.0, comp = 0.0;
  for (double v : x) {
    double term = v * v - comp;
    double next = sum + term;
    comp = (next - sum) - term;
    sum = next;
  }
  return sum;
}

}  // namespace

double rms(std::span<const double> samples) {
  if (samples.empty()) fail("invalid-input", "rms of an empty buffer");
  return std::sqrt(sum_squares(samples) / static_cast<double>(samples.size()));
}

double rms(const AudioBuffer& buffer) {
  require_nonempty(buffer, "buffer");
  return rms(std::span<const double>(buffer.samples));
}

SnrDb snr_db(std::span<const double> signal, std::span<const double> noise) {
  double rs = rms(signal);
  double rn = rms(noise);
  if (rn <= 0.0) fail("undefined-snr", "noise has zero RMS");
  if (rs <= 0.0) fail("undefined-snr", "signal has zero RMS");
  return SnrDb{20.0 * std::log10(rs / rn)};
}

SnrDb snr_db(const AudioBuffer& signal, const AudioBuffer& noise) {
  require_nonempty(signal, "signal");
  require_nonempty(noise, "noise");
  return snr_db(std::span<const double>(signal.samples),
                std::span<const double>(noise.samples));
}

double target_noise_rms(double signal_rms, SnrDb target) {
  // sqrt(s^2 / 10^(t/10)) == s * 10^(-t/20)
  return signal_rms * std::pow(10.0, -target.value / 20.0);
}

AudioBuffer peak_normalize(const AudioBuffer& buffer) {
  require_nonempty(buffer, "buffer");
  double lo = buffer.samples[0], hi = buffer.samples[0];
  for (double s : buffer.samples) {
    lo = std::min(lo, s);
    hi = std::max(hi, s);
  }
  if (!(hi > lo))
    fail("degenerate-signal", "buffer has zero dynamic range");
  AudioBuffer out;
  out.sample_rate_hz = buffer.sample_rate_hz;
  out.samples.resize(buffer.samples.size());
  const double span = hi - lo;
  for (std::size_t i = 0; i < buffer.samples.size(); ++i)
    out.samples[i] = -1.0 + 2.0 * ((buffer.samples[i] - lo) / span);
  return out;
}

}  // namespace noisemix
