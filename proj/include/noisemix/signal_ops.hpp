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

#ifndef NOISEMIX_SIGNAL_OPS_HPP_
#define NOISEMIX_SIGNAL_OPS_HPP_

#include <span>

#include "noisemix/types.hpp"

namespace noisemix {

// sqrt(mean(x^2)) with compensated summation so long buffers stay accurate.
double rms(std::span<const double> samples);
double rms(const AudioBuffer& buffer);  // empty -> "invalid-input"

// 20*log10(rms(signal)/rms(noise)).  Zero-RMS on either side is undefined.
SnrDb snr_db(const AudioBuffer& signal, const AudioBuffer& noise);
SnrDb snr_db(std::span<const double> signal, std::span<const double> noise);

// RMS a noise floor must have so that signal_rms over it measures `target`:
// sqrt(signal_rms^2 / 10^(target/10)).  Total over signal_rms >= 0.
double target_noise_rms(double signal_rms, SnrDb target);

// Affine map of [min, max] onto [-1, 1]; the extremes land exactly on -1/+1.
// Constant buffers have no dynamic range -> "degenerate-signal".
AudioBuffer peak_normalize(const AudioBuffer& buffer);

}  // namespace noisemix

#endif  // NOISEMIX_SIGNAL_OPS_HPP_
