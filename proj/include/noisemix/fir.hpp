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

#ifndef NOISEMIX_FIR_HPP_
#define NOISEMIX_FIR_HPP_

#include <complex>
#include <span>
#include <vector>

#include "noisemix/types.hpp"

namespace noisemix {

// Zeroth-order modified Bessel function of the first kind (Kaiser window).
double bessel_i0(double x);

// Linear-phase Kaiser lowpass, designed for 80 dB stopband attenuation with
// the transition band spanning [0.9, 1.1] * cutoff_hz (clipped at Nyquist).
// Odd tap count, unit DC gain.  Requires 0 < cutoff_hz < rate_hz / 2.
std::vector<double> design_lowpass_fir(double cutoff_hz, double rate_hz);

// Filters with group-delay compensation: output is time-aligned with the
// input and has the same length (edges see zero padding).
std::vector<double> fir_filter_same(std::span<const double> x,
                                    std::span<const double> taps);
std::vector<std::complex<double>> fir_filter_same(
    std::span<const std::complex<double>> x, std::span<const double> taps);

AudioBuffer lowpass(const AudioBuffer& buffer, double cutoff_hz);
std::vector<std::complex<double>> lowpass(
    std::span<const std::complex<double>> x, double cutoff_hz, double rate_hz);

}  // namespace noisemix

#endif  // NOISEMIX_FIR_HPP_
