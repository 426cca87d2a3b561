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

#ifndef NOISEMIX_FFT_HPP_
#define NOISEMIX_FFT_HPP_

#include <complex>
#include <span>
#include <vector>

#include "noisemix/types.hpp"

namespace noisemix {

// Thin FFTW wrappers; any transform length is accepted.  Plan creation is
// serialized internally, so these are safe to call from worker threads.
std::vector<std::complex<double>> fft(std::span<const std::complex<double>> in);
// Inverse transform, normalized by 1/N.
std::vector<std::complex<double>> ifft(std::span<const std::complex<double>> in);

// Full-length transform realization of the analytic signal: the complex
// sequence with one-sided spectrum whose real part reproduces the input to
// machine precision.
std::vector<std::complex<double>> analytic_signal(std::span<const double> x);
std::vector<std::complex<double>> analytic_signal(const AudioBuffer& buffer);

}  // namespace noisemix

#endif  // NOISEMIX_FFT_HPP_
