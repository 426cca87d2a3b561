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

#ifndef NOISEMIX_RESAMPLE_HPP_
#define NOISEMIX_RESAMPLE_HPP_

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "noisemix/types.hpp"

namespace noisemix {

// Windowed-sinc sample rate conversion (Kaiser window, beta = 8, 32
// zero-crossings per side, 512x oversampled kernel table with linear
// interpolation).  The output length is round(n * new_rate / old_rate),
// computed with integer arithmetic; sample positions use the exact rational
// n * old / new, so conversion is deterministic across platforms.  Asking for
// the input rate returns a bit-exact copy.
AudioBuffer resample(const AudioBuffer& in, int new_rate_hz);

// Band-limited interpolation of a complex sequence at fractional positions
// start + k * step (measured in input samples, step <= 1, i.e. the output is
// sampled at least as fast as the input).  Input samples outside the sequence
// are treated as zero, so callers should pad their input with enough guard
// samples to keep the region of interest away from the edges.
std::vector<std::complex<double>> bandlimited_interp(
    std::span<const std::complex<double>> in, double start, double step,
    std::size_t out_len);

}  // namespace noisemix

#endif  // NOISEMIX_RESAMPLE_HPP_
