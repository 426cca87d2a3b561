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

#ifndef NOISEMIX_TYPES_HPP_
#define NOISEMIX_TYPES_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

namespace noisemix {

// A mono sampled waveform.  Samples are dimensionless real amplitudes with
// nominal range [-1, 1]; quantization happens only at WAV write time.
struct AudioBuffer {
  std::vector<double> samples;
  int sample_rate_hz = 0;

  std::size_t size() const { return samples.size(); }
  bool empty() const { return samples.empty(); }
  double duration_s() const {
    return sample_rate_hz > 0
               ? static_cast<double>(samples.size()) / sample_rate_hz
               : 0.0;
  }
};

// A signal-to-noise ratio in decibels, 20*log10(rms(signal)/rms(noise)).
struct SnrDb {
  double value = 0.0;
};

// Seed for every randomized operation.  Identical seeds yield identical
// random streams (see rng.hpp for the fixed variate scheme).
struct Seed {
  std::uint64_t value = 0;
};

// The canonical SNR sweep used by the dataset pipeline, in dB.
inline const std::vector<double>& canonical_snr_grid() {
  static const std::vector<double> kGrid = {-30, -20, -10, -5, 0,
                                            5,   10,  20,  30};
  return kGrid;
}

// Precondition helpers.  `what` names the offending argument in the error.
void require_nonempty(const AudioBuffer& buffer, const char* what);
void require_finite(const AudioBuffer& buffer, const char* what);
void require_valid(const AudioBuffer& buffer, const char* what);

}  // namespace noisemix

#endif  // NOISEMIX_TYPES_HPP_
