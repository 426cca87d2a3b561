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

#ifndef NOISEMIX_HF_CHANNEL_HPP_
#define NOISEMIX_HF_CHANNEL_HPP_

#include <complex>
#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "noisemix/rng.hpp"
#include "noisemix/types.hpp"

namespace noisemix {

// One propagation path of the simulated ionospheric channel: a delayed copy
// of the signal multiplied by an independent complex Gaussian fading process
// with a Gaussian Doppler spectrum (Watterson model).
struct PathSpec {
  double gain = 1.0;              // linear amplitude weight
  double delay_s = 0.0;           // arrival-time offset, seconds
  double doppler_spread_hz = 0.0; // two-sided fading-spectrum width (2*sigma)
  double doppler_shift_hz = 0.0;  // fading-spectrum center offset
};

struct ChannelPreset {
  std::string name;
  std::vector<PathSpec> paths;
  double noise_bandwidth_hz = 3000.0;
  int processing_rate_hz = 8000;
};

// The two standardized HF test channels this tool ships with: both use two
// equally weighted independently fading paths with zero Doppler shift.
//   ccir-flutter: differential delay 0.5 ms, Doppler spread 10.0 Hz
//   ccir-poor:    differential delay 2 ms,   Doppler spread 1.0 Hz
ChannelPreset ccir_flutter();
ChannelPreset ccir_poor();
const std::vector<ChannelPreset>& builtin_presets();

// Checks preset invariants (at least one path, non-negative delays and
// spreads, noise bandwidth below the processing Nyquist rate) and rescales
// the gains so the path mean powers sum to 1.  Throws invalid-parameter on
// violation.
ChannelPreset validate_preset(const ChannelPreset& preset);

// Plain-text preset files: `key = value` lines with `#` comments.
// Recognized keys: name, processing_rate_hz, noise_bandwidth_hz, and per
// path `path<N>.gain`, `path<N>.delay_ms`, `path<N>.doppler_spread_hz`,
// `path<N>.doppler_shift_hz` with N = 1, 2, ...  format_preset emits this
// same syntax, so a dumped preset can be loaded back.
ChannelPreset load_preset_file(const std::filesystem::path& path);
std::string format_preset(const ChannelPreset& preset);

// Accepts a built-in preset name (case-insensitive) or a path to a preset
// file.
ChannelPreset resolve_preset(const std::string& name_or_path);

// Complex zero-mean Gaussian process with unit mean power whose power
// spectral density is Gaussian with standard deviation spread_hz / 2,
// centered at shift_hz.  Deterministic in seed.  spread_hz = 0 degenerates
// to a constant unit envelope.  Requires spread_hz < rate_hz / 2.
std::vector<std::complex<double>> generate_fading_process(
    std::size_t n_samples, double rate_hz, double spread_hz, double shift_hz,
    Seed seed);

struct ChannelSimOptions {
  // Test hook: replace every fading process with the constant 1 so delay
  // and energy bookkeeping can be asserted exactly.
  bool freeze_fading = false;
};

// Full channel pass: resample to the preset's processing rate, form the
// analytic signal, run it through the faded tapped delay line, add complex
// Gaussian noise low-passed to the preset's bandwidth and scaled to the
// target SNR (measured between the real parts of the faded signal and the
// filtered noise), take the real part, and resample back.  Output length
// equals input length exactly (padded/truncated after the rate round trip).
AudioBuffer apply_channel(const AudioBuffer& signal, const ChannelPreset& preset,
                          SnrDb target, Seed seed,
                          const ChannelSimOptions& options = {});

}  // namespace noisemix

#endif  // NOISEMIX_HF_CHANNEL_HPP_
