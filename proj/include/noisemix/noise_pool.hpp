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

#ifndef NOISEMIX_NOISE_POOL_HPP_
#define NOISEMIX_NOISE_POOL_HPP_

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "noisemix/rng.hpp"
#include "noisemix/types.hpp"

namespace noisemix {

// One recorded noise file: id is the filename stem, audio is non-silent.
struct NoiseSource {
  std::string id;
  AudioBuffer audio;
};

// All sources share one sample rate (files are resampled on load).
struct NoisePool {
  std::vector<NoiseSource> sources;

  int sample_rate_hz() const {
    return sources.empty() ? 0 : sources.front().audio.sample_rate_hz;
  }
};

// How random_cut treats a request longer than the source.
enum class CutMode {
  kStrict,  // error out (insufficient-noise)
  kTile,    // repeat the source cyclically before cutting
};

// Loads every *.wav under `directory` (non-recursive), resampled to
// target_rate_hz, ordered lexicographically by id.  Unreadable or silent
// files abort the load unless skip_bad is set, in which case they are
// dropped and a human-readable note is appended to *warnings (if given).
NoisePool load_pool(const std::filesystem::path& directory, int target_rate_hz,
                    bool skip_bad = false,
                    std::vector<std::string>* warnings = nullptr);

struct NoiseCut {
  AudioBuffer audio;
  std::size_t start = 0;  // offset into the source, in samples
};

// Cuts `length` samples starting at a seed-determined offset drawn uniformly
// from the inclusive range [0, source_length - length].  With CutMode::kTile
// a longer-than-source request wraps around instead of failing, with the
// start drawn from [0, source_length - 1].
NoiseCut random_cut(const NoiseSource& source, std::size_t length, Seed seed,
                    CutMode mode = CutMode::kStrict);

// Peak-normalizes the signal to [-1, 1], rescales the cut so its RMS hits
// target_noise_rms(rms(normalized signal), target) exactly, and returns
// their sum.  The measured SNR of the result is exact to floating-point
// roundoff (well below 1e-9 dB).
AudioBuffer mix_noise(const AudioBuffer& signal, const AudioBuffer& noise_cut,
                      SnrDb target);

struct PoolMix {
  AudioBuffer audio;
  std::string source_id;
  std::size_t start = 0;
};

// Picks a source uniformly at random, cuts it, and mixes.  In strict mode
// only sources at least as long as the signal participate in the draw; if
// none qualify this is an insufficient-noise error.
PoolMix mix_from_pool(const AudioBuffer& signal, const NoisePool& pool,
                      SnrDb target, Seed seed, CutMode mode = CutMode::kStrict);

}  // namespace noisemix

#endif  // NOISEMIX_NOISE_POOL_HPP_
