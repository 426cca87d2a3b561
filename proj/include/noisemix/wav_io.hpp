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

#ifndef NOISEMIX_WAV_IO_HPP_
#define NOISEMIX_WAV_IO_HPP_

#include <cstddef>
#include <filesystem>

#include "noisemix/types.hpp"

namespace noisemix {

struct WavWriteResult {
  std::size_t clipped_samples = 0;
};

// Reads a RIFF/WAVE file: linear PCM, 16-bit signed little-endian, mono.
// Integer samples map to reals as k / 32768, so every stored value is an
// exact dyadic float.  Anything else (8-bit, float, multichannel, extensible
// headers) raises "unsupported-encoding"; broken headers "malformed-wav".
AudioBuffer read_wav(const std::filesystem::path& path);

// Writes 16-bit PCM mono.  Reals map to integers as round(x * 32768),
// clamped to [-32768, 32767]; clamped samples are counted, never rescaled,
// so a calibrated SNR survives clipping intact.  write o read is the
// identity on every 16-bit sample value.
WavWriteResult write_wav(const std::filesystem::path& path,
                         const AudioBuffer& buffer);

}  // namespace noisemix

#endif  // NOISEMIX_WAV_IO_HPP_
