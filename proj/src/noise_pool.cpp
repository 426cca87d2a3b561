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

#include "noisemix/noise_pool.hpp"

#include <algorithm>
#include <cctype>

#include "noisemix/errors.hpp"
#include "noisemix/resample.hpp"
#include "noisemix/signal_ops.hpp"
#include "noisemix/wav_io.hpp"

namespace noisemix {
namespace {

bool has_wav_extension(const std::filesystem::path& p) {
  std::string ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return ext == ".wav";
}

NoiseCut cut_with(Rng& rng, const NoiseSource& source, std::size_t length,
                  CutMode mode) {
  if (length == 0) fail("invalid-parameter", "cut length must be at least 1");
  const std::size_t source_len = source.audio.size();
  NoiseCut cut;
  cut.audio.sample_rate_hz = source.audio.sample_rate_hz;
  cut.audio.samples.resize(length);

  if (length <= source_len) {
    // Inclusive upper bound: a source exactly as long as the request is
    // usable, with start pinned to 0.
    cut.start = static_cast<std::size_t>(
        rng.below(static_cast<std::uint64_t>(source_len - length) + 1));
    std::copy_n(source.audio.samples.begin() + static_cast<std::ptrdiff_t>(cut.start),
                length, cut.audio.samples.begin());
    return cut;
  }

  if (mode == CutMode::kStrict) {
    fail("insufficient-noise",
         "noise source '" + source.id + "' is shorter than the requested cut (" +
             std::to_string(source_len) + " < " + std::to_string(length) + " samples)");
  }
  // Tiling: treat the source as cyclic, start anywhere within one period.
  cut.start = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(source_len)));
  for (std::size_t i = 0; i < length; ++i) {
    cut.audio.samples[i] = source.audio.samples[(cut.start + i) % source_len];
  }
  return cut;
}

}  // namespace

NoisePool load_pool(const std::filesystem::path& directory, int target_rate_hz,
                    bool skip_bad, std::vector<std::string>* warnings) {
  if (target_rate_hz <= 0) {
    fail("invalid-parameter", "pool sample rate must be positive");
  }
  std::error_code ec;
  if (!std::filesystem::is_directory(directory, ec)) {
    fail("io", "noise pool directory not found: " + directory.string());
  }

  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(directory)) {
    if (entry.is_regular_file() && has_wav_extension(entry.path())) {
      files.push_back(entry.path());
    }
  }
  if (files.empty()) {
    fail("empty-pool", "no WAV files in noise pool directory: " + directory.string());
  }

  NoisePool pool;
  for (const std::filesystem::path& file : files) {
    try {
      NoiseSource source;
      source.id = file.stem().string();
      source.audio = resample(read_wav(file), target_rate_hz);
      if (rms(source.audio) == 0.0) {
        fail("degenerate-signal", "noise file is silent: " + file.string());
      }
      pool.sources.push_back(std::move(source));
    } catch (const Error& e) {
      if (!skip_bad) throw;
      if (warnings != nullptr) {
        warnings->push_back("skipped " + file.string() + ": " + e.what());
      }
    }
  }
  if (pool.sources.empty()) {
    fail("empty-pool", "no usable WAV files in noise pool directory: " +
                           directory.string());
  }
  std::sort(pool.sources.begin(), pool.sources.end(),
            [](const NoiseSource& a, const NoiseSource& b) { return a.id < b.id; });
  return pool;
}

NoiseCut random_cut(const NoiseSource& source, std::size_t length, Seed seed,
                    CutMode mode) {
  Rng rng(seed);
  return cut_with(rng, source, length, mode);
}

AudioBuffer mix_noise(const AudioBuffer& signal, const AudioBuffer& noise_cut,
                      SnrDb target) {
  require_valid(signal, "signal");
  require_valid(noise_cut, "noise cut");
  if (signal.size() != noise_cut.size() ||
      signal.sample_rate_hz != noise_cut.sample_rate_hz) {
    fail("invalid-input", "signal and noise cut must match in length and rate");
  }
  const double cut_rms = rms(noise_cut);
  if (cut_rms == 0.0) {
    fail("cannot-scale", "noise cut has zero RMS and cannot reach any SNR");
  }

  // Normalize the signal first (the noise is about to be rescaled anyway,
  // so only the signal needs it), then scale the cut to the exact RMS the
  // target demands.
  AudioBuffer out = peak_normalize(signal);
  const double scale = target_noise_rms(rms(out), target) / cut_rms;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out.samples[i] += scale * noise_cut.samples[i];
  }
  return out;
}

PoolMix mix_from_pool(const AudioBuffer& signal, const NoisePool& pool,
                      SnrDb target, Seed seed, CutMode mode) {
  require_valid(signal, "signal");
  require_nonempty(signal, "signal");
  if (pool.sources.empty()) fail("empty-pool", "noise pool has no sources");
  if (pool.sample_rate_hz() != signal.sample_rate_hz) {
    fail("invalid-input", "noise pool rate does not match the signal rate");
  }

  // In strict mode only sources long enough for the signal enter the draw,
  // so a pool with at least one long source always succeeds.
  std::vector<std::size_t> eligible;
  eligible.reserve(pool.sources.size());
  for (std::size_t i = 0; i < pool.sources.size(); ++i) {
    if (mode == CutMode::kTile || pool.sources[i].audio.size() >= signal.size()) {
      eligible.push_back(i);
    }
  }
  if (eligible.empty()) {
    fail("insufficient-noise", "every noise source is shorter than the signal");
  }

  Rng rng(seed);
  const std::size_t pick =
      eligible[static_cast<std::size_t>(rng.below(eligible.size()))];
  const NoiseSource& source = pool.sources[pick];
  NoiseCut cut = cut_with(rng, source, signal.size(), mode);

  PoolMix result;
  result.audio = mix_noise(signal, cut.audio, target);
  result.source_id = source.id;
  result.start = cut.start;
  return result;
}

}  // namespace noisemix
