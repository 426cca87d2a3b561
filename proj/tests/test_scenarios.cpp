// Copyright 2026 The Noisemix Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Unit tests for the two stationary degradation scenarios: additive white
// Gaussian noise at a target SNR and mixing with cuts from a noise pool.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "noisemix/awgn.hpp"
#include "noisemix/errors.hpp"
#include "noisemix/noise_pool.hpp"
#include "noisemix/rng.hpp"
#include "noisemix/signal_ops.hpp"
#include "noisemix/wav_io.hpp"
#include "test_util.hpp"

using noisemix::AudioBuffer;
using noisemix::CutMode;
using noisemix::NoisePool;
using noisemix::NoiseSource;
using noisemix::Seed;
using noisemix::SnrDb;

namespace {

NoiseSource make_source(const std::string& id, int n, int rate,
                        std::uint64_t seed) {
  NoiseSource s;
  s.id = id;
  s.audio = testutil::make_white(n, rate, seed);
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// AWGN
// ---------------------------------------------------------------------------

TEST_CASE("awgn returns a silent input unchanged") {
  AudioBuffer silent;
  silent.samples.assign(512, 0.0);
  silent.sample_rate_hz = 8000;
  const AudioBuffer out = noisemix::add_white_noise(silent, SnrDb{10}, Seed{1});
  REQUIRE(out.size() == silent.size());
  for (double v : out.samples) CHECK(v == 0.0);
}

TEST_CASE("awgn is bit-identical for a fixed seed") {
  AudioBuffer s = testutil::make_tone(2000, 16000, 440.0, 0.4);
  const AudioBuffer a = noisemix::add_white_noise(s, SnrDb{5}, Seed{77});
  const AudioBuffer b = noisemix::add_white_noise(s, SnrDb{5}, Seed{77});
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a.samples[i] == b.samples[i]);

  const AudioBuffer c = noisemix::add_white_noise(s, SnrDb{5}, Seed{78});
  bool identical = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.samples[i] != c.samples[i]) identical = false;
  }
  CHECK_FALSE(identical);
}

TEST_CASE("awgn preserves length, rate, and the clean signal") {
  AudioBuffer s = testutil::make_tone(3001, 22050, 440.0, 0.4);
  const AudioBuffer out = noisemix::add_white_noise(s, SnrDb{0}, Seed{3});
  CHECK(out.size() == s.size());
  CHECK(out.sample_rate_hz == 22050);
  // out - signal must be exactly the additive part: recompute and compare.
  const AudioBuffer again = noisemix::add_white_noise(s, SnrDb{0}, Seed{3});
  for (std::size_t i = 0; i < s.size(); ++i) {
    CHECK(out.samples[i] == again.samples[i]);
  }
}

TEST_CASE("awgn lands near the requested SNR for a long signal") {
  // With n = 160000 the sample RMS of the noise concentrates tightly:
  // std of measured SNR ~ 8.686/sqrt(2n) ~ 0.015 dB.
  AudioBuffer s = testutil::make_tone(160000, 16000, 700.0, 0.4);
  for (double target : {-10.0, 0.0, 10.0, 30.0}) {
    const AudioBuffer out = noisemix::add_white_noise(s, SnrDb{target}, Seed{9});
    AudioBuffer noise = out;
    for (std::size_t i = 0; i < s.size(); ++i) noise.samples[i] -= s.samples[i];
    const double measured = noisemix::snr_db(s, noise).value;
    CHECK(std::abs(measured - target) < 0.2);
  }
}

TEST_CASE("awgn noise grows as the target SNR drops") {
  AudioBuffer s = testutil::make_tone(8000, 8000, 300.0, 0.5);
  double prev = 0.0;
  bool first = true;
  for (double target : {30.0, 20.0, 10.0, 0.0, -10.0, -20.0}) {
    const AudioBuffer out =
        noisemix::add_white_noise(s, SnrDb{target}, Seed{123});
    AudioBuffer noise = out;
    for (std::size_t i = 0; i < s.size(); ++i) noise.samples[i] -= s.samples[i];
    const double n_rms = noisemix::rms(noise);
    if (!first) CHECK(n_rms > prev);
    prev = n_rms;
    first = false;
  }
}

TEST_CASE("awgn rejects invalid buffers") {
  AudioBuffer empty;
  empty.sample_rate_hz = 8000;
  CHECK(testutil::error_category([&] {
          noisemix::add_white_noise(empty, SnrDb{0}, Seed{1});
        }) == "invalid-input");

  AudioBuffer nan_buf = testutil::make_tone(16, 8000, 100.0, 0.5);
  nan_buf.samples[3] = std::nan("");
  CHECK(testutil::error_category([&] {
          noisemix::add_white_noise(nan_buf, SnrDb{0}, Seed{1});
        }) == "invalid-input");
}

// ---------------------------------------------------------------------------
// random_cut
// ---------------------------------------------------------------------------

TEST_CASE("random_cut of the full source starts at zero") {
  const NoiseSource src = make_source("a", 1000, 8000, 5);
  const auto cut = noisemix::random_cut(src, 1000, Seed{42});
  CHECK(cut.start == 0);
  REQUIRE(cut.audio.size() == 1000);
  for (std::size_t i = 0; i < 1000; ++i) {
    CHECK(cut.audio.samples[i] == src.audio.samples[i]);
  }
}

TEST_CASE("random_cut covers every admissible start offset") {
  // length 993 from a 1000-sample source leaves starts {0..7}; over 1000
  // distinct seeds each of the 8 offsets must appear at least once.
  const NoiseSource src = make_source("a", 1000, 8000, 6);
  std::set<std::size_t> seen;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const auto cut = noisemix::random_cut(src, 993, Seed{seed});
    REQUIRE(cut.start <= 7);
    REQUIRE(cut.audio.size() == 993);
    seen.insert(cut.start);
  }
  CHECK(seen.size() == 8);
}

TEST_CASE("random_cut slices exactly at the reported offset") {
  const NoiseSource src = make_source("a", 4096, 8000, 7);
  const auto cut = noisemix::random_cut(src, 100, Seed{17});
  REQUIRE(cut.audio.size() == 100);
  CHECK(cut.audio.sample_rate_hz == 8000);
  for (std::size_t i = 0; i < 100; ++i) {
    CHECK(cut.audio.samples[i] == src.audio.samples[cut.start + i]);
  }
}

TEST_CASE("random_cut in strict mode refuses requests longer than the source") {
  const NoiseSource src = make_source("a", 100, 8000, 8);
  CHECK(testutil::error_category([&] {
          noisemix::random_cut(src, 101, Seed{1});
        }) == "insufficient-noise");
}

TEST_CASE("random_cut tiling wraps the source cyclically") {
  const NoiseSource src = make_source("a", 64, 8000, 9);
  const auto cut = noisemix::random_cut(src, 200, Seed{33}, CutMode::kTile);
  REQUIRE(cut.audio.size() == 200);
  CHECK(cut.start < 64);
  for (std::size_t i = 0; i < 200; ++i) {
    CHECK(cut.audio.samples[i] == src.audio.samples[(cut.start + i) % 64]);
  }
}

TEST_CASE("random_cut rejects a zero-length request") {
  const NoiseSource src = make_source("a", 100, 8000, 10);
  CHECK(testutil::error_category([&] {
          noisemix::random_cut(src, 0, Seed{1});
        }) == "invalid-parameter");
}

// ---------------------------------------------------------------------------
// mix_noise
// ---------------------------------------------------------------------------

TEST_CASE("mix_noise hits the target SNR to one nano-decibel") {
  AudioBuffer signal = testutil::make_tone(4000, 8000, 350.0, 0.3);
  for (double& v : signal.samples) v += 0.1;  // make the range asymmetric
  const AudioBuffer cut = testutil::make_white(4000, 8000, 11);

  for (double target : {-30.0, -5.0, 0.0, 7.5, 30.0}) {
    const AudioBuffer mixed = noisemix::mix_noise(signal, cut, SnrDb{target});
    REQUIRE(mixed.size() == signal.size());
    const AudioBuffer ref = noisemix::peak_normalize(signal);
    AudioBuffer noise = mixed;
    for (std::size_t i = 0; i < noise.size(); ++i) {
      noise.samples[i] -= ref.samples[i];
    }
    const double measured = noisemix::snr_db(ref, noise).value;
    CHECK(std::abs(measured - target) < 1e-9);
  }
}

TEST_CASE("mix_noise at zero dB equalizes the component powers") {
  AudioBuffer signal = testutil::make_tone(2048, 8000, 500.0, 0.8);
  const AudioBuffer cut = testutil::make_white(2048, 8000, 12);
  const AudioBuffer mixed = noisemix::mix_noise(signal, cut, SnrDb{0.0});
  const AudioBuffer ref = noisemix::peak_normalize(signal);
  AudioBuffer noise = mixed;
  for (std::size_t i = 0; i < noise.size(); ++i) {
    noise.samples[i] -= ref.samples[i];
  }
  CHECK(noisemix::rms(noise) ==
        doctest::Approx(noisemix::rms(ref)).epsilon(1e-12));
}

TEST_CASE("mix_noise validates shapes and degenerate operands") {
  AudioBuffer signal = testutil::make_tone(1000, 8000, 500.0, 0.5);
  const AudioBuffer cut = testutil::make_white(999, 8000, 13);
  CHECK(testutil::error_category([&] {
          noisemix::mix_noise(signal, cut, SnrDb{0});
        }) == "invalid-input");

  AudioBuffer wrong_rate = testutil::make_white(1000, 16000, 13);
  CHECK(testutil::error_category([&] {
          noisemix::mix_noise(signal, wrong_rate, SnrDb{0});
        }) == "invalid-input");

  AudioBuffer zero_cut;
  zero_cut.samples.assign(1000, 0.0);
  zero_cut.sample_rate_hz = 8000;
  CHECK(testutil::error_category([&] {
          noisemix::mix_noise(signal, zero_cut, SnrDb{0});
        }) == "cannot-scale");

  AudioBuffer constant;
  constant.samples.assign(1000, 0.4);
  constant.sample_rate_hz = 8000;
  const AudioBuffer good_cut = testutil::make_white(1000, 8000, 14);
  CHECK(testutil::error_category([&] {
          noisemix::mix_noise(constant, good_cut, SnrDb{0});
        }) == "degenerate-signal");
}

// ---------------------------------------------------------------------------
// mix_from_pool
// ---------------------------------------------------------------------------

TEST_CASE("mix_from_pool on a singleton pool always reports that source") {
  NoisePool pool;
  pool.sources.push_back(make_source("only", 8000, 8000, 20));
  AudioBuffer signal = testutil::make_tone(2000, 8000, 600.0, 0.5);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto mix = noisemix::mix_from_pool(signal, pool, SnrDb{5}, Seed{seed});
    CHECK(mix.source_id == "only");
    CHECK(mix.start + 2000 <= 8000);
  }
}

TEST_CASE("mix_from_pool is reproducible and its provenance is replayable") {
  NoisePool pool;
  pool.sources.push_back(make_source("a", 6000, 8000, 21));
  pool.sources.push_back(make_source("b", 6000, 8000, 22));
  pool.sources.push_back(make_source("c", 6000, 8000, 23));
  AudioBuffer signal = testutil::make_tone(1500, 8000, 420.0, 0.5);

  const auto first = noisemix::mix_from_pool(signal, pool, SnrDb{3}, Seed{99});
  const auto second = noisemix::mix_from_pool(signal, pool, SnrDb{3}, Seed{99});
  CHECK(first.source_id == second.source_id);
  CHECK(first.start == second.start);
  REQUIRE(first.audio.size() == second.audio.size());
  for (std::size_t i = 0; i < first.audio.size(); ++i) {
    CHECK(first.audio.samples[i] == second.audio.samples[i]);
  }

  // Rebuild the mix from the recorded (source, start) pair and compare.
  const auto& src = *std::find_if(
      pool.sources.begin(), pool.sources.end(),
      [&](const NoiseSource& s) { return s.id == first.source_id; });
  AudioBuffer cut;
  cut.sample_rate_hz = src.audio.sample_rate_hz;
  cut.samples.assign(src.audio.samples.begin() + static_cast<long>(first.start),
                     src.audio.samples.begin() +
                         static_cast<long>(first.start + signal.size()));
  const AudioBuffer rebuilt = noisemix::mix_noise(signal, cut, SnrDb{3});
  for (std::size_t i = 0; i < rebuilt.size(); ++i) {
    CHECK(rebuilt.samples[i] == first.audio.samples[i]);
  }
}

TEST_CASE("mix_from_pool draws sources uniformly") {
  // 10000 draws across 5 sources: each expected count is 2000 with a
  // chi-square(4) tail bound at alpha = 0.001 comfortably inside +-200.
  NoisePool pool;
  for (int i = 0; i < 5; ++i) {
    pool.sources.push_back(
        make_source(std::string(1, static_cast<char>('a' + i)), 4000, 8000,
                    static_cast<std::uint64_t>(30 + i)));
  }
  AudioBuffer signal = testutil::make_tone(500, 8000, 500.0, 0.5);
  std::map<std::string, int> counts;
  for (std::uint64_t seed = 0; seed < 10000; ++seed) {
    const auto mix = noisemix::mix_from_pool(signal, pool, SnrDb{10},
                                             Seed{seed});
    ++counts[mix.source_id];
  }
  REQUIRE(counts.size() == 5);
  for (const auto& [id, count] : counts) {
    CHECK(count > 1800);
    CHECK(count < 2200);
  }
}

TEST_CASE("mix_from_pool strict mode only draws sources long enough") {
  NoisePool pool;
  pool.sources.push_back(make_source("long1", 5000, 8000, 40));
  pool.sources.push_back(make_source("short", 100, 8000, 41));
  pool.sources.push_back(make_source("long2", 5000, 8000, 42));
  AudioBuffer signal = testutil::make_tone(1000, 8000, 500.0, 0.5);
  std::set<std::string> picked;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    picked.insert(
        noisemix::mix_from_pool(signal, pool, SnrDb{0}, Seed{seed}).source_id);
  }
  CHECK(picked.count("short") == 0);
  CHECK(picked.count("long1") == 1);
  CHECK(picked.count("long2") == 1);
}

TEST_CASE("mix_from_pool reports insufficient noise when nothing fits") {
  NoisePool pool;
  pool.sources.push_back(make_source("tiny", 64, 8000, 50));
  AudioBuffer signal = testutil::make_tone(1000, 8000, 500.0, 0.5);
  CHECK(testutil::error_category([&] {
          noisemix::mix_from_pool(signal, pool, SnrDb{0}, Seed{1});
        }) == "insufficient-noise");

  // Tiling rescues the same request.
  const auto mix = noisemix::mix_from_pool(signal, pool, SnrDb{0}, Seed{1},
                                           CutMode::kTile);
  CHECK(mix.source_id == "tiny");
  CHECK(mix.audio.size() == 1000);
}

TEST_CASE("mix_from_pool rejects an empty pool and rate mismatches") {
  NoisePool pool;
  AudioBuffer signal = testutil::make_tone(100, 8000, 500.0, 0.5);
  CHECK(testutil::error_category([&] {
          noisemix::mix_from_pool(signal, pool, SnrDb{0}, Seed{1});
        }) == "empty-pool");

  pool.sources.push_back(make_source("a", 4000, 16000, 51));
  CHECK(testutil::error_category([&] {
          noisemix::mix_from_pool(signal, pool, SnrDb{0}, Seed{1});
        }) == "invalid-input");
}

// ---------------------------------------------------------------------------
// load_pool
// ---------------------------------------------------------------------------

TEST_CASE("load_pool orders sources by id and resamples to the target rate") {
  testutil::TempDir dir;
  noisemix::write_wav(dir.path() / "zeta.wav",
                      testutil::make_white(4000, 16000, 60));
  noisemix::write_wav(dir.path() / "alpha.wav",
                      testutil::make_white(3000, 8000, 61));
  noisemix::write_wav(dir.path() / "Mid.WAV",
                      testutil::make_white(2000, 8000, 62));
  // A non-wav bystander that must be ignored.
  { std::ofstream(dir.path() / "notes.txt") << "ignore me"; }

  const NoisePool pool = noisemix::load_pool(dir.path(), 8000);
  REQUIRE(pool.sources.size() == 3);
  CHECK(pool.sources[0].id == "Mid");
  CHECK(pool.sources[1].id == "alpha");
  CHECK(pool.sources[2].id == "zeta");
  CHECK(pool.sample_rate_hz() == 8000);
  // 4000 samples at 16 kHz become 2000 at 8 kHz.
  CHECK(pool.sources[2].audio.size() == 2000);
}

TEST_CASE("load_pool fails fast on silent files unless told to skip") {
  testutil::TempDir dir;
  noisemix::write_wav(dir.path() / "good.wav",
                      testutil::make_white(1000, 8000, 63));
  AudioBuffer silent;
  silent.samples.assign(1000, 0.0);
  silent.sample_rate_hz = 8000;
  noisemix::write_wav(dir.path() / "bad.wav", silent);

  CHECK(testutil::error_category([&] {
          noisemix::load_pool(dir.path(), 8000);
        }) == "degenerate-signal");

  std::vector<std::string> warnings;
  const NoisePool pool = noisemix::load_pool(dir.path(), 8000, true, &warnings);
  REQUIRE(pool.sources.size() == 1);
  CHECK(pool.sources[0].id == "good");
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("bad.wav") != std::string::npos);
}

TEST_CASE("load_pool reports an empty or missing directory") {
  testutil::TempDir dir;
  CHECK(testutil::error_category([&] {
          noisemix::load_pool(dir.path(), 8000);
        }) == "empty-pool");
  CHECK(testutil::error_category([&] {
          noisemix::load_pool(dir.path() / "nowhere", 8000);
        }) == "io");
}
