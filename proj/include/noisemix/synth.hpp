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

#ifndef NOISEMIX_SYNTH_HPP_
#define NOISEMIX_SYNTH_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "noisemix/manifest.hpp"
#include "noisemix/rng.hpp"
#include "noisemix/types.hpp"

namespace noisemix {

enum class Scenario { kAwgn, kPool, kChannel };

std::string scenario_to_string(Scenario scenario);
Scenario scenario_from_string(const std::string& s);

// Batch synthesis configuration.  Every corpus entry is processed at every
// grid SNR; outputs land in
//   <output_root>/<scenario>/snr_<value>/<source stem>.wav
// plus a manifest.csv at the output root.
struct SynthesisPlan {
  Scenario scenario = Scenario::kAwgn;
  std::string pool_dir;             // required for Scenario::kPool
  std::string preset;               // required for Scenario::kChannel
  std::vector<double> snr_grid = canonical_snr_grid();
  Seed master_seed{42};
  std::string output_root;
  std::string audio_root;           // base for manifest-relative audio paths
  int workers = 1;
  bool keep_going = false;          // run every task even after failures
  bool normalize_input = false;     // peak-normalize before awgn/channel
  bool tile_noise = false;          // wrap short noise sources instead of failing
  std::optional<double> min_snr;    // skip grid values below this
};

// Per-task seed derivation: a chain of 64-bit finalizer mixes over the
// master seed, the entry's index in the path-sorted manifest, the SNR's
// index in the sorted grid, and the scenario tag (awgn=1, pool=2,
// channel=3).  Pure, platform-independent, collision-free in practice.
Seed derive_seed(Seed master, std::size_t entry_index, std::size_t snr_index,
                 std::uint64_t scenario_tag);
std::uint64_t scenario_tag(Scenario scenario);

struct RunReport {
  std::size_t files_written = 0;
  std::vector<std::pair<std::string, std::string>> failures;  // (source, reason)
  std::size_t clipped_total = 0;
  double elapsed_s = 0.0;
};

// Runs the plan over the manifest with plan.workers parallel workers.
// Output bytes are a pure function of (manifest, plan minus workers):
// worker count and scheduling cannot change them.  Per-file failures are
// collected; by default remaining work is abandoned after the first one,
// with keep_going the whole grid still runs.
RunReport synthesize_dataset(const Manifest& manifest, const SynthesisPlan& plan);

// Plan files use `key = value` lines: scenario, pool_dir, preset, snr_grid
// (comma-separated), master_seed, output_root, audio_root, workers,
// keep_going, normalize_input, tile_noise, min_snr.
SynthesisPlan load_plan_file(const std::filesystem::path& path);

// Comma-separated SNR list -> values, e.g. "-5,0,10".
std::vector<double> parse_snr_grid(const std::string& text);

}  // namespace noisemix

#endif  // NOISEMIX_SYNTH_HPP_
