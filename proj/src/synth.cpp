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

#include "noisemix/synth.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <thread>
#include <unordered_map>

#include "noisemix/awgn.hpp"
#include "noisemix/csv.hpp"
#include "noisemix/errors.hpp"
#include "noisemix/hf_channel.hpp"
#include "noisemix/kv_config.hpp"
#include "noisemix/noise_pool.hpp"
#include "noisemix/signal_ops.hpp"
#include "noisemix/wav_io.hpp"

namespace noisemix {
namespace {

struct Task {
  std::size_t entry_index = 0;      // into the path-sorted manifest
  std::size_t snr_index = 0;        // into the sorted full grid (seed key)
  double snr = 0.0;
};

struct TaskResult {
  bool ok = false;
  std::string manifest_row;
  std::string error;
  std::size_t clipped = 0;
};

bool parse_bool(const KvEntry& e, const std::string& origin) {
  const std::string& v = e.value;
  if (v == "true" || v == "yes" || v == "1") return true;
  if (v == "false" || v == "no" || v == "0") return false;
  fail("bad-config", origin + ":" + std::to_string(e.line) + ": '" + e.key +
                         "' is not a boolean: '" + v + "'");
}

// Shared immutable context for the worker pool.
struct RunContext {
  const Manifest* manifest = nullptr;
  const SynthesisPlan* plan = nullptr;
  const NoisePool* pool = nullptr;        // pool scenario only
  const ChannelPreset* preset = nullptr;  // channel scenario only
  std::filesystem::path output_root;
  std::filesystem::path audio_root;
};

TaskResult run_task(const RunContext& ctx, const Task& task) {
  const ManifestEntry& entry = ctx.manifest->entries[task.entry_index];
  TaskResult result;
  try {
    const std::filesystem::path in_path = ctx.audio_root / entry.audio_path;
    AudioBuffer signal = read_wav(in_path);

    const SynthesisPlan& plan = *ctx.plan;
    const Seed seed = derive_seed(plan.master_seed, task.entry_index,
                                  task.snr_index, scenario_tag(plan.scenario));
    const SnrDb target{task.snr};

    AudioBuffer out;
    std::string provenance = "-";
    switch (plan.scenario) {
      case Scenario::kAwgn:
        if (plan.normalize_input) signal = peak_normalize(signal);
        out = add_white_noise(signal, target, seed);
        break;
      case Scenario::kPool: {
        PoolMix mix = mix_from_pool(signal, *ctx.pool, target, seed,
                                    plan.tile_noise ? CutMode::kTile
                                                    : CutMode::kStrict);
        out = std::move(mix.audio);
        provenance = "source=" + mix.source_id + ";start=" + std::to_string(mix.start);
        break;
      }
      case Scenario::kChannel:
        if (plan.normalize_input) signal = peak_normalize(signal);
        out = apply_channel(signal, *ctx.preset, target, seed);
        provenance = "preset=" + ctx.preset->name;
        break;
    }

    const std::string out_rel = scenario_to_string(plan.scenario) + "/snr_" +
                                format_number(task.snr) + "/" +
                                std::filesystem::path(entry.audio_path)
                                    .stem()
                                    .string() +
                                ".wav";
    const WavWriteResult wrote = write_wav(ctx.output_root / out_rel, out);
    result.clipped = wrote.clipped_samples;

    // Manifest row; out_path stays relative so trees are relocatable.
    result.manifest_row =
        csv_escape(out_rel) + ',' + csv_escape(entry.audio_path) + ',' +
        csv_escape(entry.sentence) + ',' + scenario_to_string(plan.scenario) +
        ',' + format_number(task.snr) + ',' + std::to_string(seed.value) + ',' +
        csv_escape(provenance) + ',' + std::to_string(wrote.clipped_samples);
    result.ok = true;
  } catch (const Error& e) {
    result.error = e.what();  // what() = category: detail
  } catch (const std::exception& e) {
    result.error = std::string("internal: ") + e.what();
  }
  return result;
}

}  // namespace

std::string scenario_to_string(Scenario scenario) {
  switch (scenario) {
    case Scenario::kAwgn: return "awgn";
    case Scenario::kPool: return "pool";
    case Scenario::kChannel: return "channel";
  }
  fail("invalid-parameter", "unknown scenario value");
}

Scenario scenario_from_string(const std::string& s) {
  if (s == "awgn") return Scenario::kAwgn;
  if (s == "pool") return Scenario::kPool;
  if (s == "channel") return Scenario::kChannel;
  fail("invalid-parameter",
       "unknown scenario '" + s + "' (expected awgn, pool, or channel)");
}

std::uint64_t scenario_tag(Scenario scenario) {
  switch (scenario) {
    case Scenario::kAwgn: return 1;
    case Scenario::kPool: return 2;
    case Scenario::kChannel: return 3;
  }
  fail("invalid-parameter", "unknown scenario value");
}

Seed derive_seed(Seed master, std::size_t entry_index, std::size_t snr_index,
                 std::uint64_t scenario_tag) {
  // Mix between every ingredient so no algebraic relation between indexes
  // can cancel out (mix64 is an avalanche-quality finalizer).
  std::uint64_t h = master.value;
  h = mix64(h) + static_cast<std::uint64_t>(entry_index);
  h = mix64(h) + static_cast<std::uint64_t>(snr_index);
  h = mix64(h) + scenario_tag;
  return Seed{mix64(h)};
}

std::vector<double> parse_snr_grid(const std::string& text) {
  std::vector<double> grid;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::string item = text.substr(pos, comma - pos);
    const std::size_t first = item.find_first_not_of(" \t");
    const std::size_t last = item.find_last_not_of(" \t");
    item = (first == std::string::npos) ? "" : item.substr(first, last - first + 1);
    if (item.empty()) {
      fail("invalid-parameter", "empty SNR entry in grid: '" + text + "'");
    }
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (end != item.c_str() + item.size() || !std::isfinite(v)) {
      fail("invalid-parameter", "SNR is not a number: '" + item + "'");
    }
    grid.push_back(v);
    pos = comma + 1;
    if (comma == text.size()) break;
  }
  if (grid.empty()) fail("invalid-parameter", "SNR grid is empty");
  return grid;
}

SynthesisPlan load_plan_file(const std::filesystem::path& path) {
  const std::string origin = path.filename().string();
  SynthesisPlan plan;
  for (const KvEntry& e : parse_kv_file(path)) {
    if (e.key == "scenario") plan.scenario = scenario_from_string(e.value);
    else if (e.key == "pool_dir") plan.pool_dir = e.value;
    else if (e.key == "preset") plan.preset = e.value;
    else if (e.key == "snr_grid") plan.snr_grid = parse_snr_grid(e.value);
    else if (e.key == "master_seed") plan.master_seed.value = static_cast<std::uint64_t>(kv_to_int(e, origin));
    else if (e.key == "output_root") plan.output_root = e.value;
    else if (e.key == "audio_root") plan.audio_root = e.value;
    else if (e.key == "workers") plan.workers = static_cast<int>(kv_to_int(e, origin));
    else if (e.key == "keep_going") plan.keep_going = parse_bool(e, origin);
    else if (e.key == "normalize_input") plan.normalize_input = parse_bool(e, origin);
    else if (e.key == "tile_noise") plan.tile_noise = parse_bool(e, origin);
    else if (e.key == "min_snr") plan.min_snr = kv_to_double(e, origin);
    else {
      fail("bad-config", origin + ":" + std::to_string(e.line) +
                             ": unknown key '" + e.key + "'");
    }
  }
  return plan;
}

RunReport synthesize_dataset(const Manifest& manifest, const SynthesisPlan& plan) {
  const auto t_start = std::chrono::steady_clock::now();

  if (manifest.entries.empty()) fail("invalid-input", "manifest has no entries");
  if (plan.output_root.empty()) fail("invalid-parameter", "output root is required");
  if (plan.workers < 1) fail("invalid-parameter", "worker count must be >= 1");
  if (plan.snr_grid.empty()) fail("invalid-parameter", "SNR grid is empty");
  for (const double v : plan.snr_grid) {
    if (!std::isfinite(v)) fail("invalid-parameter", "SNR grid has a non-finite value");
  }

  // Entries must be in canonical (path-sorted) order for index-keyed seeds.
  Manifest sorted = manifest;
  std::sort(sorted.entries.begin(), sorted.entries.end(),
            [](const ManifestEntry& a, const ManifestEntry& b) {
              return a.audio_path < b.audio_path;
            });

  // Output names collide when two sources share a filename stem; catch that
  // up front instead of silently overwriting.
  std::unordered_map<std::string, std::string> stems;
  for (const ManifestEntry& e : sorted.entries) {
    const std::string stem = std::filesystem::path(e.audio_path).stem().string();
    const auto [it, inserted] = stems.emplace(stem, e.audio_path);
    if (!inserted) {
      fail("duplicate-path", "output name collision: '" + it->second + "' and '" +
                                 e.audio_path + "' share the stem '" + stem + "'");
    }
  }

  // Seeds key on the SNR's rank in the sorted grid, so neither grid order
  // nor a --min-snr filter changes any surviving file's bytes.
  std::vector<double> sorted_grid = plan.snr_grid;
  std::sort(sorted_grid.begin(), sorted_grid.end());
  for (std::size_t i = 1; i < sorted_grid.size(); ++i) {
    if (sorted_grid[i] == sorted_grid[i - 1]) {
      fail("invalid-parameter",
           "duplicate SNR in grid: " + format_number(sorted_grid[i]));
    }
  }

  std::vector<Task> tasks;
  for (std::size_t e = 0; e < sorted.entries.size(); ++e) {
    for (std::size_t s = 0; s < sorted_grid.size(); ++s) {
      if (plan.min_snr.has_value() && sorted_grid[s] < *plan.min_snr) continue;
      tasks.push_back({e, s, sorted_grid[s]});
    }
  }
  if (tasks.empty()) {
    fail("invalid-parameter", "min_snr filtered out the whole grid");
  }

  RunContext ctx;
  ctx.manifest = &sorted;
  ctx.plan = &plan;
  ctx.output_root = plan.output_root;
  ctx.audio_root = plan.audio_root;

  // Scenario-specific shared state.
  NoisePool pool;
  ChannelPreset preset;
  switch (plan.scenario) {
    case Scenario::kAwgn:
      break;
    case Scenario::kPool: {
      if (plan.pool_dir.empty()) {
        fail("invalid-parameter", "pool scenario needs a noise pool directory");
      }
      // The pool is resampled once to the corpus rate (taken from the first
      // entry; per-file mismatches fail per task).
      const AudioBuffer probe =
          read_wav(ctx.audio_root / sorted.entries.front().audio_path);
      pool = load_pool(plan.pool_dir, probe.sample_rate_hz);
      ctx.pool = &pool;
      break;
    }
    case Scenario::kChannel:
      if (plan.preset.empty()) {
        fail("invalid-parameter", "channel scenario needs a preset");
      }
      preset = resolve_preset(plan.preset);
      ctx.preset = &preset;
      break;
  }

  // Create every output directory before the workers start.
  for (const std::size_t s : [&] {
         std::vector<std::size_t> seen;
         for (const Task& t : tasks) {
           if (std::find(seen.begin(), seen.end(), t.snr_index) == seen.end()) {
             seen.push_back(t.snr_index);
           }
         }
         return seen;
       }()) {
    std::error_code ec;
    std::filesystem::create_directories(
        ctx.output_root / scenario_to_string(plan.scenario) /
            ("snr_" + format_number(sorted_grid[s])),
        ec);
    if (ec) fail("io", "cannot create output directory: " + ec.message());
  }

  std::vector<TaskResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> abort{false};
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) break;
      if (abort.load() && !plan.keep_going) break;
      results[i] = run_task(ctx, tasks[i]);
      if (!results[i].ok) abort.store(true);
    }
  };

  const std::size_t n_workers = std::min<std::size_t>(
      static_cast<std::size_t>(plan.workers), tasks.size());
  if (n_workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(n_workers);
    for (std::size_t w = 0; w < n_workers; ++w) threads.emplace_back(worker);
    for (std::thread& t : threads) t.join();
  }

  RunReport report;
  std::ofstream manifest_out(ctx.output_root / "manifest.csv", std::ios::binary);
  if (!manifest_out) {
    fail("io", "cannot write output manifest under " + plan.output_root);
  }
  manifest_out << "out_path,src_path,sentence,scenario,snr_db,seed,provenance,"
                  "clipped_samples\n";
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const TaskResult& r = results[i];
    if (r.ok) {
      manifest_out << r.manifest_row << '\n';
      ++report.files_written;
      report.clipped_total += r.clipped;
    } else if (!r.error.empty()) {
      report.failures.emplace_back(
          sorted.entries[tasks[i].entry_index].audio_path + " @ snr " +
              format_number(tasks[i].snr),
          r.error);
    }
    // Tasks never started (abandoned after a failure) have ok=false and an
    // empty error; they are neither rows nor failures.
  }
  if (!manifest_out.flush()) {
    fail("io", "failed writing output manifest under " + plan.output_root);
  }

  report.elapsed_s = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - t_start)
                         .count();
  return report;
}

}  // namespace noisemix
