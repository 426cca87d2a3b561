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
//
// noisemix: turn a clean speech corpus into noisy variants at controlled
// SNRs (white noise, recorded-noise mixing, or a simulated HF multipath
// channel) and score transcriptions against references.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "noisemix/awgn.hpp"
#include "noisemix/csv.hpp"
#include "noisemix/errors.hpp"
#include "noisemix/hf_channel.hpp"
#include "noisemix/manifest.hpp"
#include "noisemix/metrics.hpp"
#include "noisemix/noise_pool.hpp"
#include "noisemix/synth.hpp"
#include "noisemix/types.hpp"
#include "noisemix/wav_io.hpp"

namespace {

using noisemix::AudioBuffer;
using noisemix::Seed;
using noisemix::SnrDb;

std::string default_grid_text() {
  std::string s;
  for (const double v : noisemix::canonical_snr_grid()) {
    if (!s.empty()) s += ',';
    s += noisemix::format_number(v);
  }
  return s;
}

noisemix::ManifestFormat format_from_name(const std::string& name,
                                          const std::string& path) {
  if (name == "tsv" || name == "tsv-common-voice") {
    return noisemix::ManifestFormat::kTsvCommonVoice;
  }
  if (name == "csv" || name == "csv-simple") {
    return noisemix::ManifestFormat::kCsvSimple;
  }
  // Auto: pick by extension.
  const std::string ext = std::filesystem::path(path).extension().string();
  return ext == ".tsv" ? noisemix::ManifestFormat::kTsvCommonVoice
                       : noisemix::ManifestFormat::kCsvSimple;
}

int run_single(const std::string& scenario, const std::string& in_path,
               const std::string& out_path, const AudioBuffer& out, SnrDb snr,
               Seed seed, const std::string& extra) {
  const noisemix::WavWriteResult wrote = noisemix::write_wav(out_path, out);
  std::cout << "scenario=" << scenario << " in=" << in_path
            << " out=" << out_path << " snr_db=" << noisemix::format_number(snr.value)
            << " seed=" << seed.value << (extra.empty() ? "" : " " + extra)
            << " clipped=" << wrote.clipped_samples << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "noisemix: deterministic noisy-speech dataset synthesis and scoring"};
  app.require_subcommand(1);

  // ---- awgn ----------------------------------------------------------
  auto* awgn = app.add_subcommand(
      "awgn", "Add white Gaussian noise to one WAV at a target SNR");
  std::string awgn_in, awgn_out;
  double awgn_snr = 0.0;
  std::uint64_t awgn_seed = 42;
  awgn->add_option("in", awgn_in, "input WAV (16-bit PCM mono)")->required();
  awgn->add_option("out", awgn_out, "output WAV")->required();
  awgn->add_option("--snr", awgn_snr, "target SNR in dB")->required();
  awgn->add_option("--seed", awgn_seed, "random seed (default 42)")
      ->capture_default_str();

  // ---- mix -----------------------------------------------------------
  auto* mix = app.add_subcommand(
      "mix", "Mix a random cut from a noise pool into one WAV at a target SNR");
  std::string mix_in, mix_out, mix_pool;
  double mix_snr = 0.0;
  std::uint64_t mix_seed = 42;
  bool mix_tile = false;
  bool mix_skip_bad = false;
  mix->add_option("in", mix_in, "input WAV (16-bit PCM mono)")->required();
  mix->add_option("out", mix_out, "output WAV")->required();
  mix->add_option("--pool", mix_pool, "directory of noise WAV files")->required();
  mix->add_option("--snr", mix_snr, "target SNR in dB")->required();
  mix->add_option("--seed", mix_seed, "random seed (default 42)")
      ->capture_default_str();
  mix->add_flag("--tile", mix_tile,
                "wrap noise sources shorter than the signal instead of failing");
  mix->add_flag("--skip-bad", mix_skip_bad,
                "skip unreadable or silent pool files with a warning");

  // ---- channel -------------------------------------------------------
  auto* channel = app.add_subcommand(
      "channel",
      "Pass one WAV through the simulated HF multipath fading channel");
  std::string ch_in, ch_out;
  std::string ch_preset = "ccir-flutter";
  double ch_snr = 0.0;
  std::uint64_t ch_seed = 42;
  bool ch_freeze = false;
  channel->add_option("in", ch_in, "input WAV (16-bit PCM mono)")->required();
  channel->add_option("out", ch_out, "output WAV")->required();
  channel
      ->add_option("--preset", ch_preset,
                   "built-in preset (ccir-flutter, ccir-poor) or preset file")
      ->capture_default_str();
  channel->add_option("--snr", ch_snr, "target SNR in dB")->required();
  channel->add_option("--seed", ch_seed, "random seed (default 42)")
      ->capture_default_str();
  channel->add_flag("--freeze-fading", ch_freeze,
                    "replace fading with a constant 1 (diagnostics)");

  // ---- synth ---------------------------------------------------------
  auto* synth = app.add_subcommand(
      "synth", "Synthesize a noisy dataset: every manifest entry at every grid SNR");
  std::string sy_manifest, sy_format = "auto", sy_plan_file;
  std::string sy_scenario, sy_pool, sy_preset, sy_grid, sy_out, sy_audio_root;
  std::uint64_t sy_seed = 0;
  int sy_workers = 0;
  bool sy_keep_going = false, sy_normalize = false, sy_tile = false;
  double sy_min_snr = 0.0;
  synth->add_option("manifest", sy_manifest, "input manifest (TSV or CSV)")
      ->required();
  synth->add_option("--format", sy_format,
                    "manifest format: tsv, csv, or auto by extension");
  synth->add_option("--plan", sy_plan_file,
                    "plan file with key = value defaults (flags override)");
  synth->add_option("--scenario", sy_scenario,
                    "awgn, pool, or channel (default awgn)");
  synth->add_option("--pool", sy_pool, "noise pool directory (pool scenario)");
  synth->add_option("--preset", sy_preset,
                    "channel preset name or file (channel scenario)");
  synth->add_option("--snr-grid", sy_grid,
                    "comma-separated SNR grid in dB (default " +
                        default_grid_text() + ")");
  synth->add_option("--seed", sy_seed, "master seed (default 42)");
  synth->add_option("--out", sy_out, "output root directory")
      ->envname("NOISEMIX_OUTPUT_ROOT");
  synth->add_option("--audio-root", sy_audio_root,
                    "base directory for manifest audio paths "
                    "(default: the manifest's directory)");
  synth->add_option("--workers", sy_workers, "parallel workers (default 1)")
      ->envname("NOISEMIX_WORKERS");
  synth->add_flag("--keep-going", sy_keep_going,
                  "run every file even after failures, then summarize");
  synth->add_flag("--normalize-input", sy_normalize,
                  "peak-normalize inputs before awgn/channel processing");
  synth->add_flag("--tile", sy_tile,
                  "wrap noise sources shorter than the signal instead of failing");
  synth->add_option("--min-snr", sy_min_snr,
                    "skip grid values below this (file bytes are unaffected)");

  // ---- expand --------------------------------------------------------
  auto* expand = app.add_subcommand(
      "expand",
      "Grow train+dev with validated recordings whose speakers already "
      "appear there, leaking no test speaker or sentence");
  std::string ex_train, ex_dev, ex_test, ex_validated, ex_out;
  std::string ex_format = "auto";
  expand->add_option("train", ex_train, "train manifest")->required();
  expand->add_option("dev", ex_dev, "dev manifest")->required();
  expand->add_option("test", ex_test, "test manifest")->required();
  expand->add_option("validated", ex_validated, "validated manifest")->required();
  expand->add_option("out", ex_out, "output manifest (CSV)")->required();
  expand->add_option("--format", ex_format,
                     "input manifest format: tsv, csv, or auto by extension");

  // ---- eval ----------------------------------------------------------
  auto* eval = app.add_subcommand(
      "eval",
      "Score scenario,snr_db,reference,hypothesis records into per-group "
      "mean CER/WER");
  std::string ev_in, ev_out;
  bool ev_keep_case = false, ev_keep_ws = false, ev_no_nfc = false;
  eval->add_option("records", ev_in, "input records CSV")->required();
  eval->add_option("out", ev_out, "output aggregate CSV")->required();
  eval->add_flag("--keep-case", ev_keep_case, "skip lowercasing");
  eval->add_flag("--keep-whitespace", ev_keep_ws, "skip whitespace collapsing");
  eval->add_flag("--no-nfc", ev_no_nfc, "skip NFC normalization");

  // ---- presets -------------------------------------------------------
  auto* presets =
      app.add_subcommand("presets", "Print the built-in channel presets");

  CLI11_PARSE(app, argc, argv);

  try {
    if (awgn->parsed()) {
      const AudioBuffer in = noisemix::read_wav(awgn_in);
      const AudioBuffer out =
          noisemix::add_white_noise(in, SnrDb{awgn_snr}, Seed{awgn_seed});
      return run_single("awgn", awgn_in, awgn_out, out, SnrDb{awgn_snr},
                        Seed{awgn_seed}, "");
    }

    if (mix->parsed()) {
      const AudioBuffer in = noisemix::read_wav(mix_in);
      std::vector<std::string> warnings;
      const noisemix::NoisePool pool = noisemix::load_pool(
          mix_pool, in.sample_rate_hz, mix_skip_bad, &warnings);
      for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
      const noisemix::PoolMix result = noisemix::mix_from_pool(
          in, pool, SnrDb{mix_snr}, Seed{mix_seed},
          mix_tile ? noisemix::CutMode::kTile : noisemix::CutMode::kStrict);
      return run_single("pool", mix_in, mix_out, result.audio, SnrDb{mix_snr},
                        Seed{mix_seed},
                        "source=" + result.source_id +
                            " start=" + std::to_string(result.start));
    }

    if (channel->parsed()) {
      const AudioBuffer in = noisemix::read_wav(ch_in);
      const noisemix::ChannelPreset preset = noisemix::resolve_preset(ch_preset);
      noisemix::ChannelSimOptions options;
      options.freeze_fading = ch_freeze;
      const AudioBuffer out = noisemix::apply_channel(in, preset, SnrDb{ch_snr},
                                                      Seed{ch_seed}, options);
      return run_single("channel", ch_in, ch_out, out, SnrDb{ch_snr},
                        Seed{ch_seed}, "preset=" + preset.name);
    }

    if (synth->parsed()) {
      noisemix::SynthesisPlan plan;
      if (synth->count("--plan") > 0) {
        plan = noisemix::load_plan_file(sy_plan_file);
      }
      if (synth->count("--scenario") > 0) {
        plan.scenario = noisemix::scenario_from_string(sy_scenario);
      }
      if (synth->count("--pool") > 0) plan.pool_dir = sy_pool;
      if (synth->count("--preset") > 0) plan.preset = sy_preset;
      if (synth->count("--snr-grid") > 0) {
        plan.snr_grid = noisemix::parse_snr_grid(sy_grid);
      }
      if (synth->count("--seed") > 0) plan.master_seed = Seed{sy_seed};
      if (synth->count("--out") > 0) plan.output_root = sy_out;
      if (synth->count("--audio-root") > 0) plan.audio_root = sy_audio_root;
      if (synth->count("--workers") > 0) plan.workers = sy_workers;
      if (sy_keep_going) plan.keep_going = true;
      if (sy_normalize) plan.normalize_input = true;
      if (sy_tile) plan.tile_noise = true;
      if (synth->count("--min-snr") > 0) plan.min_snr = sy_min_snr;
      if (plan.audio_root.empty()) {
        plan.audio_root =
            std::filesystem::path(sy_manifest).parent_path().string();
      }

      const noisemix::Manifest manifest = noisemix::parse_manifest(
          sy_manifest, format_from_name(sy_format, sy_manifest));
      const noisemix::RunReport report =
          noisemix::synthesize_dataset(manifest, plan);
      for (const auto& [source, reason] : report.failures) {
        std::cerr << "error: " << source << ": " << reason << "\n";
      }
      std::cout << "files_written=" << report.files_written
                << " failures=" << report.failures.size()
                << " clipped_total=" << report.clipped_total << " elapsed_s="
                << noisemix::format_number(report.elapsed_s) << "\n";
      return report.failures.empty() ? 0 : 1;
    }

    if (expand->parsed()) {
      using noisemix::Subset;
      auto parse = [&](const std::string& path, Subset subset) {
        return noisemix::parse_manifest(path, format_from_name(ex_format, path),
                                        subset);
      };
      const noisemix::Manifest train = parse(ex_train, Subset::kTrain);
      const noisemix::Manifest dev = parse(ex_dev, Subset::kDev);
      const noisemix::Manifest test = parse(ex_test, Subset::kTest);
      const noisemix::Manifest validated =
          parse(ex_validated, Subset::kValidatedExtra);
      const noisemix::Manifest expanded =
          noisemix::expand_train_dev(train, dev, test, validated);
      noisemix::write_manifest_csv(expanded, ex_out);
      std::cout << "entries=" << expanded.entries.size() << " added="
                << expanded.entries.size() - train.entries.size() -
                       dev.entries.size()
                << "\n";
      return 0;
    }

    if (eval->parsed()) {
      noisemix::TextNormOptions options;
      options.lowercase = !ev_keep_case;
      options.collapse_whitespace = !ev_keep_ws;
      options.nfc = !ev_no_nfc;
      const std::vector<noisemix::EvalRecord> records =
          noisemix::read_eval_records_csv(ev_in);
      const std::vector<noisemix::AggregateRow> rows =
          noisemix::aggregate(records, options);
      noisemix::write_aggregate_csv(rows, ev_out);
      std::cout << "records=" << records.size() << " groups=" << rows.size()
                << "\n";
      return 0;
    }

    if (presets->parsed()) {
      bool first = true;
      for (const noisemix::ChannelPreset& p : noisemix::builtin_presets()) {
        if (!first) std::cout << "\n";
        std::cout << noisemix::format_preset(p);
        first = false;
      }
      return 0;
    }
  } catch (const noisemix::Error& e) {
    std::cerr << "error: " << e.what() << "\n";  // what() = category: detail
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
