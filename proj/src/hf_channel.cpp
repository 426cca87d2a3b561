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

#include "noisemix/hf_channel.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "noisemix/errors.hpp"
#include "noisemix/fft.hpp"
#include "noisemix/fir.hpp"
#include "noisemix/kv_config.hpp"
#include "noisemix/resample.hpp"
#include "noisemix/signal_ops.hpp"

namespace noisemix {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Sub-seed tags: every random stream inside one apply_channel call is an
// independent, documented function of the caller's seed.
constexpr std::uint64_t kFadingTagBase = 0x66616465;  // per-path, + path index
constexpr std::uint64_t kNoiseTag = 0x6e6f6973;

Seed sub_seed(Seed seed, std::uint64_t tag) {
  return Seed{mix64(seed.value ^ mix64(tag))};
}

// Number formatting for preset dumps: shortest round-trip-ish decimal, with
// a forced ".0" so integral values still read as reals.
std::string fmt_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  std::string s(buf);
  if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
      s.find("inf") == std::string::npos && s.find("nan") == std::string::npos) {
    s += ".0";
  }
  return s;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

ChannelPreset two_path_preset(const std::string& name, double delay2_s,
                              double spread_hz) {
  ChannelPreset p;
  p.name = name;
  const double g = 1.0 / std::sqrt(2.0);  // equal attenuation, unit total power
  p.paths.push_back({g, 0.0, spread_hz, 0.0});
  p.paths.push_back({g, delay2_s, spread_hz, 0.0});
  return p;
}

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace

ChannelPreset ccir_flutter() { return two_path_preset("ccir-flutter", 0.0005, 10.0); }
ChannelPreset ccir_poor() { return two_path_preset("ccir-poor", 0.002, 1.0); }

const std::vector<ChannelPreset>& builtin_presets() {
  static const std::vector<ChannelPreset> presets = {ccir_flutter(), ccir_poor()};
  return presets;
}

ChannelPreset validate_preset(const ChannelPreset& preset) {
  ChannelPreset p = preset;
  if (p.paths.empty()) {
    fail("invalid-parameter", "channel preset needs at least one path");
  }
  if (p.processing_rate_hz <= 0) {
    fail("invalid-parameter", "processing rate must be positive");
  }
  const double nyquist = p.processing_rate_hz / 2.0;
  if (!(p.noise_bandwidth_hz > 0.0) || p.noise_bandwidth_hz > nyquist ||
      !std::isfinite(p.noise_bandwidth_hz)) {
    fail("invalid-parameter",
         "noise bandwidth must lie in (0, processing_rate / 2]");
  }
  double power = 0.0;
  for (const PathSpec& path : p.paths) {
    if (!std::isfinite(path.gain) || !std::isfinite(path.delay_s) ||
        !std::isfinite(path.doppler_spread_hz) || !std::isfinite(path.doppler_shift_hz)) {
      fail("invalid-parameter", "path parameters must be finite");
    }
    if (path.delay_s < 0.0) fail("invalid-parameter", "path delay must be >= 0");
    if (path.doppler_spread_hz < 0.0) {
      fail("invalid-parameter", "Doppler spread must be >= 0");
    }
    if (path.doppler_spread_hz >= nyquist) {
      fail("invalid-parameter", "Doppler spread too large for the processing rate");
    }
    power += path.gain * path.gain;
  }
  if (!(power > 0.0)) {
    fail("invalid-parameter", "at least one path must have nonzero gain");
  }
  // Normalize total mean output power (fading is unit power) to 1.
  const double scale = 1.0 / std::sqrt(power);
  for (PathSpec& path : p.paths) path.gain *= scale;
  return p;
}

ChannelPreset load_preset_file(const std::filesystem::path& path) {
  const std::string origin = path.filename().string();
  const std::vector<KvEntry> entries = parse_kv_file(path);

  ChannelPreset preset;
  preset.name = path.stem().string();
  std::size_t path_count = 0;

  // First pass: global keys and the highest path index present.
  for (const KvEntry& e : entries) {
    if (e.key == "name" || e.key == "processing_rate_hz" ||
        e.key == "noise_bandwidth_hz") {
      continue;
    }
    if (e.key.rfind("path", 0) == 0) {
      const std::size_t dot = e.key.find('.');
      if (dot != std::string::npos && dot > 4) {
        const std::string index_str = e.key.substr(4, dot - 4);
        char* end = nullptr;
        const long n = std::strtol(index_str.c_str(), &end, 10);
        const std::string field = e.key.substr(dot + 1);
        const bool known_field =
            field == "gain" || field == "delay_ms" ||
            field == "doppler_spread_hz" || field == "doppler_shift_hz";
        if (end == index_str.c_str() + index_str.size() && n >= 1 && known_field) {
          path_count = std::max(path_count, static_cast<std::size_t>(n));
          continue;
        }
      }
    }
    fail("bad-config", origin + ":" + std::to_string(e.line) +
                           ": unknown key '" + e.key + "'");
  }
  if (path_count == 0) {
    fail("bad-config", origin + ": preset defines no paths (expected path1.* keys)");
  }

  if (std::optional<std::string> v = find_kv(entries, "name")) preset.name = *v;
  preset.paths.resize(path_count);
  for (const KvEntry& e : entries) {
    if (e.key == "name") continue;
    if (e.key == "processing_rate_hz") {
      preset.processing_rate_hz = static_cast<int>(kv_to_int(e, origin));
      continue;
    }
    if (e.key == "noise_bandwidth_hz") {
      preset.noise_bandwidth_hz = kv_to_double(e, origin);
      continue;
    }
    const std::size_t dot = e.key.find('.');
    const std::size_t n = static_cast<std::size_t>(
        std::strtol(e.key.substr(4, dot - 4).c_str(), nullptr, 10));
    PathSpec& spec = preset.paths[n - 1];
    const std::string field = e.key.substr(dot + 1);
    if (field == "gain") spec.gain = kv_to_double(e, origin);
    else if (field == "delay_ms") spec.delay_s = kv_to_double(e, origin) / 1000.0;
    else if (field == "doppler_spread_hz") spec.doppler_spread_hz = kv_to_double(e, origin);
    else spec.doppler_shift_hz = kv_to_double(e, origin);
  }
  return validate_preset(preset);
}

std::string format_preset(const ChannelPreset& preset) {
  std::ostringstream out;
  out << "name = " << preset.name << "\n";
  out << "processing_rate_hz = " << preset.processing_rate_hz << "\n";
  out << "noise_bandwidth_hz = " << fmt_real(preset.noise_bandwidth_hz) << "\n";
  for (std::size_t i = 0; i < preset.paths.size(); ++i) {
    const PathSpec& p = preset.paths[i];
    const std::string prefix = "path" + std::to_string(i + 1) + ".";
    out << prefix << "gain = " << fmt_real(p.gain) << "\n";
    out << prefix << "delay_ms = " << fmt_real(p.delay_s * 1000.0) << "\n";
    out << prefix << "doppler_spread_hz = " << fmt_real(p.doppler_spread_hz) << "\n";
    out << prefix << "doppler_shift_hz = " << fmt_real(p.doppler_shift_hz) << "\n";
  }
  return out.str();
}

ChannelPreset resolve_preset(const std::string& name_or_path) {
  const std::string key = lower(name_or_path);
  for (const ChannelPreset& p : builtin_presets()) {
    if (p.name == key) return validate_preset(p);
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(name_or_path, ec)) {
    return load_preset_file(name_or_path);
  }
  fail("bad-config", "unknown preset (not a built-in name or readable file): " +
                         name_or_path);
}

std::vector<std::complex<double>> generate_fading_process(
    std::size_t n_samples, double rate_hz, double spread_hz, double shift_hz,
    Seed seed) {
  if (n_samples == 0) fail("invalid-parameter", "fading length must be >= 1");
  if (!(rate_hz > 0.0) || !std::isfinite(rate_hz)) {
    fail("invalid-parameter", "fading sample rate must be positive");
  }
  if (!(spread_hz >= 0.0) || !std::isfinite(spread_hz) || !std::isfinite(shift_hz)) {
    fail("invalid-parameter", "Doppler parameters must be finite, spread >= 0");
  }
  if (spread_hz >= rate_hz / 2.0) {
    fail("invalid-parameter", "Doppler spread must be below half the sample rate");
  }
  if (spread_hz == 0.0) {
    // Zero-spread limit: a constant unit envelope.
    return std::vector<std::complex<double>>(n_samples, {1.0, 0.0});
  }

  // Shape white complex Gaussian bins by the square root of the Gaussian
  // power spectrum at a low control rate, transform to time, then
  // band-limited-interpolate up to the processing rate.  The control rate
  // keeps the fading band well inside its Nyquist range.
  const double ctrl_rate = std::min(std::max(64.0, 16.0 * spread_hz), rate_hz);
  const double sigma = spread_hz / 2.0;
  const std::size_t guard = 64;  // interpolation kernel clearance per side
  const double duration_s = static_cast<double>(n_samples) / rate_hz;
  const std::size_t needed =
      static_cast<std::size_t>(std::ceil(duration_s * ctrl_rate)) + 1 + 2 * guard;
  const std::size_t m = next_pow2(needed);

  Rng rng(seed);
  std::vector<std::complex<double>> spectrum(m);
  double psd_sum = 0.0;
  std::vector<double> psd(m);
  for (std::size_t k = 0; k < m; ++k) {
    const double f = (k <= m / 2 ? static_cast<double>(k)
                                 : static_cast<double>(k) - static_cast<double>(m)) *
                     ctrl_rate / static_cast<double>(m);
    psd[k] = std::exp(-(f * f) / (2.0 * sigma * sigma));
    psd_sum += psd[k];
  }
  // Mean power of ifft(spectrum) is (2 / m^2) * sum(psd) before scaling;
  // this factor makes it exactly 1 in expectation.
  const double scale = static_cast<double>(m) / std::sqrt(2.0 * psd_sum);
  for (std::size_t k = 0; k < m; ++k) {
    const double amp = scale * std::sqrt(psd[k]);
    const double re = rng.gaussian();
    const double im = rng.gaussian();
    spectrum[k] = {amp * re, amp * im};
  }
  const std::vector<std::complex<double>> ctrl = ifft(spectrum);

  std::vector<std::complex<double>> out = bandlimited_interp(
      ctrl, static_cast<double>(guard), ctrl_rate / rate_hz, n_samples);
  if (shift_hz != 0.0) {
    for (std::size_t j = 0; j < n_samples; ++j) {
      const double phase = 2.0 * kPi * shift_hz * static_cast<double>(j) / rate_hz;
      out[j] *= std::complex<double>(std::cos(phase), std::sin(phase));
    }
  }
  return out;
}

AudioBuffer apply_channel(const AudioBuffer& signal, const ChannelPreset& preset,
                          SnrDb target, Seed seed,
                          const ChannelSimOptions& options) {
  require_valid(signal, "signal");
  require_nonempty(signal, "signal");
  const ChannelPreset p = validate_preset(preset);
  if (rms(signal) == 0.0) return signal;  // silence in, silence out

  const int rate = p.processing_rate_hz;
  const AudioBuffer proc = resample(signal, rate);
  const std::vector<std::complex<double>> x = analytic_signal(proc);
  const std::size_t len = x.size();

  // Faded tapped delay line: independent fading per path.
  std::vector<std::complex<double>> faded(len, {0.0, 0.0});
  for (std::size_t i = 0; i < p.paths.size(); ++i) {
    const PathSpec& path = p.paths[i];
    const std::size_t delay = static_cast<std::size_t>(
        std::lround(path.delay_s * static_cast<double>(rate)));
    if (delay >= len) continue;
    if (options.freeze_fading) {
      for (std::size_t t = delay; t < len; ++t) {
        faded[t] += path.gain * x[t - delay];
      }
    } else {
      const std::vector<std::complex<double>> fading = generate_fading_process(
          len, static_cast<double>(rate), path.doppler_spread_hz,
          path.doppler_shift_hz, sub_seed(seed, kFadingTagBase + i));
      for (std::size_t t = delay; t < len; ++t) {
        faded[t] += path.gain * fading[t] * x[t - delay];
      }
    }
  }

  std::vector<double> out_real(len);
  for (std::size_t t = 0; t < len; ++t) out_real[t] = faded[t].real();

  // Band-limited complex noise scaled against the faded signal, which is
  // what actually rides the channel.
  const double faded_rms = rms(std::span<const double>(out_real));
  if (faded_rms > 0.0) {
    Rng rng(sub_seed(seed, kNoiseTag));
    std::vector<std::complex<double>> noise(len);
    for (std::size_t t = 0; t < len; ++t) {
      const double re = rng.gaussian();
      const double im = rng.gaussian();
      noise[t] = {re, im};
    }
    if (p.noise_bandwidth_hz < rate / 2.0) {
      noise = lowpass(std::span<const std::complex<double>>(noise),
                      p.noise_bandwidth_hz, static_cast<double>(rate));
    }
    double noise_power = 0.0;
    for (const std::complex<double>& v : noise) noise_power += v.real() * v.real();
    const double noise_rms = std::sqrt(noise_power / static_cast<double>(len));
    if (noise_rms == 0.0) fail("cannot-scale", "filtered noise has zero RMS");
    const double scale = target_noise_rms(faded_rms, target) / noise_rms;
    for (std::size_t t = 0; t < len; ++t) {
      out_real[t] += scale * noise[t].real();
    }
  }

  AudioBuffer channel_out;
  channel_out.sample_rate_hz = rate;
  channel_out.samples = std::move(out_real);
  AudioBuffer back = resample(channel_out, signal.sample_rate_hz);
  back.samples.resize(signal.size(), 0.0);  // pad/truncate the rate round trip
  return back;
}

}  // namespace noisemix
