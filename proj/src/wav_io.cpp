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

#include "noisemix/wav_io.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "noisemix/errors.hpp"

namespace noisemix {

namespace {

std::uint16_t read_u16(const unsigned char* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

std::uint32_t read_u32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) |
         (static_cast<std::uint32_t>(p[3]) << 24);
}

void put_u16(std::vector<unsigned char>& out, std::uint16_t v) {
  out.push_back(static_cast<unsigned char>(v & 0xff));
  out.push_back(static_cast<unsigned char>((v >> 8) & 0xff));
}

void put_u32(std::vector<unsigned char>& out, std::uint32_t v) {
  out.push_back(static_cast<unsigned char>(v & 0xff));
  out.push_back(static_cast<unsigned char>((v >> 8) & 0xff));
  out.push_back(static_cast<unsigned char>((v >> 16) & 0xff));
  out.push_back(static_cast<unsigned char>((v >> 24) & 0xff));
}

void put_tag(std::vector<unsigned char>& out, const char* tag) {
  out.insert(out.end(), tag, tag + 4);
}

}  // namespace

AudioBuffer read_wav(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("io", "cannot open '" + path.string() + "' for reading");
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
  const std::string name = path.string();

  if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0)
    fail("malformed-wav", "'" + name + "' is not a RIFF/WAVE file");

  bool have_fmt = false;
  std::uint16_t format = 0, channels = 0, bits = 0;
  std::uint32_t rate = 0;
  const unsigned char* data = nullptr;
  std::size_t data_size = 0;

  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const unsigned char* hdr = bytes.data() + pos;
    std::uint32_t chunk_size = read_u32(hdr + 4);
    pos += 8;
    if (pos + chunk_size > bytes.size())
      fail("malformed-wav", "'" + name + "' has a truncated chunk");
    if (std::memcmp(hdr, "fmt ", 4) == 0) {
      if (chunk_size < 16)
        fail("malformed-wav", "'" + name + "' has a short fmt chunk");
      const unsigned char* f = bytes.data() + pos;
      format = read_u16(f);
      channels = read_u16(f + 2);
      rate = read_u32(f + 4);
      bits = read_u16(f + 14);
      have_fmt = true;
    } else if (std::memcmp(hdr, "data", 4) == 0) {
      data = bytes.data() + pos;
      data_size = chunk_size;
    }
    pos += chunk_size + (chunk_size & 1);  // chunks are word-aligned
  }

  if (!have_fmt || data == nullptr)
    fail("malformed-wav", "'" + name + "' is missing fmt or data chunk");
  if (format != 1)
    fail("unsupported-encoding",
         "'" + name + "' is not linear PCM (format tag " +
             std::to_string(format) + ")");
  if (bits != 16)
    fail("unsupported-encoding",
         "'" + name + "' has " + std::to_string(bits) +
             " bits per sample, expected 16");
  if (channels != 1)
    fail("unsupported-encoding",
         "'" + name + "' has " + std::to_string(channels) +
             " channels, expected mono");
  if (rate == 0) fail("malformed-wav", "'" + name + "' declares zero sample rate");

  AudioBuffer buffer;
  buffer.sample_rate_hz = static_cast<int>(rate);
  std::size_t n = data_size / 2;
  buffer.samples.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto raw = static_cast<std::int16_t>(read_u16(data + 2 * i));
    buffer.samples[i] = static_cast<double>(raw) / 32768.0;
  }
  return buffer;
}

WavWriteResult write_wav(const std::filesystem::path& path,
                         const AudioBuffer& buffer) {
  if (buffer.sample_rate_hz <= 0)
    fail("invalid-input", "buffer has non-positive sample rate");
  require_nonempty(buffer, "buffer");
  require_finite(buffer, "buffer");

  const auto n = static_cast<std::uint32_t>(buffer.samples.size());
  std::vector<unsigned char> out;
  out.reserve(44 + 2 * static_cast<std::size_t>(n));

  put_tag(out, "RIFF");
  put_u32(out, 36 + 2 * n);
  put_tag(out, "WAVE");
  put_tag(out, "fmt ");
  put_u32(out, 16);
  put_u16(out, 1);  // linear PCM
  put_u16(out, 1);  // mono
  put_u32(out, static_cast<std::uint32_t>(buffer.sample_rate_hz));
  put_u32(out, static_cast<std::uint32_t>(buffer.sample_rate_hz) * 2);
  put_u16(out, 2);   // block align
  put_u16(out, 16);  // bits per sample
  put_tag(out, "data");
  put_u32(out, 2 * n);

  WavWriteResult result;
  for (double s : buffer.samples) {
    long k = std::lround(s * 32768.0);
    if (k > 32767) {
      k = 32767;
      ++result.clipped_samples;
    } else if (k < -32768) {
      k = -32768;
      ++result.clipped_samples;
    }
    put_u16(out, static_cast<std::uint16_t>(static_cast<std::int16_t>(k)));
  }

  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) fail("io", "cannot open '" + path.string() + "' for writing");
  file.write(reinterpret_cast<const char*>(out.data()),
             static_cast<std::streamsize>(out.size()));
  if (!file) fail("io", "failed writing '" + path.string() + "'");
  return result;
}

}  // namespace noisemix
