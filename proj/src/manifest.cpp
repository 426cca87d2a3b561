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

#include "noisemix/manifest.hpp"

#include <algorithm>
#include <fstream>
#include <unordered_map>
#include <unordered_set>

#include "noisemix/csv.hpp"
#include "noisemix/errors.hpp"
#include "noisemix/text_norm.hpp"

namespace noisemix {
namespace {

std::string trim(const std::string& s) {
  const char* ws = " \t\r\n";
  const std::size_t first = s.find_first_not_of(ws);
  if (first == std::string::npos) return "";
  const std::size_t last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

bool row_is_blank(const CsvRow& row) {
  for (const std::string& f : row.fields) {
    if (!trim(f).empty()) return false;
  }
  return true;
}

// Finds a header column by name; -1 when absent.
int find_column(const CsvRow& header, const std::string& name) {
  for (std::size_t i = 0; i < header.fields.size(); ++i) {
    if (trim(header.fields[i]) == name) return static_cast<int>(i);
  }
  return -1;
}

int require_column(const CsvRow& header, const std::string& name,
                   const std::string& origin) {
  const int idx = find_column(header, name);
  if (idx < 0) {
    fail("missing-column", origin + ": header lacks required column '" + name + "'");
  }
  return idx;
}

std::string field_at(const CsvRow& row, int index) {
  if (index < 0 || static_cast<std::size_t>(index) >= row.fields.size()) return "";
  return trim(row.fields[static_cast<std::size_t>(index)]);
}

void finalize(Manifest& manifest, const std::string& origin,
              const std::unordered_map<std::string, int>& path_lines) {
  std::sort(manifest.entries.begin(), manifest.entries.end(),
            [](const ManifestEntry& a, const ManifestEntry& b) {
              return a.audio_path < b.audio_path;
            });
  for (std::size_t i = 1; i < manifest.entries.size(); ++i) {
    if (manifest.entries[i].audio_path == manifest.entries[i - 1].audio_path) {
      const auto it = path_lines.find(manifest.entries[i].audio_path);
      fail("duplicate-path",
           origin + ": audio path appears twice: '" +
               manifest.entries[i].audio_path +
               (it != path_lines.end() ? "' (line " + std::to_string(it->second) + ")"
                                       : "'"));
    }
  }
}

}  // namespace

std::string subset_to_string(Subset subset) {
  switch (subset) {
    case Subset::kTrain: return "train";
    case Subset::kDev: return "dev";
    case Subset::kTest: return "test";
    case Subset::kValidatedExtra: return "validated-extra";
  }
  fail("invalid-parameter", "unknown subset value");
}

Subset subset_from_string(const std::string& s) {
  if (s == "train") return Subset::kTrain;
  if (s == "dev") return Subset::kDev;
  if (s == "test") return Subset::kTest;
  if (s == "validated-extra") return Subset::kValidatedExtra;
  fail("invalid-input", "unknown subset '" + s +
                            "' (expected train, dev, test, or validated-extra)");
}

Manifest parse_manifest(const std::filesystem::path& path, ManifestFormat format,
                        Subset default_subset) {
  const std::string origin = path.filename().string();
  const char sep = (format == ManifestFormat::kTsvCommonVoice) ? '\t' : ',';
  const std::vector<CsvRow> rows = read_delimited_file(path, sep);
  if (rows.empty() || row_is_blank(rows.front())) {
    fail("missing-column", origin + ": empty file (header row required)");
  }

  const CsvRow& header = rows.front();
  int col_speaker;
  int col_path;
  int col_sentence;
  int col_subset = -1;
  if (format == ManifestFormat::kTsvCommonVoice) {
    col_speaker = require_column(header, "client_id", origin);
    col_path = require_column(header, "path", origin);
    col_sentence = require_column(header, "sentence", origin);
  } else {
    col_path = require_column(header, "path", origin);
    col_sentence = require_column(header, "sentence", origin);
    col_speaker = require_column(header, "speaker", origin);
    col_subset = find_column(header, "subset");
  }

  Manifest manifest;
  std::unordered_map<std::string, int> path_lines;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const CsvRow& row = rows[r];
    if (row_is_blank(row)) continue;
    ManifestEntry entry;
    entry.speaker_id = field_at(row, col_speaker);
    entry.audio_path = field_at(row, col_path);
    entry.sentence = field_at(row, col_sentence);
    entry.subset = default_subset;
    if (col_subset >= 0) {
      const std::string subset_str = field_at(row, col_subset);
      if (!subset_str.empty()) entry.subset = subset_from_string(subset_str);
    }
    if (entry.audio_path.empty()) {
      fail("invalid-input",
           origin + ":" + std::to_string(row.line) + ": empty audio path");
    }
    if (entry.sentence.empty()) {
      fail("invalid-input",
           origin + ":" + std::to_string(row.line) + ": empty sentence");
    }
    path_lines.emplace(entry.audio_path, row.line);
    manifest.entries.push_back(std::move(entry));
  }
  finalize(manifest, origin, path_lines);
  return manifest;
}

void write_manifest_csv(const Manifest& manifest,
                        const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail("io", "cannot write manifest: " + path.string());
  out << "path,sentence,speaker,subset\n";
  for (const ManifestEntry& e : manifest.entries) {
    out << csv_escape(e.audio_path) << ',' << csv_escape(e.sentence) << ','
        << csv_escape(e.speaker_id) << ',' << subset_to_string(e.subset) << '\n';
  }
  if (!out.flush()) fail("io", "failed writing manifest: " + path.string());
}

Manifest expand_train_dev(const Manifest& train, const Manifest& dev,
                          const Manifest& test, const Manifest& validated) {
  std::unordered_set<std::string> traindev_speakers;
  std::unordered_set<std::string> known_paths;
  for (const Manifest* m : {&train, &dev}) {
    for (const ManifestEntry& e : m->entries) {
      traindev_speakers.insert(e.speaker_id);
      if (!known_paths.insert(e.audio_path).second) {
        fail("input-inconsistency",
             "audio path appears in both train and dev: " + e.audio_path);
      }
    }
  }

  std::unordered_set<std::string> test_speakers;
  std::unordered_set<std::string> test_sentences;  // NFC + trimmed
  for (const ManifestEntry& e : test.entries) {
    test_speakers.insert(e.speaker_id);
    test_sentences.insert(nfc_trim(e.sentence));
    if (!known_paths.insert(e.audio_path).second) {
      fail("input-inconsistency",
           "audio path appears in both test and train/dev: " + e.audio_path);
    }
    if (traindev_speakers.count(e.speaker_id) != 0) {
      fail("input-inconsistency",
           "speaker appears in both train/dev and test: " + e.speaker_id);
    }
  }

  Manifest out;
  out.entries.reserve(train.entries.size() + dev.entries.size());
  out.entries.insert(out.entries.end(), train.entries.begin(), train.entries.end());
  out.entries.insert(out.entries.end(), dev.entries.begin(), dev.entries.end());

  for (const ManifestEntry& e : validated.entries) {
    if (known_paths.count(e.audio_path) != 0) continue;       // already used
    if (traindev_speakers.count(e.speaker_id) == 0) continue; // stranger
    if (test_speakers.count(e.speaker_id) != 0) continue;     // speaker leak
    if (test_sentences.count(nfc_trim(e.sentence)) != 0) continue;  // text leak
    ManifestEntry extra = e;
    extra.subset = Subset::kValidatedExtra;
    out.entries.push_back(std::move(extra));
    known_paths.insert(e.audio_path);
  }

  std::sort(out.entries.begin(), out.entries.end(),
            [](const ManifestEntry& a, const ManifestEntry& b) {
              return a.audio_path < b.audio_path;
            });
  return out;
}

}  // namespace noisemix
