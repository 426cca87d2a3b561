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

#ifndef NOISEMIX_MANIFEST_HPP_
#define NOISEMIX_MANIFEST_HPP_

#include <filesystem>
#include <string>
#include <vector>

namespace noisemix {

enum class Subset { kTrain, kDev, kTest, kValidatedExtra };

std::string subset_to_string(Subset subset);
Subset subset_from_string(const std::string& s);

struct ManifestEntry {
  std::string speaker_id;
  std::string audio_path;  // relative path, unique within a manifest
  std::string sentence;
  Subset subset = Subset::kTrain;
};

// Entries are kept sorted by audio_path so downstream index-based seeding is
// independent of filesystem enumeration order.
struct Manifest {
  std::vector<ManifestEntry> entries;
};

enum class ManifestFormat {
  kTsvCommonVoice,  // tab-separated, header with client_id/path/sentence
  kCsvSimple,       // comma-separated, header with path/sentence/speaker/subset
};

// Parses, trims, validates (non-empty path and sentence, unique paths) and
// sorts.  Errors carry 1-based line numbers.  default_subset applies to
// formats/rows that do not carry their own subset column.
Manifest parse_manifest(const std::filesystem::path& path, ManifestFormat format,
                        Subset default_subset = Subset::kTrain);

// Writes the kCsvSimple representation (path,sentence,speaker,subset).
void write_manifest_csv(const Manifest& manifest,
                        const std::filesystem::path& path);

// Training-set expansion: returns train + dev + those validated entries that
// are new (path not in train/dev/test), spoken by a train/dev speaker, and
// leak nothing into the test set (speaker not in test; sentence — compared
// NFC-normalized and trimmed — not in test).  Inputs whose train/dev
// speakers already appear in test are rejected as input-inconsistency.
Manifest expand_train_dev(const Manifest& train, const Manifest& dev,
                          const Manifest& test, const Manifest& validated);

}  // namespace noisemix

#endif  // NOISEMIX_MANIFEST_HPP_
