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

#ifndef NOISEMIX_KV_CONFIG_HPP_
#define NOISEMIX_KV_CONFIG_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace noisemix {

// One `key = value` line from a plain-text configuration file.
struct KvEntry {
  std::string key;
  std::string value;
  int line = 0;  // 1-based, for error messages
};

// Parses a config file of `key = value` lines.  `#` starts a comment, blank
// lines are skipped, whitespace around keys and values is trimmed.  A
// non-blank line without `=` is a bad-config error naming the line.
std::vector<KvEntry> parse_kv_file(const std::filesystem::path& path);
std::vector<KvEntry> parse_kv_text(const std::string& text,
                                   const std::string& origin);

// Convenience lookups over a parsed entry list.  Duplicate keys are a
// bad-config error when looked up; missing keys are either an error
// (require_*) or std::nullopt (find_*).
std::optional<std::string> find_kv(const std::vector<KvEntry>& entries,
                                   const std::string& key);
std::string require_kv(const std::vector<KvEntry>& entries,
                       const std::string& key, const std::string& origin);
double kv_to_double(const KvEntry& entry, const std::string& origin);
long long kv_to_int(const KvEntry& entry, const std::string& origin);

}  // namespace noisemix

#endif  // NOISEMIX_KV_CONFIG_HPP_
