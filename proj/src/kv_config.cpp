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

#include "noisemix/kv_config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "noisemix/errors.hpp"

namespace noisemix {
namespace {

std::string trim(const std::string& s) {
  const char* ws = " \t\r\n";
  const std::size_t first = s.find_first_not_of(ws);
  if (first == std::string::npos) return "";
  const std::size_t last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

}  // namespace

std::vector<KvEntry> parse_kv_text(const std::string& text,
                                   const std::string& origin) {
  std::vector<KvEntry> entries;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      fail("bad-config", origin + ":" + std::to_string(line_no) +
                             ": expected 'key = value'");
    }
    KvEntry entry;
    entry.key = trim(line.substr(0, eq));
    entry.value = trim(line.substr(eq + 1));
    entry.line = line_no;
    if (entry.key.empty()) {
      fail("bad-config",
           origin + ":" + std::to_string(line_no) + ": empty key");
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::vector<KvEntry> parse_kv_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("io", "cannot read config file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_kv_text(buf.str(), path.filename().string());
}

std::optional<std::string> find_kv(const std::vector<KvEntry>& entries,
                                   const std::string& key) {
  const KvEntry* found = nullptr;
  for (const KvEntry& e : entries) {
    if (e.key != key) continue;
    if (found != nullptr) {
      fail("bad-config", "duplicate key '" + key + "' (lines " +
                             std::to_string(found->line) + " and " +
                             std::to_string(e.line) + ")");
    }
    found = &e;
  }
  if (found == nullptr) return std::nullopt;
  return found->value;
}

std::string require_kv(const std::vector<KvEntry>& entries,
                       const std::string& key, const std::string& origin) {
  std::optional<std::string> v = find_kv(entries, key);
  if (!v.has_value()) {
    fail("bad-config", origin + ": missing key '" + key + "'");
  }
  return *v;
}

double kv_to_double(const KvEntry& entry, const std::string& origin) {
  const std::string& s = entry.value;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) {
    fail("bad-config", origin + ":" + std::to_string(entry.line) + ": '" +
                           entry.key + "' is not a number: '" + s + "'");
  }
  return v;
}

long long kv_to_int(const KvEntry& entry, const std::string& origin) {
  const std::string& s = entry.value;
  char* end = nullptr;
  const long long v = std::strtoll(s.c_str(), &end, 10);
  if (s.empty() || end != s.c_str() + s.size()) {
    fail("bad-config", origin + ":" + std::to_string(entry.line) + ": '" +
                           entry.key + "' is not an integer: '" + s + "'");
  }
  return v;
}

}  // namespace noisemix
