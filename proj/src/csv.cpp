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

#include "noisemix/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "noisemix/errors.hpp"

namespace noisemix {

std::vector<CsvRow> parse_delimited(const std::string& text, char separator,
                                    const std::string& origin) {
  std::vector<CsvRow> rows;
  const std::size_t n = text.size();
  std::size_t i = 0;
  int line = 1;

  while (i < n) {
    CsvRow row;
    row.line = line;
    std::string field;
    bool row_done = false;
    while (!row_done) {
      if (i < n && text[i] == '"') {
        // Quoted field: runs to the matching quote; "" is a literal quote.
        ++i;
        while (true) {
          if (i >= n) {
            fail("invalid-input", origin + ":" + std::to_string(row.line) +
                                      ": unterminated quoted field");
          }
          const char c = text[i++];
          if (c == '"') {
            if (i < n && text[i] == '"') {
              field += '"';
              ++i;
            } else {
              break;
            }
          } else {
            if (c == '\n') ++line;
            field += c;
          }
        }
      }
      // Unquoted run up to separator or end of line.
      while (i < n && text[i] != separator && text[i] != '\n' && text[i] != '\r') {
        field += text[i++];
      }
      if (i < n && text[i] == separator) {
        row.fields.push_back(std::move(field));
        field.clear();
        ++i;
        continue;
      }
      // End of line (or of input).
      row.fields.push_back(std::move(field));
      field.clear();
      if (i < n && text[i] == '\r') ++i;
      if (i < n && text[i] == '\n') {
        ++i;
        ++line;
      }
      row_done = true;
    }
    rows.push_back(std::move(row));
  }

  // A trailing newline produces no phantom empty row; an intentionally empty
  // last line would have been consumed above as a one-empty-field row only
  // if followed by content, so nothing to strip here beyond the loop bound.
  return rows;
}

std::vector<CsvRow> read_delimited_file(const std::filesystem::path& path,
                                        char separator) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("io", "cannot read file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_delimited(buf.str(), separator, path.filename().string());
}

std::string csv_escape(const std::string& field, char separator) {
  const bool needs_quotes =
      field.find(separator) != std::string::npos ||
      field.find('"') != std::string::npos ||
      field.find('\n') != std::string::npos ||
      field.find('\r') != std::string::npos;
  if (!needs_quotes) return field;
  std::string out = "\"";
  for (const char c : field) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", value);
  return std::string(buf);
}

}  // namespace noisemix
