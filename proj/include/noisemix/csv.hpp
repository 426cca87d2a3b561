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

#ifndef NOISEMIX_CSV_HPP_
#define NOISEMIX_CSV_HPP_

#include <filesystem>
#include <string>
#include <vector>

namespace noisemix {

struct CsvRow {
  std::vector<std::string> fields;
  int line = 0;  // 1-based line the row starts on, for error messages
};

// Delimiter-separated rows with RFC 4180 quoting: a field starting with `"`
// runs to the matching close quote, `""` escapes a literal quote, and
// delimiters/newlines inside quotes are data.  Handles \n and \r\n line
// endings.  Works for both comma and tab separators.
std::vector<CsvRow> parse_delimited(const std::string& text, char separator,
                                    const std::string& origin);
std::vector<CsvRow> read_delimited_file(const std::filesystem::path& path,
                                        char separator);

// Quotes a field if it contains the separator, a quote, or a line break.
std::string csv_escape(const std::string& field, char separator = ',');

// Shortest clean decimal for doubles ("%.10g"); used wherever numbers enter
// CSV output so formatting is reproducible.
std::string format_number(double value);

}  // namespace noisemix

#endif  // NOISEMIX_CSV_HPP_
