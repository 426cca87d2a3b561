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

#ifndef NOISEMIX_TEXT_NORM_HPP_
#define NOISEMIX_TEXT_NORM_HPP_

#include <string>
#include <vector>

namespace noisemix {

// Scoring-time text normalization, applied before edit distances are
// computed.  Each step can be switched off; the defaults match common ASR
// evaluation practice.  Steps run in this order: NFC composition,
// lowercasing, whitespace collapsing (runs of Unicode whitespace become one
// ASCII space, ends trimmed).
struct TextNormOptions {
  bool nfc = true;
  bool lowercase = true;
  bool collapse_whitespace = true;
};

// All functions take and return UTF-8.  Malformed byte sequences are
// replaced with U+FFFD rather than rejected.
std::string normalize_text(const std::string& utf8,
                           const TextNormOptions& options = {});

// Sentence-identity normalization used when matching transcriptions across
// corpus subsets: NFC plus end trimming only (case and inner spacing are
// preserved).
std::string nfc_trim(const std::string& utf8);

// Splits into Unicode code points (each returned as a UTF-8 string); the
// character tokens behind character error rates.
std::vector<std::string> split_chars(const std::string& utf8);

// Splits on runs of Unicode whitespace; the word tokens behind word error
// rates.  Never returns empty tokens.
std::vector<std::string> split_words(const std::string& utf8);

}  // namespace noisemix

#endif  // NOISEMIX_TEXT_NORM_HPP_
