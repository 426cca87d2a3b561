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

#include "noisemix/text_norm.hpp"

#include <unicode/uchar.h>
#include <unicode/unorm2.h>
#include <unicode/ustring.h>
#include <unicode/utf16.h>

#include <cstdint>

#include "noisemix/errors.hpp"

namespace noisemix {
namespace {

void check_icu(UErrorCode err, const char* what) {
  if (U_FAILURE(err)) {
    fail("invalid-input", std::string(what) + ": " + u_errorName(err));
  }
}

// UTF-8 -> UTF-16 with U+FFFD substitution for malformed sequences.
std::u16string to_utf16(const std::string& s) {
  if (s.empty()) return {};
  UErrorCode err = U_ZERO_ERROR;
  int32_t len = 0;
  u_strFromUTF8WithSub(nullptr, 0, &len, s.data(), static_cast<int32_t>(s.size()),
                       0xFFFD, nullptr, &err);
  if (err != U_BUFFER_OVERFLOW_ERROR) check_icu(err, "utf8 decode");
  std::u16string out(static_cast<std::size_t>(len), u'\0');
  err = U_ZERO_ERROR;
  u_strFromUTF8WithSub(out.data(), len, nullptr, s.data(),
                       static_cast<int32_t>(s.size()), 0xFFFD, nullptr, &err);
  check_icu(err, "utf8 decode");
  return out;
}

std::string to_utf8(const std::u16string& s) {
  if (s.empty()) return {};
  UErrorCode err = U_ZERO_ERROR;
  int32_t len = 0;
  u_strToUTF8(nullptr, 0, &len, s.data(), static_cast<int32_t>(s.size()), &err);
  if (err != U_BUFFER_OVERFLOW_ERROR) check_icu(err, "utf8 encode");
  std::string out(static_cast<std::size_t>(len), '\0');
  err = U_ZERO_ERROR;
  u_strToUTF8(out.data(), len, nullptr, s.data(), static_cast<int32_t>(s.size()),
              &err);
  check_icu(err, "utf8 encode");
  return out;
}

std::u16string nfc16(const std::u16string& s) {
  if (s.empty()) return {};
  UErrorCode err = U_ZERO_ERROR;
  const UNormalizer2* nfc = unorm2_getNFCInstance(&err);
  check_icu(err, "NFC instance");
  int32_t len = unorm2_normalize(nfc, s.data(), static_cast<int32_t>(s.size()),
                                 nullptr, 0, &err);
  if (err != U_BUFFER_OVERFLOW_ERROR) check_icu(err, "NFC normalize");
  std::u16string out(static_cast<std::size_t>(len), u'\0');
  err = U_ZERO_ERROR;
  unorm2_normalize(nfc, s.data(), static_cast<int32_t>(s.size()), out.data(), len,
                   &err);
  check_icu(err, "NFC normalize");
  return out;
}

std::u16string lower16(const std::u16string& s) {
  if (s.empty()) return {};
  UErrorCode err = U_ZERO_ERROR;
  // Root locale: language-independent case mapping.
  int32_t len = u_strToLower(nullptr, 0, s.data(), static_cast<int32_t>(s.size()),
                             "", &err);
  if (err != U_BUFFER_OVERFLOW_ERROR) check_icu(err, "lowercase");
  std::u16string out(static_cast<std::size_t>(len), u'\0');
  err = U_ZERO_ERROR;
  u_strToLower(out.data(), len, s.data(), static_cast<int32_t>(s.size()), "", &err);
  check_icu(err, "lowercase");
  return out;
}

bool is_space_cp(UChar32 cp) { return u_isUWhiteSpace(cp) != 0; }

std::u16string collapse16(const std::u16string& s) {
  std::u16string out;
  out.reserve(s.size());
  const int32_t n = static_cast<int32_t>(s.size());
  int32_t i = 0;
  bool pending_space = false;
  while (i < n) {
    UChar32 cp;
    const int32_t start = i;
    U16_NEXT(s.data(), i, n, cp);
    if (is_space_cp(cp)) {
      pending_space = !out.empty();  // also trims leading whitespace
      continue;
    }
    if (pending_space) {
      out.push_back(u' ');
      pending_space = false;
    }
    out.append(s, static_cast<std::size_t>(start),
               static_cast<std::size_t>(i - start));
  }
  return out;  // trailing whitespace never got flushed: trimmed
}

std::u16string trim16(const std::u16string& s) {
  const int32_t n = static_cast<int32_t>(s.size());
  int32_t begin = 0;
  while (begin < n) {
    int32_t next = begin;
    UChar32 cp;
    U16_NEXT(s.data(), next, n, cp);
    if (!is_space_cp(cp)) break;
    begin = next;
  }
  int32_t end = n;
  while (end > begin) {
    int32_t prev = end;
    UChar32 cp;
    U16_PREV(s.data(), begin, prev, cp);
    if (!is_space_cp(cp)) break;
    end = prev;
  }
  return s.substr(static_cast<std::size_t>(begin),
                  static_cast<std::size_t>(end - begin));
}

}  // namespace

std::string normalize_text(const std::string& utf8, const TextNormOptions& options) {
  std::u16string s = to_utf16(utf8);
  if (options.nfc) s = nfc16(s);
  if (options.lowercase) s = lower16(s);
  if (options.collapse_whitespace) s = collapse16(s);
  return to_utf8(s);
}

std::string nfc_trim(const std::string& utf8) {
  return to_utf8(trim16(nfc16(to_utf16(utf8))));
}

std::vector<std::string> split_chars(const std::string& utf8) {
  const std::u16string s = to_utf16(utf8);
  std::vector<std::string> chars;
  const int32_t n = static_cast<int32_t>(s.size());
  int32_t i = 0;
  while (i < n) {
    const int32_t start = i;
    UChar32 cp;
    U16_NEXT(s.data(), i, n, cp);
    chars.push_back(to_utf8(s.substr(static_cast<std::size_t>(start),
                                     static_cast<std::size_t>(i - start))));
  }
  return chars;
}

std::vector<std::string> split_words(const std::string& utf8) {
  const std::u16string s = to_utf16(utf8);
  std::vector<std::string> words;
  std::u16string current;
  const int32_t n = static_cast<int32_t>(s.size());
  int32_t i = 0;
  while (i < n) {
    const int32_t start = i;
    UChar32 cp;
    U16_NEXT(s.data(), i, n, cp);
    if (is_space_cp(cp)) {
      if (!current.empty()) {
        words.push_back(to_utf8(current));
        current.clear();
      }
    } else {
      current.append(s, static_cast<std::size_t>(start),
                     static_cast<std::size_t>(i - start));
    }
  }
  if (!current.empty()) words.push_back(to_utf8(current));
  return words;
}

}  // namespace noisemix
