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

#ifndef NOISEMIX_METRICS_HPP_
#define NOISEMIX_METRICS_HPP_

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <numeric>
#include <string>
#include <vector>

#include "noisemix/text_norm.hpp"

namespace noisemix {

// Minimum number of single-token insertions, deletions, and substitutions
// transforming a into b.  Two-row dynamic program, O(|a|*|b|).
template <typename T>
std::size_t levenshtein(const std::vector<T>& a, const std::vector<T>& b) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  if (n == 0) return m;
  if (m == 0) return n;
  std::vector<std::size_t> prev(m + 1);
  std::vector<std::size_t> curr(m + 1);
  std::iota(prev.begin(), prev.end(), std::size_t{0});
  for (std::size_t i = 1; i <= n; ++i) {
    curr[0] = i;
    for (std::size_t j = 1; j <= m; ++j) {
      const std::size_t subst = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      curr[j] = std::min({prev[j] + 1, curr[j - 1] + 1, subst});
    }
    std::swap(prev, curr);
  }
  return prev[m];
}

// Character error rate: code-point edit distance over the normalized texts
// divided by the normalized reference length.  Deliberately NOT clamped at
// 1 — degenerate hypotheses longer than the reference should show up as
// rates above 1.  Empty normalized reference is an undefined-metric error.
double cer(const std::string& reference, const std::string& hypothesis,
           const TextNormOptions& options = {});

// Word error rate: whitespace-token edit distance divided by the reference
// word count.  Same normalization and error policy as cer().
double wer(const std::string& reference, const std::string& hypothesis,
           const TextNormOptions& options = {});

struct EvalRecord {
  std::string scenario;
  double snr_db = 0.0;
  std::string reference;
  std::string hypothesis;
};

struct AggregateRow {
  std::string scenario;
  double snr_db = 0.0;
  double mean_cer = 0.0;
  double mean_wer = 0.0;
  std::size_t count = 0;
};

// Scores every record and averages per (scenario, snr) group; rows come out
// sorted by scenario then SNR ascending.  Empty input is an error.
std::vector<AggregateRow> aggregate(const std::vector<EvalRecord>& records,
                                    const TextNormOptions& options = {});

// CSV of `scenario,snr_db,reference,hypothesis` (header required).
std::vector<EvalRecord> read_eval_records_csv(const std::filesystem::path& path);

// CSV of `scenario,snr_db,mean_cer,mean_wer,count`.
void write_aggregate_csv(const std::vector<AggregateRow>& rows,
                         const std::filesystem::path& path);

}  // namespace noisemix

#endif  // NOISEMIX_METRICS_HPP_
