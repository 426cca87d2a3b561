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

#include "noisemix/metrics.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <utility>

#include "noisemix/csv.hpp"
#include "noisemix/errors.hpp"

namespace noisemix {

double cer(const std::string& reference, const std::string& hypothesis,
           const TextNormOptions& options) {
  const std::vector<std::string> ref = split_chars(normalize_text(reference, options));
  if (ref.empty()) {
    fail("undefined-metric", "reference is empty after normalization");
  }
  const std::vector<std::string> hyp = split_chars(normalize_text(hypothesis, options));
  return static_cast<double>(levenshtein(ref, hyp)) / static_cast<double>(ref.size());
}

double wer(const std::string& reference, const std::string& hypothesis,
           const TextNormOptions& options) {
  const std::vector<std::string> ref = split_words(normalize_text(reference, options));
  if (ref.empty()) {
    fail("undefined-metric", "reference has no words after normalization");
  }
  const std::vector<std::string> hyp = split_words(normalize_text(hypothesis, options));
  return static_cast<double>(levenshtein(ref, hyp)) / static_cast<double>(ref.size());
}

std::vector<AggregateRow> aggregate(const std::vector<EvalRecord>& records,
                                    const TextNormOptions& options) {
  if (records.empty()) fail("invalid-input", "no evaluation records to aggregate");

  // Group sums keyed (scenario, snr); std::map gives the required
  // scenario-then-SNR output ordering directly.
  struct Sums {
    double cer_sum = 0.0;
    double wer_sum = 0.0;
    std::size_t count = 0;
  };
  std::map<std::pair<std::string, double>, Sums> groups;
  for (const EvalRecord& r : records) {
    Sums& s = groups[{r.scenario, r.snr_db}];
    s.cer_sum += cer(r.reference, r.hypothesis, options);
    s.wer_sum += wer(r.reference, r.hypothesis, options);
    ++s.count;
  }

  std::vector<AggregateRow> rows;
  rows.reserve(groups.size());
  for (const auto& [key, sums] : groups) {
    AggregateRow row;
    row.scenario = key.first;
    row.snr_db = key.second;
    row.mean_cer = sums.cer_sum / static_cast<double>(sums.count);
    row.mean_wer = sums.wer_sum / static_cast<double>(sums.count);
    row.count = sums.count;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<EvalRecord> read_eval_records_csv(const std::filesystem::path& path) {
  const std::string origin = path.filename().string();
  const std::vector<CsvRow> rows = read_delimited_file(path, ',');
  if (rows.empty()) fail("missing-column", origin + ": empty file");

  const CsvRow& header = rows.front();
  int cols[4] = {-1, -1, -1, -1};
  const char* names[4] = {"scenario", "snr_db", "reference", "hypothesis"};
  for (int c = 0; c < 4; ++c) {
    for (std::size_t i = 0; i < header.fields.size(); ++i) {
      if (header.fields[i] == names[c]) cols[c] = static_cast<int>(i);
    }
    if (cols[c] < 0) {
      fail("missing-column",
           origin + ": header lacks required column '" + std::string(names[c]) + "'");
    }
  }

  std::vector<EvalRecord> records;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const CsvRow& row = rows[r];
    bool blank = true;
    for (const std::string& f : row.fields) {
      if (!f.empty()) blank = false;
    }
    if (blank) continue;
    EvalRecord record;
    auto get = [&](int c) -> std::string {
      return c >= 0 && static_cast<std::size_t>(c) < row.fields.size()
                 ? row.fields[static_cast<std::size_t>(c)]
                 : "";
    };
    record.scenario = get(cols[0]);
    const std::string snr_str = get(cols[1]);
    char* end = nullptr;
    record.snr_db = std::strtod(snr_str.c_str(), &end);
    if (snr_str.empty() || end != snr_str.c_str() + snr_str.size()) {
      fail("invalid-input", origin + ":" + std::to_string(row.line) +
                                ": snr_db is not a number: '" + snr_str + "'");
    }
    record.reference = get(cols[2]);
    record.hypothesis = get(cols[3]);
    records.push_back(std::move(record));
  }
  return records;
}

void write_aggregate_csv(const std::vector<AggregateRow>& rows,
                         const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail("io", "cannot write aggregate CSV: " + path.string());
  out << "scenario,snr_db,mean_cer,mean_wer,count\n";
  for (const AggregateRow& row : rows) {
    out << csv_escape(row.scenario) << ',' << format_number(row.snr_db) << ','
        << format_number(row.mean_cer) << ',' << format_number(row.mean_wer) << ','
        << row.count << '\n';
  }
  if (!out.flush()) fail("io", "failed writing aggregate CSV: " + path.string());
}

}  // namespace noisemix
