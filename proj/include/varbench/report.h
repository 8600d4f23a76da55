// Copyright 2026 The varbench Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef VARBENCH_REPORT_H_
#define VARBENCH_REPORT_H_

#include <array>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "varbench/metrics.h"
#include "varbench/predict.h"
#include "varbench/record.h"
#include "varbench/script.h"

namespace varbench {

class ReportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Fixed column order of the gap CSV.
const std::vector<std::string>& gap_csv_columns();

// Throws ReportError when rows is empty. Doubles are written in shortest
// round-trip form; NaN as "nan".
void write_gap_csv(std::ostream& out, std::span<const GapReportRow> rows);
std::vector<GapReportRow> read_gap_csv(std::istream& in);

// "+1.23**" style: sign, fixed precision, stars. NaN renders as "n/a".
std::string format_delta(double value, int precision, std::string_view stars);

// One section per (subset, origin) and one table per length group; Δ cells
// carry the stars of the matching paired test.
void write_gap_markdown(std::ostream& out, std::span<const GapReportRow> rows,
                        std::string_view heading);

struct BucketDistribution {
  std::array<size_t, kNumScriptBuckets> tw{};
  std::array<size_t, kNumScriptBuckets> cn{};
  size_t tw_total = 0;
  size_t cn_total = 0;
};

BucketDistribution bucket_distribution(std::span<const ReviewRecord> tw,
                                       std::span<const ReviewRecord> cn, const CharSetTables& tables);

// Counts and shares per bucket; buckets empty on both sides are omitted.
void write_distribution_markdown(std::ostream& out, const BucketDistribution& d);
void write_distribution_csv(std::ostream& out, const BucketDistribution& d);

// Valid/invalid accounting for one (model, variant) run.
struct ValidityRow {
  std::string model;
  std::string variant;
  SideCounts tw;
  SideCounts cn;
  size_t complete_pairs = 0;
  size_t incomplete_pairs = 0;

  size_t issued() const { return tw.valid + tw.invalid + cn.valid + cn.invalid; }
};

ValidityRow validity_row(std::string model, std::string variant,
                         std::span<const PredictionOutcome> outcomes);
void write_validity_markdown(std::ostream& out, std::span<const ValidityRow> rows);
void write_validity_csv(std::ostream& out, std::span<const ValidityRow> rows);

}  // namespace varbench

#endif  // VARBENCH_REPORT_H_
