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

#ifndef VARBENCH_SWEEP_H_
#define VARBENCH_SWEEP_H_

// Length-sweep pilot: three-way sentiment accuracy per 10-character bin.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "varbench/llm_client.h"
#include "varbench/pairing.h"
#include "varbench/record.h"

namespace varbench {

struct SweepConfig {
  int64_t bin_width = 10;
  int64_t max_len = 500;
  size_t per_bin_quota = 200;  // per (bin, class)
  uint64_t seed = 0;
  ClassBoundaries classes;
  int parallelism = 1;
};

// Case-insensitive exact label after trimming; anything else is nullopt.
std::optional<SentimentClass> parse_sentiment_prediction(std::string_view raw_text);

struct SweepCell {
  SentimentClass sentiment = SentimentClass::kNegative;
  size_t available = 0;
  size_t sampled = 0;
  size_t valid = 0;  // predictions with a recognised label
  size_t correct = 0;
  double sq_error_sum = 0.0;  // over class ordinals negative=0, neutral=1, positive=2
  bool shortfall = false;     // available < quota

  double accuracy() const;
  double mse() const;
};

struct SweepRow {
  int64_t bin = 0;
  std::vector<SweepCell> cells;  // only classes with at least one sample
  size_t valid = 0;
  size_t correct = 0;
  double sq_error_sum = 0.0;

  double accuracy() const;
  double mse() const;
};

struct SweepTable {
  std::vector<SweepRow> rows;  // bins with at least one sample, ascending
  size_t issued = 0;
  size_t excluded_predictions = 0;
};

// Deterministic per-cell sample: records ordered by id, permuted with a
// seed derived from (seed, bin, class), first `quota` taken.
std::vector<std::vector<const ReviewRecord*>> sweep_samples(std::span<const ReviewRecord> records,
                                                            const SweepConfig& config,
                                                            std::vector<SweepCell>* cells);

SweepTable length_sweep(std::span<const ReviewRecord> records, const ChatModel& model,
                        const SweepConfig& config = {});

// bin,range,class,available,sampled,valid,accuracy,mse,shortfall; class
// "overall" rows carry the bin totals.
void write_sweep_csv(std::ostream& out, const SweepTable& table, int64_t bin_width);

}  // namespace varbench

#endif  // VARBENCH_SWEEP_H_
