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

#ifndef VARBENCH_METRICS_H_
#define VARBENCH_METRICS_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "varbench/pairing.h"
#include "varbench/predict.h"
#include "varbench/prompt.h"
#include "varbench/script.h"
#include "varbench/stats.h"
#include "varbench/textstats.h"

namespace varbench {

enum class LengthSplit { kOverall, kShort, kLong };
enum class Subset { kAll, kChineseOnly, kChinesePlusEnglish };

std::string_view split_name(LengthSplit s);  // "Overall", "Short", "Long"
LengthSplit parse_split(std::string_view name);
std::string_view subset_name(Subset s);  // "All", "ChineseOnly", "ChinesePlusEnglish"
Subset parse_subset(std::string_view name);

// A pair is Short when both members are Short; otherwise Long.
LengthGroup pair_length_group(const ReviewPair& pair, int64_t short_max = 49);

// One complete pair with its truths, predictions and split labels.
struct ScoredPair {
  std::string pair_id;
  int truth_tw = 0;
  int truth_cn = 0;
  int pred_tw = 0;
  int pred_cn = 0;
  LengthGroup group = LengthGroup::kShort;
  ScriptBucket tw_bucket = ScriptBucket::kEmpty;
  ScriptBucket cn_bucket = ScriptBucket::kEmpty;
};

// Joins pairs with outcomes and keeps complete pairs only, in pair order.
std::vector<ScoredPair> score_pairs(std::span<const ReviewPair> pairs,
                                    std::span<const PredictionOutcome> outcomes,
                                    const CharSetTables& tables, int64_t short_max = 49);

struct GapReportRow {
  std::string model;
  std::string variant;
  LengthSplit length_group = LengthSplit::kOverall;
  Subset subset = Subset::kAll;
  // Free-form row label; the translation experiment uses it for the origin
  // variety ("tw" / "cn"). Empty otherwise.
  std::string origin;
  size_t n_pairs = 0;
  double acc_tw = 0.0;
  double acc_cn = 0.0;
  double delta_acc = 0.0;  // cn - tw
  double mse_tw = 0.0;
  double mse_cn = 0.0;
  double delta_mse = 0.0;  // cn - tw
  // NaN when the split has fewer than two pairs.
  double t_acc = 0.0;
  double p_acc = 1.0;
  std::string stars_acc;
  double t_mse = 0.0;
  double p_mse = 1.0;
  std::string stars_mse;

  bool tests_available() const { return n_pairs >= 2; }
};

// Metrics and paired tests for one set of scored pairs. Acc is tested on
// per-pair (correct_cn - correct_tw), MSE on (sqerr_cn - sqerr_tw).
GapReportRow gap_row(std::span<const ScoredPair> pairs);

// One row per (subset, length group), subsets in the given order and groups
// Overall, Short, Long.
std::vector<GapReportRow> gap_rows(const std::string& model, PromptVariant variant,
                                   std::span<const ScoredPair> pairs, std::span<const Subset> subsets);

bool in_split(const ScoredPair& p, LengthSplit split, Subset subset);

// Paired test of the reviewers' own scores, tw - cn.
TTest score_difference_test(std::span<const ReviewPair> pairs);

}  // namespace varbench

#endif  // VARBENCH_METRICS_H_
