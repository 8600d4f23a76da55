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

#include "varbench/metrics.h"

#include <cmath>
#include <limits>
#include <unordered_map>

#include "varbench/ingest.h"

namespace varbench {

std::string_view split_name(LengthSplit s) {
  switch (s) {
    case LengthSplit::kOverall: return "Overall";
    case LengthSplit::kShort: return "Short";
    case LengthSplit::kLong: return "Long";
  }
  return "Overall";
}

LengthSplit parse_split(std::string_view name) {
  if (name == "Overall") return LengthSplit::kOverall;
  if (name == "Short") return LengthSplit::kShort;
  if (name == "Long") return LengthSplit::kLong;
  throw FormatError("unknown length group '" + std::string(name) + "'");
}

std::string_view subset_name(Subset s) {
  switch (s) {
    case Subset::kAll: return "All";
    case Subset::kChineseOnly: return "ChineseOnly";
    case Subset::kChinesePlusEnglish: return "ChinesePlusEnglish";
  }
  return "All";
}

Subset parse_subset(std::string_view name) {
  if (name == "All") return Subset::kAll;
  if (name == "ChineseOnly") return Subset::kChineseOnly;
  if (name == "ChinesePlusEnglish") return Subset::kChinesePlusEnglish;
  throw FormatError("unknown subset '" + std::string(name) + "'");
}

LengthGroup pair_length_group(const ReviewPair& pair, int64_t short_max) {
  bool both_short = length_group(review_length(pair.tw), short_max) == LengthGroup::kShort &&
                    length_group(review_length(pair.cn), short_max) == LengthGroup::kShort;
  return both_short ? LengthGroup::kShort : LengthGroup::kLong;
}

std::vector<ScoredPair> score_pairs(std::span<const ReviewPair> pairs,
                                    std::span<const PredictionOutcome> outcomes,
                                    const CharSetTables& tables, int64_t short_max) {
  std::unordered_map<std::string, std::array<const PredictionOutcome*, 2>> by_pair;
  for (const auto& o : outcomes) {
    by_pair.try_emplace(o.pair_id, std::array<const PredictionOutcome*, 2>{nullptr, nullptr})
        .first->second[static_cast<size_t>(o.side)] = &o;
  }
  std::vector<ScoredPair> out;
  for (const auto& p : pairs) {
    auto it = by_pair.find(p.pair_id);
    if (it == by_pair.end()) continue;
    const auto* tw = it->second[0];
    const auto* cn = it->second[1];
    if (!tw || !cn || !tw->valid() || !cn->valid()) continue;
    ScoredPair s;
    s.pair_id = p.pair_id;
    s.truth_tw = round_score(p.tw.score);
    s.truth_cn = round_score(p.cn.score);
    s.pred_tw = *tw->score;
    s.pred_cn = *cn->score;
    s.group = pair_length_group(p, short_max);
    s.tw_bucket = profile_record(p.tw, tables).bucket;
    s.cn_bucket = profile_record(p.cn, tables).bucket;
    out.push_back(std::move(s));
  }
  return out;
}

bool in_split(const ScoredPair& p, LengthSplit split, Subset subset) {
  if (split == LengthSplit::kShort && p.group != LengthGroup::kShort) return false;
  if (split == LengthSplit::kLong && p.group != LengthGroup::kLong) return false;
  switch (subset) {
    case Subset::kAll: return true;
    case Subset::kChineseOnly:
      return subset_admits(SubsetConstraint::kChineseOnly, p.tw_bucket, p.cn_bucket);
    case Subset::kChinesePlusEnglish:
      return subset_admits(SubsetConstraint::kChinesePlusEnglish, p.tw_bucket, p.cn_bucket);
  }
  return false;
}

GapReportRow gap_row(std::span<const ScoredPair> pairs) {
  constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
  GapReportRow row;
  row.n_pairs = pairs.size();
  if (pairs.empty()) {
    row.acc_tw = row.acc_cn = row.delta_acc = kNaN;
    row.mse_tw = row.mse_cn = row.delta_mse = kNaN;
    row.t_acc = row.p_acc = row.t_mse = row.p_mse = kNaN;
    return row;
  }
  std::vector<int> pred_tw, pred_cn, truth_tw, truth_cn;
  std::vector<double> d_correct, d_sqerr;
  for (const auto& p : pairs) {
    pred_tw.push_back(p.pred_tw);
    pred_cn.push_back(p.pred_cn);
    truth_tw.push_back(p.truth_tw);
    truth_cn.push_back(p.truth_cn);
    const double c_tw = p.pred_tw == p.truth_tw;
    const double c_cn = p.pred_cn == p.truth_cn;
    const double e_tw = (p.pred_tw - p.truth_tw) * (p.pred_tw - p.truth_tw);
    const double e_cn = (p.pred_cn - p.truth_cn) * (p.pred_cn - p.truth_cn);
    d_correct.push_back(c_cn - c_tw);
    d_sqerr.push_back(e_cn - e_tw);
  }
  row.acc_tw = accuracy(pred_tw, truth_tw);
  row.acc_cn = accuracy(pred_cn, truth_cn);
  row.delta_acc = row.acc_cn - row.acc_tw;
  row.mse_tw = mse(pred_tw, truth_tw);
  row.mse_cn = mse(pred_cn, truth_cn);
  row.delta_mse = row.mse_cn - row.mse_tw;
  if (pairs.size() < 2) {
    row.t_acc = row.p_acc = row.t_mse = row.p_mse = kNaN;
    return row;
  }
  TTest acc = paired_t_test(d_correct);
  TTest err = paired_t_test(d_sqerr);
  row.t_acc = acc.t;
  row.p_acc = acc.p;
  row.stars_acc = significance_stars(acc.p);
  row.t_mse = err.t;
  row.p_mse = err.p;
  row.stars_mse = significance_stars(err.p);
  return row;
}

std::vector<GapReportRow> gap_rows(const std::string& model, PromptVariant variant,
                                   std::span<const ScoredPair> pairs, std::span<const Subset> subsets) {
  std::vector<GapReportRow> rows;
  for (Subset subset : subsets) {
    for (LengthSplit split : {LengthSplit::kOverall, LengthSplit::kShort, LengthSplit::kLong}) {
      std::vector<ScoredPair> selected;
      for (const auto& p : pairs) {
        if (in_split(p, split, subset)) selected.push_back(p);
      }
      GapReportRow row = gap_row(selected);
      row.model = model;
      row.variant = std::string(variant_name(variant));
      row.length_group = split;
      row.subset = subset;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

TTest score_difference_test(std::span<const ReviewPair> pairs) {
  std::vector<double> diffs;
  diffs.reserve(pairs.size());
  for (const auto& p : pairs) diffs.push_back(p.tw.score - p.cn.score);
  return paired_t_test(diffs);
}

}  // namespace varbench
