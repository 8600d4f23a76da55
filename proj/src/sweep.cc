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

#include "varbench/sweep.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <ostream>

#include <fmt/format.h>

#include "varbench/prompt.h"
#include "varbench/textstats.h"
#include "varbench/util.h"

namespace varbench {

std::optional<SentimentClass> parse_sentiment_prediction(std::string_view raw_text) {
  std::string label = to_lower_ascii(trim(raw_text));
  if (label == "positive") return SentimentClass::kPositive;
  if (label == "neutral") return SentimentClass::kNeutral;
  if (label == "negative") return SentimentClass::kNegative;
  return std::nullopt;
}

namespace {
double ratio(double num, size_t den) {
  return den == 0 ? std::numeric_limits<double>::quiet_NaN() : num / static_cast<double>(den);
}
}  // namespace

double SweepCell::accuracy() const { return 100.0 * ratio(static_cast<double>(correct), valid); }
double SweepCell::mse() const { return ratio(sq_error_sum, valid); }
double SweepRow::accuracy() const { return 100.0 * ratio(static_cast<double>(correct), valid); }
double SweepRow::mse() const { return ratio(sq_error_sum, valid); }

std::vector<std::vector<const ReviewRecord*>> sweep_samples(std::span<const ReviewRecord> records,
                                                            const SweepConfig& config,
                                                            std::vector<SweepCell>* cells) {
  const size_t num_bins = static_cast<size_t>((config.max_len + config.bin_width - 1) / config.bin_width);
  std::vector<std::vector<const ReviewRecord*>> pools(num_bins * 3);
  for (const auto& r : records) {
    int64_t len = review_length(r);
    if (len < 1 || len > config.max_len) continue;
    size_t bin = static_cast<size_t>(length_bin(len, config.bin_width));
    size_t cls = static_cast<size_t>(sentiment_class(r.score, config.classes));
    pools[bin * 3 + cls].push_back(&r);
  }
  cells->assign(pools.size(), SweepCell{});
  std::vector<std::vector<const ReviewRecord*>> samples(pools.size());
  for (size_t i = 0; i < pools.size(); ++i) {
    auto& pool = pools[i];
    std::sort(pool.begin(), pool.end(),
              [](const ReviewRecord* a, const ReviewRecord* b) { return a->record_id < b->record_id; });
    uint64_t cell_seed = SplitMix64(config.seed ^ fnv1a64(fmt::format("{}:{}", i / 3, i % 3))).next();
    auto order = seeded_permutation(pool.size(), cell_seed);
    size_t take = std::min(pool.size(), config.per_bin_quota);
    for (size_t k = 0; k < take; ++k) samples[i].push_back(pool[order[k]]);
    SweepCell& c = (*cells)[i];
    c.sentiment = static_cast<SentimentClass>(i % 3);
    c.available = pool.size();
    c.sampled = take;
    c.shortfall = pool.size() < config.per_bin_quota;
  }
  return samples;
}

SweepTable length_sweep(std::span<const ReviewRecord> records, const ChatModel& model,
                        const SweepConfig& config) {
  std::vector<SweepCell> cells;
  auto samples = sweep_samples(records, config, &cells);

  std::vector<EvalItem> items;
  std::vector<size_t> item_cell;
  for (size_t i = 0; i < samples.size(); ++i) {
    for (const ReviewRecord* r : samples[i]) {
      items.push_back({r->record_id, Side::kTW, render_sentiment(*r)});
      item_cell.push_back(i);
    }
  }
  // run_items sorts by id; map results back through the record id.
  std::map<std::string, size_t> cell_of;
  for (size_t k = 0; k < items.size(); ++k) cell_of[items[k].pair_id] = item_cell[k];
  auto results = run_items(items, model, config.parallelism);

  SweepTable table;
  table.issued = results.size();
  for (const auto& res : results) {
    SweepCell& c = cells[cell_of.at(res.pair_id)];
    std::optional<SentimentClass> pred;
    if (res.raw_text) pred = parse_sentiment_prediction(*res.raw_text);
    if (!pred) {
      ++table.excluded_predictions;
      continue;
    }
    ++c.valid;
    c.correct += *pred == c.sentiment;
    const double d = static_cast<int>(*pred) - static_cast<int>(c.sentiment);
    c.sq_error_sum += d * d;
  }
  for (size_t bin = 0; bin * 3 < cells.size(); ++bin) {
    SweepRow row;
    row.bin = static_cast<int64_t>(bin);
    for (size_t cls = 0; cls < 3; ++cls) {
      const SweepCell& c = cells[bin * 3 + cls];
      if (c.sampled == 0) continue;
      row.cells.push_back(c);
      row.valid += c.valid;
      row.correct += c.correct;
      row.sq_error_sum += c.sq_error_sum;
    }
    if (!row.cells.empty()) table.rows.push_back(std::move(row));
  }
  return table;
}

void write_sweep_csv(std::ostream& out, const SweepTable& table, int64_t bin_width) {
  out << "bin,range,class,available,sampled,valid,accuracy,mse,shortfall\n";
  for (const auto& row : table.rows) {
    std::string range = fmt::format("{}-{}", row.bin * bin_width + 1, (row.bin + 1) * bin_width);
    size_t available = 0;
    size_t sampled = 0;
    bool shortfall = false;
    for (const auto& c : row.cells) {
      out << fmt::format("{},{},{},{},{},{},{:.6f},{:.6f},{}\n", row.bin, range,
                         sentiment_name(c.sentiment), c.available, c.sampled, c.valid, c.accuracy(),
                         c.mse(), c.shortfall ? 1 : 0);
      available += c.available;
      sampled += c.sampled;
      shortfall = shortfall || c.shortfall;
    }
    out << fmt::format("{},{},overall,{},{},{},{:.6f},{:.6f},{}\n", row.bin, range, available, sampled,
                       row.valid, row.accuracy(), row.mse(), shortfall ? 1 : 0);
  }
}

}  // namespace varbench
