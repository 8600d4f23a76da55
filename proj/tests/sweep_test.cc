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

#include <doctest.h>

#include <sstream>

#include "oracles.h"
#include "varbench/llm_client.h"
#include "varbench/sweep.h"

using namespace varbench;
using varbench::testing::make_record;

namespace {

// n records per (bin, class) for the first few bins.
std::vector<ReviewRecord> corpus(size_t per_cell, int bins) {
  std::vector<ReviewRecord> v;
  const double scores[] = {2.0, 5.0, 9.0};
  for (int bin = 0; bin < bins; ++bin) {
    for (int cls = 0; cls < 3; ++cls) {
      for (size_t i = 0; i < per_cell; ++i) {
        v.push_back(make_record("s" + std::to_string(bin) + "_" + std::to_string(cls) + "_" +
                                    std::to_string(i),
                                "h", Variety::kTW, scores[cls], std::string(bin * 10 + 5, 'y')));
      }
    }
  }
  return v;
}

}  // namespace

TEST_CASE("sentiment labels") {
  CHECK(parse_sentiment_prediction("positive") == SentimentClass::kPositive);
  CHECK(parse_sentiment_prediction(" Neutral\n") == SentimentClass::kNeutral);
  CHECK(parse_sentiment_prediction("NEGATIVE") == SentimentClass::kNegative);
  CHECK_FALSE(parse_sentiment_prediction("positive."));
  CHECK_FALSE(parse_sentiment_prediction("8"));
  CHECK_FALSE(parse_sentiment_prediction(""));
}

TEST_CASE("quota sampling and shortfall") {
  auto records = corpus(5, 3);
  SweepConfig cfg;
  cfg.per_bin_quota = 3;
  std::vector<SweepCell> cells;
  auto samples = sweep_samples(records, cfg, &cells);
  CHECK(samples.size() == 150);
  for (size_t i = 0; i < 9; ++i) {
    CHECK(samples[i].size() == 3);
    CHECK(cells[i].available == 5);
    CHECK_FALSE(cells[i].shortfall);
  }
  cfg.per_bin_quota = 8;
  samples = sweep_samples(records, cfg, &cells);
  CHECK(samples[0].size() == 5);
  CHECK(cells[0].shortfall);
  // Sampling is a pure function of the seed.
  cfg.per_bin_quota = 2;
  auto a = sweep_samples(records, cfg, &cells);
  auto b = sweep_samples(records, cfg, &cells);
  CHECK(a == b);
}

TEST_CASE("echo sweep is perfect and constant sweep is ordinal") {
  auto records = corpus(4, 3);
  TruthTable truth = truth_from_records(records);
  ModelContext ctx;
  ctx.truth = &truth;
  auto echo = make_model("mock:echo-sentiment", ctx);
  auto table = length_sweep(records, *echo);
  CHECK(table.rows.size() == 3);
  CHECK(table.issued == 36);
  for (const auto& row : table.rows) {
    CHECK(row.accuracy() == 100.0);
    CHECK(row.mse() == 0.0);
  }

  auto constant = make_model("mock:constant:positive", ctx);
  auto t2 = length_sweep(records, *constant);
  for (const auto& row : t2.rows) {
    REQUIRE(row.cells.size() == 3);
    CHECK(row.cells[0].mse() == 4.0);
    CHECK(row.cells[1].mse() == 1.0);
    CHECK(row.cells[2].accuracy() == 100.0);
    CHECK(row.accuracy() == doctest::Approx(100.0 / 3));
  }

  auto junk = make_model("mock:constant:maybe", ctx);
  auto t3 = length_sweep(records, *junk);
  CHECK(t3.excluded_predictions == 36);

  std::ostringstream out;
  write_sweep_csv(out, table, 10);
  CHECK(out.str().starts_with("bin,range,class,available,sampled,valid,accuracy,mse,shortfall\n"));
  CHECK(out.str().find("0,1-10,negative,4,4,4,100.000000,0.000000,1") != std::string::npos);
}
