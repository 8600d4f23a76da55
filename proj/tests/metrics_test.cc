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

#include <cmath>

#include "fixture.h"
#include "oracles.h"
#include "varbench/llm_client.h"
#include "varbench/metrics.h"
#include "varbench/predict.h"

using namespace varbench;
using varbench::testing::make_record;

namespace {

ScoredPair scored(std::string id, int ttw, int tcn, int ptw, int pcn) {
  ScoredPair s;
  s.pair_id = std::move(id);
  s.truth_tw = ttw;
  s.truth_cn = tcn;
  s.pred_tw = ptw;
  s.pred_cn = pcn;
  return s;
}

std::vector<GapReportRow> run_mock(const std::string& spec, PromptVariant variant) {
  const auto& pairs = varbench::testing::fixture_pairs();
  TruthTable truth = truth_from_pairs(pairs);
  ModelContext ctx;
  ctx.truth = &truth;
  ctx.tables = &varbench::testing::tables();
  auto model = make_model(spec, ctx);
  auto results = run_eval(pairs, *model, variant, 0, 4);
  auto outcomes = outcomes_from(results);
  auto s = score_pairs(pairs, outcomes, varbench::testing::tables());
  const Subset all[] = {Subset::kAll, Subset::kChineseOnly, Subset::kChinesePlusEnglish};
  return gap_rows(spec, variant, s, all);
}

}  // namespace

TEST_CASE("pair length group needs both sides short") {
  ReviewPair p;
  p.tw = make_record("a", "h", Variety::kTW, 5, std::string(49, 'x'));
  p.cn = make_record("b", "h", Variety::kCN, 5, std::string(49, 'x'));
  CHECK(pair_length_group(p) == LengthGroup::kShort);
  p.cn.positive = std::string(50, 'x');
  CHECK(pair_length_group(p) == LengthGroup::kLong);
  p.tw.positive = std::string(50, 'x');
  p.cn.positive = std::string(1, 'x');
  CHECK(pair_length_group(p) == LengthGroup::kLong);
}

TEST_CASE("gap row against brute force") {
  SplitMix64 rng(99);
  for (int iter = 0; iter < 40; ++iter) {
    std::vector<ScoredPair> v;
    const size_t n = 2 + rng.below(40);
    std::vector<int> ptw, pcn, ttw, tcn;
    for (size_t i = 0; i < n; ++i) {
      int t = 1 + static_cast<int>(rng.below(10));
      int a = 1 + static_cast<int>(rng.below(10));
      int b = 1 + static_cast<int>(rng.below(10));
      v.push_back(scored(std::to_string(i), t, t, a, b));
      ptw.push_back(a);
      pcn.push_back(b);
      ttw.push_back(t);
      tcn.push_back(t);
    }
    auto row = gap_row(v);
    CHECK(row.n_pairs == n);
    CHECK(std::fabs(row.acc_tw - varbench::testing::brute_accuracy(ptw, ttw)) < 1e-12);
    CHECK(std::fabs(row.acc_cn - varbench::testing::brute_accuracy(pcn, tcn)) < 1e-12);
    CHECK(std::fabs(row.mse_tw - varbench::testing::brute_mse(ptw, ttw)) < 1e-12);
    CHECK(std::fabs(row.mse_cn - varbench::testing::brute_mse(pcn, tcn)) < 1e-12);
    CHECK(row.delta_acc == doctest::Approx(row.acc_cn - row.acc_tw));
    CHECK(row.delta_mse == doctest::Approx(row.mse_cn - row.mse_tw));
  }
}

TEST_CASE("delta is simplified minus traditional") {
  std::vector<ScoredPair> v = {scored("a", 5, 5, 4, 5), scored("b", 6, 6, 6, 6)};
  auto row = gap_row(v);
  CHECK(row.acc_tw == 50.0);
  CHECK(row.acc_cn == 100.0);
  CHECK(row.delta_acc == 50.0);
  CHECK(row.delta_mse == -0.5);
}

TEST_CASE("small cells") {
  auto empty = gap_row({});
  CHECK(empty.n_pairs == 0);
  CHECK(std::isnan(empty.acc_tw));
  CHECK_FALSE(empty.tests_available());
  std::vector<ScoredPair> one = {scored("a", 5, 5, 5, 4)};
  auto row = gap_row(one);
  CHECK(row.delta_acc == -100.0);
  CHECK(std::isnan(row.p_acc));
  CHECK(row.stars_acc.empty());
}

TEST_CASE("incomplete pairs are left out") {
  std::vector<ReviewPair> pairs(2);
  pairs[0].pair_id = "p0";
  pairs[1].pair_id = "p1";
  for (auto& p : pairs) {
    p.tw = make_record(p.pair_id + "t", "h", Variety::kTW, 7.6, std::string("很好"));
    p.cn = make_record(p.pair_id + "c", "h", Variety::kCN, 8.4, std::string("很好"));
  }
  std::vector<PredictionOutcome> o(4);
  o[0] = {"p0", Side::kTW, "", 8, std::nullopt};
  o[1] = {"p0", Side::kCN, "", 8, std::nullopt};
  o[2] = {"p1", Side::kTW, "", 8, std::nullopt};
  o[3] = {"p1", Side::kCN, "", std::nullopt, InvalidReason::kNonNumeric};
  auto s = score_pairs(pairs, o, varbench::testing::tables());
  REQUIRE(s.size() == 1);
  CHECK(s[0].pair_id == "p0");
  CHECK(s[0].truth_tw == 8);
  CHECK(s[0].truth_cn == 8);
}

TEST_CASE("echo scores perfectly in every cell") {
  auto rows = run_mock("mock:echo", PromptVariant::kStructured);
  CHECK(rows.size() == 9);
  for (const auto& r : rows) {
    CAPTURE(subset_name(r.subset));
    CAPTURE(split_name(r.length_group));
    CHECK(r.n_pairs >= 2);
    CHECK(r.acc_tw == 100.0);
    CHECK(r.acc_cn == 100.0);
    CHECK(r.delta_mse == 0.0);
    CHECK(r.stars_acc.empty());
    CHECK(r.p_acc == 1.0);
  }
}

TEST_CASE("a constant bias is detected everywhere") {
  auto rows = run_mock("mock:biased:tw", PromptVariant::kPlain);
  for (const auto& r : rows) {
    CHECK(r.delta_acc == 100.0);
    CHECK(r.delta_mse == -1.0);
    CHECK(r.p_acc < 0.001);
    CHECK(r.stars_acc == "***");
  }
  auto cn_rows = run_mock("mock:biased:cn", PromptVariant::kPlain);
  for (const auto& r : cn_rows) CHECK(r.delta_acc == -100.0);
}

TEST_CASE("names round-trip") {
  for (auto s : {LengthSplit::kOverall, LengthSplit::kShort, LengthSplit::kLong}) {
    CHECK(parse_split(split_name(s)) == s);
  }
  for (auto s : {Subset::kAll, Subset::kChineseOnly, Subset::kChinesePlusEnglish}) {
    CHECK(parse_subset(subset_name(s)) == s);
  }
  CHECK_THROWS(parse_subset("all"));
}

TEST_CASE("overall is the pair-weighted mix of short and long") {
  SplitMix64 rng(3);
  std::vector<ScoredPair> v;
  for (int i = 0; i < 60; ++i) {
    int t = 1 + static_cast<int>(rng.below(9));
    auto s = scored(std::to_string(i), t, t, t + static_cast<int>(rng.below(2)),
                    t + static_cast<int>(rng.below(2)));
    s.group = rng.below(2) ? LengthGroup::kShort : LengthGroup::kLong;
    v.push_back(s);
  }
  const Subset all[] = {Subset::kAll};
  auto rows = gap_rows("m", PromptVariant::kPlain, v, all);
  const auto& o = rows[0];
  const auto& s = rows[1];
  const auto& l = rows[2];
  CHECK(o.n_pairs == s.n_pairs + l.n_pairs);
  const double ws = static_cast<double>(s.n_pairs) / o.n_pairs;
  const double wl = static_cast<double>(l.n_pairs) / o.n_pairs;
  CHECK(o.acc_tw == doctest::Approx(ws * s.acc_tw + wl * l.acc_tw).epsilon(1e-12));
  CHECK(o.acc_cn == doctest::Approx(ws * s.acc_cn + wl * l.acc_cn).epsilon(1e-12));
  CHECK(o.mse_tw == doctest::Approx(ws * s.mse_tw + wl * l.mse_tw).epsilon(1e-12));
  CHECK(o.mse_cn == doctest::Approx(ws * s.mse_cn + wl * l.mse_cn).epsilon(1e-12));

  // Shifting predictions and truths together leaves every test unchanged.
  auto shifted = v;
  for (auto& p : shifted) {
    p.truth_tw -= 1;
    p.truth_cn -= 1;
    p.pred_tw -= 1;
    p.pred_cn -= 1;
  }
  auto rows2 = gap_rows("m", PromptVariant::kPlain, shifted, all);
  for (size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows2[i].p_acc == rows[i].p_acc);
    CHECK(rows2[i].p_mse == rows[i].p_mse);
  }
}
