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

#include <set>
#include <sstream>

#include "oracles.h"
#include "varbench/pairing.h"
#include "varbench/script.h"

using namespace varbench;
using namespace varbench::testing;

TEST_CASE("class mapping 1-3 / 4-7 / 8-10") {
  for (int s = 1; s <= 10; ++s) {
    auto expected = s <= 3 ? SentimentClass::kNegative
                           : (s <= 7 ? SentimentClass::kNeutral : SentimentClass::kPositive);
    CHECK(sentiment_class(s) == expected);
  }
  CHECK(sentiment_class(3.4) == SentimentClass::kNegative);
  CHECK(sentiment_class(3.5) == SentimentClass::kNeutral);
  CHECK(sentiment_class(7.5) == SentimentClass::kPositive);
  CHECK_THROWS_AS(sentiment_class(0.5), std::out_of_range);
  CHECK_THROWS_AS(sentiment_class(10.5), std::out_of_range);
  CHECK(round_score(7.4999999999) == 8);
  CHECK(round_score(7.49) == 7);
  CHECK(sentiment_class(5, ClassBoundaries{5, 8}) == SentimentClass::kNegative);
}

TEST_CASE("pairs match on hotel, class and bin") {
  std::vector<ReviewRecord> tw = {
      make_record("t1", "H1", Variety::kTW, 9, std::string(12, 'x')),
      make_record("t2", "H1", Variety::kTW, 2, std::string(5, 'x')),
      make_record("t3", "H2", Variety::kTW, 9, std::string(12, 'x')),
  };
  std::vector<ReviewRecord> cn = {
      make_record("c1", "H1", Variety::kCN, 8, std::string(19, 'x')),
      make_record("c2", "H1", Variety::kCN, 5, std::string(5, 'x')),
      make_record("c3", "H2", Variety::kCN, 10, std::string(21, 'x')),
  };
  auto r = build_pairs(tw, cn);
  REQUIRE(r.pairs.size() == 1);
  CHECK(r.pairs[0].tw.record_id == "t1");
  CHECK(r.pairs[0].cn.record_id == "c1");
  CHECK(r.pairs[0].key == BucketKey{"H1", SentimentClass::kPositive, 1});
  CHECK(r.unpaired_tw == 2);
  CHECK(r.unpaired_cn == 2);
}

TEST_CASE("over-cap and empty reviews are excluded") {
  std::vector<ReviewRecord> tw = {make_record("t1", "H", Variety::kTW, 5, std::string(501, 'x')),
                                  make_record("t2", "H", Variety::kTW, 5, std::string(500, 'x')),
                                  make_record("t3", "H", Variety::kTW, 5, std::nullopt)};
  std::vector<ReviewRecord> cn = {make_record("c1", "H", Variety::kCN, 5, std::string(501, 'x')),
                                  make_record("c2", "H", Variety::kCN, 5, std::string(491, 'x'))};
  auto r = build_pairs(tw, cn);
  REQUIRE(r.pairs.size() == 1);
  CHECK(r.pairs[0].key.bin == 49);
  CHECK(r.excluded_tw == 2);
  CHECK(r.excluded_cn == 1);
}

TEST_CASE("pair ids are stable and seed-dependent") {
  CHECK(make_pair_id(1, "a", "b") == make_pair_id(1, "a", "b"));
  CHECK(make_pair_id(1, "a", "b") != make_pair_id(2, "a", "b"));
  CHECK(make_pair_id(1, "a", "bc") != make_pair_id(1, "ab", "c"));
}

TEST_CASE("pairing equals the maximum matching on random inputs") {
  SplitMix64 rng(99);
  for (int iter = 0; iter < 100; ++iter) {
    auto in = random_pairing_input(rng, 20);
    auto r = build_pairs(in.tw, in.cn);
    size_t best = max_matching(in.tw.size(), in.cn.size(), [&](size_t i, size_t j) {
      return oracle_compatible(in.tw[i], in.cn[j]);
    });
    CHECK(r.pairs.size() == best);
  }
}

TEST_CASE("serial and parallel zipping agree") {
  SplitMix64 rng(5);
  for (int iter = 0; iter < 50; ++iter) {
    auto in = random_pairing_input(rng, 30);
    PairingConfig serial;
    serial.parallel = false;
    PairingConfig parallel;
    CHECK(build_pairs(in.tw, in.cn, serial).pairs == build_pairs(in.tw, in.cn, parallel).pairs);
  }
}

TEST_CASE("pair files round-trip") {
  std::vector<ReviewRecord> tw = {make_record("t1", "H1", Variety::kTW, 9, "機場很近", "標題")};
  std::vector<ReviewRecord> cn = {make_record("c1", "H1", Variety::kCN, 8, "机场很近", "标题")};
  auto pairs = build_pairs(tw, cn).pairs;
  std::stringstream buf;
  write_pairs(buf, pairs);
  CHECK(read_pairs(buf) == pairs);
}

TEST_CASE("subset filter keeps matching script profiles") {
  auto tables = CharSetTables::load(std::string(VARBENCH_DATA_DIR) + "/charsets");
  std::vector<ReviewRecord> tw = {
      make_record("t1", "H1", Variety::kTW, 9, "機場很近"),
      make_record("t2", "H2", Variety::kTW, 9, "機場 near"),
  };
  std::vector<ReviewRecord> cn = {
      make_record("c1", "H1", Variety::kCN, 9, "机场很近"),
      make_record("c2", "H2", Variety::kCN, 9, "机场 near"),
  };
  auto pairs = build_pairs(tw, cn).pairs;
  REQUIRE(pairs.size() == 2);
  auto only = subset_filter(pairs, tables, SubsetConstraint::kChineseOnly);
  REQUIRE(only.size() == 1);
  CHECK(only[0].tw.record_id == "t1");
  auto eng = subset_filter(pairs, tables, SubsetConstraint::kChinesePlusEnglish);
  REQUIRE(eng.size() == 1);
  CHECK(eng[0].tw.record_id == "t2");
}
