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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "varbench/ingest.h"
#include "varbench/kvfile.h"

using namespace varbench;

namespace {
ParseResult parse(const std::string& text, const FieldMap& fields = {}) {
  std::istringstream in(text);
  return parse_records(in, fields);
}
}  // namespace

TEST_CASE("well-formed lines become records") {
  auto r = parse(
      R"({"record_id":"a","hotel__booking_id":"H1","user_nationality":"tw","score":8,"review_title":"t","positive_review":"p","review_time":"2023-01-01"})"
      "\n"
      R"({"record_id":"b","hotel__booking_id":12,"user_nationality":" CN ","score":"3.5","negative_review":"n"})"
      "\n");
  REQUIRE(r.records.size() == 2);
  CHECK(r.lines == 2);
  const auto& a = r.records[0];
  CHECK(a.record_id == "a");
  CHECK(a.hotel_id == "H1");
  CHECK(a.variety == Variety::kTW);
  CHECK(a.score == 8.0);
  CHECK(a.title == "t");
  CHECK(a.positive == "p");
  CHECK_FALSE(a.negative);
  CHECK(a.review_time == "2023-01-01");
  const auto& b = r.records[1];
  CHECK(b.hotel_id == "12");
  CHECK(b.variety == Variety::kCN);
  CHECK(b.score == 3.5);
}

TEST_CASE("scores outside 1..10 and missing venues are rejected") {
  auto r = parse(
      R"({"hotel__booking_id":"H","score":0,"positive_review":"x"})"
      "\n"
      R"({"hotel__booking_id":"H","score":10.5,"positive_review":"x"})"
      "\n"
      R"({"hotel__booking_id":"H","score":"great","positive_review":"x"})"
      "\n"
      R"({"hotel__booking_id":"H","positive_review":"x"})"
      "\n"
      R"({"score":5,"positive_review":"x"})"
      "\n"
      R"({"hotel__booking_id":"  ","score":5,"positive_review":"x"})"
      "\n"
      R"({"hotel__booking_id":"H","score":10,"positive_review":"x"})"
      "\n");
  CHECK(r.records.size() == 1);
  REQUIRE(r.rejected.size() == 6);
  CHECK(r.rejected[0].reason == "bad_score");
  CHECK(r.rejected[0].line == 1);
  CHECK(r.rejected[3].reason == "bad_score");
  CHECK(r.rejected[4].reason == "missing_venue");
  CHECK(r.rejected[5].reason == "missing_venue");
}

TEST_CASE("malformed lines are skipped, not fatal") {
  auto r = parse("not json\n[1,2]\n"
                 R"({"hotel__booking_id":"H","score":5,"positive_review":7})"
                 "\n"
                 R"({"hotel__booking_id":"H","score":5,"positive_review":"ok"})"
                 "\n");
  CHECK(r.skipped == 3);
  CHECK(r.records.size() == 1);
  // Missing ids are derived from the line number.
  CHECK(r.records[0].record_id == "r00000004");
}

TEST_CASE("empty-text records are dropped and varieties split") {
  auto r = parse(R"({"hotel__booking_id":"H","score":5,"user_nationality":"tw","positive_review":"  "})"
                 "\n"
                 R"({"hotel__booking_id":"H","score":5,"user_nationality":"tw","negative_review":"ok"})"
                 "\n"
                 R"({"hotel__booking_id":"H","score":5,"user_nationality":"jp","positive_review":"ok"})"
                 "\n"
                 R"({"hotel__booking_id":"H","score":5,"user_nationality":"cn","review_title":"ok"})"
                 "\n");
  auto nonempty = filter_nonempty(r.records);
  CHECK(nonempty.size() == 3);
  auto split = filter_varieties(nonempty);
  CHECK(split.tw.size() == 1);
  CHECK(split.cn.size() == 1);
  CHECK(split.excluded == 1);
}

TEST_CASE("field map remaps source keys") {
  auto dir = std::filesystem::temp_directory_path() / "varbench_fieldmap_test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream f(dir / "map.conf");
    f << "hotel_id = venue\nscore = rating\nnationality = country\ntw_code = Taiwan\n";
  }
  FieldMap m = FieldMap::load(dir / "map.conf");
  auto r = parse(R"({"venue":"V","rating":9,"country":"taiwan","positive_review":"x"})" "\n", m);
  REQUIRE(r.records.size() == 1);
  CHECK(r.records[0].hotel_id == "V");
  CHECK(r.records[0].variety == Variety::kTW);
  {
    std::ofstream f(dir / "bad.conf");
    f << "nonsense = 1\n";
  }
  CHECK_THROWS_AS(FieldMap::load(dir / "bad.conf"), ConfigError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("canonical record files round-trip") {
  auto r = parse(
      R"({"record_id":"x","hotel__booking_id":"H","score":7,"user_nationality":"cn","review_title":"標題","positive_review":"好","negative_review":""})"
      "\n");
  std::stringstream buf;
  write_records(buf, r.records);
  auto back = read_records(buf);
  REQUIRE(back.size() == 1);
  CHECK(back[0] == r.records[0]);
  CHECK(back[0].negative == "");
}
