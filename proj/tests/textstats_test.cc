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

#include "oracles.h"
#include "varbench/textstats.h"

using namespace varbench;
using varbench::testing::make_record;

TEST_CASE("bin boundaries") {
  CHECK(length_bin(1) == 0);
  CHECK(length_bin(10) == 0);
  CHECK(length_bin(11) == 1);
  CHECK(length_bin(500) == 49);
  CHECK(length_bin(501) == 50);
  CHECK_THROWS_AS(length_bin(0), std::invalid_argument);
  CHECK_THROWS_AS(length_bin(5, 0), std::invalid_argument);
  for (int64_t n = 1; n <= 1000; ++n) {
    // Independent form: ceil(n / 10) - 1.
    CHECK(length_bin(n) == (n + 9) / 10 - 1);
  }
}

TEST_CASE("short/long boundary") {
  CHECK(length_group(1) == LengthGroup::kShort);
  CHECK(length_group(49) == LengthGroup::kShort);
  CHECK(length_group(50) == LengthGroup::kLong);
  CHECK_THROWS_AS(length_group(0), std::invalid_argument);
  CHECK(length_group_name(LengthGroup::kShort) == "Short");
}

TEST_CASE("review length counts scalars across parts") {
  auto r = make_record("a", "H", Variety::kTW, 5, "好棒", "標題", "差\U0001F600");
  CHECK(review_length(r) == 6);
  auto empty = make_record("b", "H", Variety::kTW, 5, std::nullopt);
  CHECK(review_length(empty) == 0);
  auto info = length_info(r);
  CHECK(info.char_count == 6);
  CHECK(info.bin_index == 0);
  CHECK(info.group == LengthGroup::kShort);
}
