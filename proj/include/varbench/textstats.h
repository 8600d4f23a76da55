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

#ifndef VARBENCH_TEXTSTATS_H_
#define VARBENCH_TEXTSTATS_H_

#include <cstdint>
#include <string_view>

#include "varbench/record.h"

namespace varbench {

enum class LengthGroup { kShort, kLong };

std::string_view length_group_name(LengthGroup g);  // "Short", "Long"

struct LengthConfig {
  int64_t bin_width = 10;
  int64_t max_len = 500;
  int64_t short_max = 49;
};

struct LengthInfo {
  int64_t char_count = 0;
  int64_t bin_index = 0;
  LengthGroup group = LengthGroup::kShort;
};

// Unicode scalar count of title + positive + negative. Absent parts count 0
// and no separator is counted.
int64_t review_length(const ReviewRecord& record);

// Bins close on multiples of the width: [1, w] -> 0, [w+1, 2w] -> 1, ...
// Throws std::invalid_argument when count < 1 or width < 1.
int64_t length_bin(int64_t char_count, int64_t bin_width = 10);

// Short iff 1 <= count <= short_max. Throws std::invalid_argument when
// count < 1.
LengthGroup length_group(int64_t char_count, int64_t short_max = 49);

LengthInfo length_info(const ReviewRecord& record, const LengthConfig& config = {});

}  // namespace varbench

#endif  // VARBENCH_TEXTSTATS_H_
