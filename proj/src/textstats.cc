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

#include "varbench/textstats.h"

#include <stdexcept>

#include "varbench/util.h"

namespace varbench {

std::string_view length_group_name(LengthGroup g) {
  return g == LengthGroup::kShort ? "Short" : "Long";
}

int64_t review_length(const ReviewRecord& record) {
  int64_t n = 0;
  for (const auto* part : {&record.title, &record.positive, &record.negative}) {
    if (*part) n += static_cast<int64_t>(count_scalars(**part));
  }
  return n;
}

int64_t length_bin(int64_t char_count, int64_t bin_width) {
  if (bin_width < 1) throw std::invalid_argument("length_bin: bin width must be >= 1");
  if (char_count < 1) throw std::invalid_argument("length_bin: char_count must be >= 1");
  return (char_count - 1) / bin_width;
}

LengthGroup length_group(int64_t char_count, int64_t short_max) {
  if (char_count < 1) throw std::invalid_argument("length_group: char_count must be >= 1");
  return char_count <= short_max ? LengthGroup::kShort : LengthGroup::kLong;
}

LengthInfo length_info(const ReviewRecord& record, const LengthConfig& config) {
  LengthInfo info;
  info.char_count = review_length(record);
  info.bin_index = length_bin(info.char_count, config.bin_width);
  info.group = length_group(info.char_count, config.short_max);
  return info;
}

}  // namespace varbench
