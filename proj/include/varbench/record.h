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

#ifndef VARBENCH_RECORD_H_
#define VARBENCH_RECORD_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"

namespace varbench {

enum class Variety { kTW, kCN, kOther };

std::string_view variety_name(Variety v);  // "TW", "CN", "Other"
Variety parse_variety(std::string_view name);

// One side of a pair. Ordered so that sorting by (pair_id, side) places TW
// before CN.
enum class Side { kTW = 0, kCN = 1 };

std::string_view side_name(Side s);  // "tw", "cn"
Side parse_side(std::string_view name);

// A normalized review. Text parts are absent when the source field was null
// or missing; present-but-blank parts are kept verbatim.
struct ReviewRecord {
  std::string record_id;
  std::string hotel_id;
  Variety variety = Variety::kOther;
  double score = 0.0;
  std::optional<std::string> title;
  std::optional<std::string> positive;
  std::optional<std::string> negative;
  std::optional<std::string> review_time;

  bool operator==(const ReviewRecord&) const = default;
};

// True when at least one text part is non-blank.
bool has_text(const ReviewRecord& record);

// Canonical field names: record_id, hotel_id, variety, score, title,
// positive, negative, review_time.
nlohmann::ordered_json record_to_json(const ReviewRecord& record);
ReviewRecord record_from_json(const nlohmann::json& j);

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace varbench

#endif  // VARBENCH_RECORD_H_
