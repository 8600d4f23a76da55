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

#ifndef VARBENCH_PREDICT_H_
#define VARBENCH_PREDICT_H_

#include <array>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "varbench/llm_client.h"
#include "varbench/record.h"

namespace varbench {

enum class InvalidReason { kNonNumeric, kOutOfRange, kExtraText, kEmpty, kTransport };

inline constexpr size_t kNumInvalidReasons = 5;

std::string_view reason_name(InvalidReason r);  // "NonNumeric", ...
InvalidReason parse_reason(std::string_view name);

struct PredictionOutcome {
  std::string pair_id;
  Side side = Side::kTW;
  std::string review_ref;
  std::optional<int> score;  // xor invalid_reason
  std::optional<InvalidReason> invalid_reason;

  bool valid() const { return score.has_value(); }
  bool operator==(const PredictionOutcome&) const = default;
};

// Strict parse: after trimming leading/trailing whitespace the text must be
// a bare integer literal. Digits-only values outside 1..10 are OutOfRange;
// text containing a digit plus anything else ("7/10", "7.") is ExtraText;
// text without digits is NonNumeric.
PredictionOutcome parse_prediction(std::string_view raw_text);

// Transport errors become InvalidReason::kTransport.
PredictionOutcome outcome_from(const CompletionResult& result);
std::vector<PredictionOutcome> outcomes_from(std::span<const CompletionResult> results);

struct SideCounts {
  size_t valid = 0;
  size_t invalid = 0;
  std::array<size_t, kNumInvalidReasons> by_reason{};
};

struct Completeness {
  std::set<std::string> complete;  // pair ids with a valid score on both sides
  SideCounts tw;
  SideCounts cn;
  size_t incomplete_pairs = 0;

  size_t issued() const { return tw.valid + tw.invalid + cn.valid + cn.invalid; }
  size_t valid() const { return tw.valid + cn.valid; }
  size_t invalid() const { return tw.invalid + cn.invalid; }
};

// Expects one outcome per issued request.
Completeness complete_pairs(std::span<const PredictionOutcome> outcomes);

nlohmann::ordered_json outcome_to_json(const PredictionOutcome& o);
PredictionOutcome outcome_from_json(const nlohmann::json& j);
void write_outcomes(std::ostream& out, std::span<const PredictionOutcome> outcomes);
std::vector<PredictionOutcome> read_outcomes(std::istream& in);
std::vector<PredictionOutcome> read_outcomes(const std::filesystem::path& path);

}  // namespace varbench

#endif  // VARBENCH_PREDICT_H_
