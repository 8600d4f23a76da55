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

#include "varbench/predict.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>

#include <fmt/format.h>

#include "varbench/ingest.h"
#include "varbench/util.h"

namespace varbench {

namespace {
constexpr std::array<std::string_view, kNumInvalidReasons> kReasonNames = {
    "NonNumeric", "OutOfRange", "ExtraText", "Empty", "Transport"};
}

std::string_view reason_name(InvalidReason r) { return kReasonNames[static_cast<size_t>(r)]; }

InvalidReason parse_reason(std::string_view name) {
  for (size_t i = 0; i < kReasonNames.size(); ++i) {
    if (kReasonNames[i] == name) return static_cast<InvalidReason>(i);
  }
  throw FormatError("unknown invalid reason '" + std::string(name) + "'");
}

PredictionOutcome parse_prediction(std::string_view raw_text) {
  PredictionOutcome o;
  std::string_view s = trim(raw_text);
  if (s.empty()) {
    o.invalid_reason = InvalidReason::kEmpty;
    return o;
  }
  const auto is_digit = [](char c) { return c >= '0' && c <= '9'; };
  std::string_view digits = s;
  if (digits.front() == '+' || digits.front() == '-') digits.remove_prefix(1);
  if (!digits.empty() && std::all_of(digits.begin(), digits.end(), is_digit)) {
    std::string_view significant = digits.substr(std::min(digits.find_first_not_of('0'), digits.size()));
    bool negative = s.front() == '-';
    if (!negative && significant.size() <= 2) {
      int value = 0;
      for (char c : significant) value = value * 10 + (c - '0');
      if (value >= 1 && value <= 10) {
        o.score = value;
        return o;
      }
    }
    o.invalid_reason = InvalidReason::kOutOfRange;
    return o;
  }
  o.invalid_reason = std::any_of(s.begin(), s.end(), is_digit) ? InvalidReason::kExtraText
                                                                : InvalidReason::kNonNumeric;
  return o;
}

PredictionOutcome outcome_from(const CompletionResult& result) {
  PredictionOutcome o;
  if (result.raw_text) {
    o = parse_prediction(*result.raw_text);
  } else {
    o.invalid_reason = InvalidReason::kTransport;
  }
  o.pair_id = result.pair_id;
  o.side = result.side;
  o.review_ref = result.review_ref;
  return o;
}

std::vector<PredictionOutcome> outcomes_from(std::span<const CompletionResult> results) {
  std::vector<PredictionOutcome> out;
  out.reserve(results.size());
  for (const auto& r : results) out.push_back(outcome_from(r));
  return out;
}

Completeness complete_pairs(std::span<const PredictionOutcome> outcomes) {
  Completeness c;
  std::map<std::string, std::array<int, 2>> seen;  // per side: -1 invalid, +1 valid
  for (const auto& o : outcomes) {
    SideCounts& counts = o.side == Side::kTW ? c.tw : c.cn;
    if (o.valid()) {
      ++counts.valid;
    } else {
      ++counts.invalid;
      ++counts.by_reason[static_cast<size_t>(*o.invalid_reason)];
    }
    auto& slot = seen.try_emplace(o.pair_id, std::array<int, 2>{0, 0}).first->second;
    slot[static_cast<size_t>(o.side)] = o.valid() ? 1 : -1;
  }
  for (const auto& [pair_id, sides] : seen) {
    if (sides[0] == 1 && sides[1] == 1) {
      c.complete.insert(pair_id);
    } else {
      ++c.incomplete_pairs;
    }
  }
  return c;
}

nlohmann::ordered_json outcome_to_json(const PredictionOutcome& o) {
  nlohmann::ordered_json j;
  j["pair_id"] = o.pair_id;
  j["side"] = side_name(o.side);
  j["review_ref"] = o.review_ref;
  j["score"] = o.score ? nlohmann::ordered_json(*o.score) : nlohmann::ordered_json(nullptr);
  j["invalid_reason"] = o.invalid_reason ? nlohmann::ordered_json(reason_name(*o.invalid_reason))
                                         : nlohmann::ordered_json(nullptr);
  return j;
}

PredictionOutcome outcome_from_json(const nlohmann::json& j) {
  try {
    PredictionOutcome o;
    o.pair_id = j.at("pair_id").get<std::string>();
    o.side = parse_side(j.at("side").get<std::string>());
    o.review_ref = j.at("review_ref").get<std::string>();
    if (!j.at("score").is_null()) o.score = j["score"].get<int>();
    if (!j.at("invalid_reason").is_null()) {
      o.invalid_reason = parse_reason(j["invalid_reason"].get<std::string>());
    }
    if (o.score.has_value() == o.invalid_reason.has_value()) {
      throw FormatError("exactly one of score and invalid_reason must be set");
    }
    return o;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed outcome: ") + e.what());
  }
}

void write_outcomes(std::ostream& out, std::span<const PredictionOutcome> outcomes) {
  for (const auto& o : outcomes) out << outcome_to_json(o).dump() << '\n';
}

std::vector<PredictionOutcome> read_outcomes(std::istream& in) {
  std::vector<PredictionOutcome> out;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    try {
      out.push_back(outcome_from_json(nlohmann::json::parse(line)));
    } catch (const std::exception& e) {
      throw FormatError(fmt::format("line {}: {}", line_no, e.what()));
    }
  }
  return out;
}

std::vector<PredictionOutcome> read_outcomes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return read_outcomes(in);
}

}  // namespace varbench
