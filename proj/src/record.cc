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

#include "varbench/record.h"

#include "varbench/util.h"

namespace varbench {

std::string_view variety_name(Variety v) {
  switch (v) {
    case Variety::kTW:
      return "TW";
    case Variety::kCN:
      return "CN";
    case Variety::kOther:
      return "Other";
  }
  return "Other";
}

Variety parse_variety(std::string_view name) {
  if (name == "TW") return Variety::kTW;
  if (name == "CN") return Variety::kCN;
  if (name == "Other") return Variety::kOther;
  throw FormatError("unknown variety '" + std::string(name) + "'");
}

std::string_view side_name(Side s) { return s == Side::kTW ? "tw" : "cn"; }

Side parse_side(std::string_view name) {
  if (name == "tw") return Side::kTW;
  if (name == "cn") return Side::kCN;
  throw FormatError("unknown side '" + std::string(name) + "'");
}

bool has_text(const ReviewRecord& record) {
  for (const auto* part : {&record.title, &record.positive, &record.negative}) {
    if (part->has_value() && !is_blank(**part)) return true;
  }
  return false;
}

namespace {

nlohmann::ordered_json opt(const std::optional<std::string>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

std::optional<std::string> get_opt(const nlohmann::json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) throw FormatError(std::string("field '") + key + "' is not a string");
  return it->get<std::string>();
}

}  // namespace

nlohmann::ordered_json record_to_json(const ReviewRecord& r) {
  nlohmann::ordered_json j;
  j["record_id"] = r.record_id;
  j["hotel_id"] = r.hotel_id;
  j["variety"] = variety_name(r.variety);
  j["score"] = r.score;
  j["title"] = opt(r.title);
  j["positive"] = opt(r.positive);
  j["negative"] = opt(r.negative);
  j["review_time"] = opt(r.review_time);
  return j;
}

ReviewRecord record_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw FormatError("record is not an object");
  try {
    ReviewRecord r;
    r.record_id = j.at("record_id").get<std::string>();
    r.hotel_id = j.at("hotel_id").get<std::string>();
    r.variety = parse_variety(j.at("variety").get<std::string>());
    r.score = j.at("score").get<double>();
    r.title = get_opt(j, "title");
    r.positive = get_opt(j, "positive");
    r.negative = get_opt(j, "negative");
    r.review_time = get_opt(j, "review_time");
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed record: ") + e.what());
  }
}

}  // namespace varbench
