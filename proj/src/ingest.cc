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

#include "varbench/ingest.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>

#include <fmt/format.h>

#include "varbench/kvfile.h"
#include "varbench/util.h"

namespace varbench {

FieldMap FieldMap::load(const std::filesystem::path& path) {
  FieldMap map;
  auto file = KeyValueFile::load(path);
  const std::pair<const char*, std::string*> slots[] = {
      {"record_id", &map.record_id}, {"hotel_id", &map.hotel_id},
      {"nationality", &map.nationality}, {"score", &map.score},
      {"title", &map.title}, {"positive", &map.positive},
      {"negative", &map.negative}, {"review_time", &map.review_time},
      {"tw_code", &map.tw_code}, {"cn_code", &map.cn_code},
  };
  for (const auto& [key, value] : file.values()) {
    bool known = false;
    for (const auto& [name, slot] : slots) {
      if (key == name) {
        *slot = value;
        known = true;
      }
    }
    if (!known) throw ConfigError("field map: unknown key '" + key + "'");
  }
  return map;
}

namespace {

struct Malformed {};

std::optional<double> parse_score(const nlohmann::json& v) {
  double score;
  if (v.is_number()) {
    score = v.get<double>();
  } else if (v.is_string()) {
    std::string_view s = trim(v.get_ref<const std::string&>());
    if (s.empty()) return std::nullopt;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), score);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  } else {
    return std::nullopt;
  }
  if (!std::isfinite(score) || score < 1.0 || score > 10.0) return std::nullopt;
  return score;
}

std::optional<std::string> text_field(const nlohmann::json& obj, const std::string& key) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) throw Malformed{};
  return it->get<std::string>();
}

// Venue ids appear as strings or integers in exports.
std::optional<std::string> venue_field(const nlohmann::json& obj, const std::string& key) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (it->is_string()) {
    std::string v(trim(it->get_ref<const std::string&>()));
    if (v.empty()) return std::nullopt;
    return v;
  }
  if (it->is_number_integer()) return it->dump();
  throw Malformed{};
}

}  // namespace

ParseResult parse_records(std::istream& in, const FieldMap& fields, const std::string& id_prefix) {
  if (!in) throw IoError("input stream is not readable");
  ParseResult result;
  const std::string tw = to_lower_ascii(trim(fields.tw_code));
  const std::string cn = to_lower_ascii(trim(fields.cn_code));
  std::string line;
  while (std::getline(in, line)) {
    ++result.lines;
    nlohmann::json obj = nlohmann::json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (!obj.is_object()) {
      ++result.skipped;
      continue;
    }
    try {
      ReviewRecord r;
      auto score_it = obj.find(fields.score);
      std::optional<double> score =
          score_it == obj.end() ? std::nullopt : parse_score(*score_it);
      if (!score) {
        result.rejected.push_back({result.lines, "bad_score"});
        continue;
      }
      auto venue = venue_field(obj, fields.hotel_id);
      if (!venue) {
        result.rejected.push_back({result.lines, "missing_venue"});
        continue;
      }
      r.score = *score;
      r.hotel_id = std::move(*venue);
      r.record_id = text_field(obj, fields.record_id)
                        .value_or(fmt::format("{}{:08d}", id_prefix, result.lines));
      auto nationality = text_field(obj, fields.nationality);
      std::string code = nationality ? to_lower_ascii(trim(*nationality)) : std::string();
      if (nationality && code == tw) {
        r.variety = Variety::kTW;
      } else if (nationality && code == cn) {
        r.variety = Variety::kCN;
      } else {
        r.variety = Variety::kOther;
      }
      r.title = text_field(obj, fields.title);
      r.positive = text_field(obj, fields.positive);
      r.negative = text_field(obj, fields.negative);
      r.review_time = text_field(obj, fields.review_time);
      result.records.push_back(std::move(r));
    } catch (const Malformed&) {
      ++result.skipped;
    }
  }
  if (in.bad()) throw IoError("read error on input stream");
  return result;
}

std::vector<ReviewRecord> filter_nonempty(std::span<const ReviewRecord> records) {
  std::vector<ReviewRecord> out;
  for (const auto& r : records) {
    if (has_text(r)) out.push_back(r);
  }
  return out;
}

VarietySplit filter_varieties(std::span<const ReviewRecord> records) {
  VarietySplit split;
  for (const auto& r : records) {
    switch (r.variety) {
      case Variety::kTW:
        split.tw.push_back(r);
        break;
      case Variety::kCN:
        split.cn.push_back(r);
        break;
      case Variety::kOther:
        ++split.excluded;
        break;
    }
  }
  return split;
}

void write_records(std::ostream& out, std::span<const ReviewRecord> records) {
  for (const auto& r : records) out << record_to_json(r).dump() << '\n';
}

std::vector<ReviewRecord> read_records(std::istream& in) {
  std::vector<ReviewRecord> out;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    try {
      out.push_back(record_from_json(nlohmann::json::parse(line)));
    } catch (const std::exception& e) {
      throw FormatError(fmt::format("line {}: {}", line_no, e.what()));
    }
  }
  return out;
}

std::vector<ReviewRecord> read_records(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return read_records(in);
}

}  // namespace varbench
