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

#include "varbench/pairing.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <stdexcept>
#include <tuple>

#include <fmt/format.h>

#include "varbench/ingest.h"
#include "varbench/kernels.h"
#include "varbench/util.h"

namespace varbench {

std::string_view sentiment_name(SentimentClass c) {
  switch (c) {
    case SentimentClass::kNegative: return "negative";
    case SentimentClass::kNeutral: return "neutral";
    case SentimentClass::kPositive: return "positive";
  }
  return "negative";
}

SentimentClass parse_sentiment(std::string_view name) {
  if (name == "negative") return SentimentClass::kNegative;
  if (name == "neutral") return SentimentClass::kNeutral;
  if (name == "positive") return SentimentClass::kPositive;
  throw FormatError("unknown sentiment class '" + std::string(name) + "'");
}

int round_score(double score) { return static_cast<int>(std::floor(score + 0.5 + 1e-9)); }

SentimentClass sentiment_class(double score, const ClassBoundaries& classes) {
  if (!(score >= 1.0 - 1e-9 && score <= 10.0 + 1e-9)) {
    throw std::out_of_range(fmt::format("sentiment_class: score {} outside [1, 10]", score));
  }
  int s = round_score(score);
  if (s <= classes.negative_max) return SentimentClass::kNegative;
  if (s <= classes.neutral_max) return SentimentClass::kNeutral;
  return SentimentClass::kPositive;
}

std::string make_pair_id(uint64_t seed, std::string_view tw_id, std::string_view cn_id) {
  uint64_t h = fnv1a64(fmt::format("{}\x1f", seed));
  h = fnv1a64(tw_id, h);
  h = fnv1a64("\x1f", h);
  h = fnv1a64(cn_id, h);
  return hex64(h);
}

std::vector<Bucket> group_buckets(std::span<const ReviewRecord> tw, std::span<const ReviewRecord> cn,
                                  const PairingConfig& config, PairingResult* counts) {
  std::map<BucketKey, Bucket> by_key;
  auto add = [&](std::span<const ReviewRecord> side, bool is_tw, size_t* excluded) {
    for (const auto& r : side) {
      int64_t len = review_length(r);
      if (len < 1 || len > config.lengths.max_len) {
        ++*excluded;
        continue;
      }
      BucketKey key{r.hotel_id, sentiment_class(r.score, config.classes),
                    length_bin(len, config.lengths.bin_width)};
      Bucket& b = by_key[key];
      (is_tw ? b.tw : b.cn).push_back({&r, r.score, len});
    }
  };
  size_t ex_tw = 0;
  size_t ex_cn = 0;
  add(tw, true, &ex_tw);
  add(cn, false, &ex_cn);

  auto order = [](const BucketMember& a, const BucketMember& b) {
    return std::tie(a.score, a.length, a.record->record_id) <
           std::tie(b.score, b.length, b.record->record_id);
  };
  std::vector<Bucket> buckets;
  buckets.reserve(by_key.size());
  for (auto& [key, b] : by_key) {
    b.key = key;
    std::sort(b.tw.begin(), b.tw.end(), order);
    std::sort(b.cn.begin(), b.cn.end(), order);
    buckets.push_back(std::move(b));
  }
  if (counts) {
    counts->excluded_tw = ex_tw;
    counts->excluded_cn = ex_cn;
    counts->buckets = buckets.size();
  }
  return buckets;
}

PairingResult build_pairs(std::span<const ReviewRecord> tw, std::span<const ReviewRecord> cn,
                          const PairingConfig& config) {
  PairingResult result;
  auto buckets = group_buckets(tw, cn, config, &result);
  result.pairs = config.parallel ? kernels::omp::zip_buckets(buckets, config.seed)
                                 : kernels::serial::zip_buckets(buckets, config.seed);
  size_t admitted_tw = 0;
  size_t admitted_cn = 0;
  for (const auto& b : buckets) {
    admitted_tw += b.tw.size();
    admitted_cn += b.cn.size();
  }
  result.unpaired_tw = admitted_tw - result.pairs.size();
  result.unpaired_cn = admitted_cn - result.pairs.size();
  return result;
}

std::vector<ReviewPair> subset_filter(std::span<const ReviewPair> pairs, const CharSetTables& tables,
                                      SubsetConstraint constraint) {
  std::vector<ReviewPair> out;
  for (const auto& p : pairs) {
    if (subset_admits(constraint, profile_record(p.tw, tables).bucket,
                      profile_record(p.cn, tables).bucket)) {
      out.push_back(p);
    }
  }
  return out;
}

nlohmann::ordered_json pair_to_json(const ReviewPair& pair) {
  nlohmann::ordered_json j;
  j["pair_id"] = pair.pair_id;
  j["key"] = {{"hotel_id", pair.key.hotel_id},
              {"sentiment", sentiment_name(pair.key.sentiment)},
              {"bin", pair.key.bin}};
  j["tw_record"] = record_to_json(pair.tw);
  j["cn_record"] = record_to_json(pair.cn);
  return j;
}

ReviewPair pair_from_json(const nlohmann::json& j) {
  try {
    ReviewPair p;
    p.pair_id = j.at("pair_id").get<std::string>();
    const auto& key = j.at("key");
    p.key.hotel_id = key.at("hotel_id").get<std::string>();
    p.key.sentiment = parse_sentiment(key.at("sentiment").get<std::string>());
    p.key.bin = key.at("bin").get<int64_t>();
    p.tw = record_from_json(j.at("tw_record"));
    p.cn = record_from_json(j.at("cn_record"));
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed pair: ") + e.what());
  }
}

void write_pairs(std::ostream& out, std::span<const ReviewPair> pairs) {
  for (const auto& p : pairs) out << pair_to_json(p).dump() << '\n';
}

std::vector<ReviewPair> read_pairs(std::istream& in) {
  std::vector<ReviewPair> out;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    try {
      out.push_back(pair_from_json(nlohmann::json::parse(line)));
    } catch (const std::exception& e) {
      throw FormatError(fmt::format("line {}: {}", line_no, e.what()));
    }
  }
  return out;
}

std::vector<ReviewPair> read_pairs(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return read_pairs(in);
}

}  // namespace varbench
