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

#ifndef VARBENCH_PAIRING_H_
#define VARBENCH_PAIRING_H_

#include <compare>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "varbench/record.h"
#include "varbench/script.h"
#include "varbench/textstats.h"

namespace varbench {

enum class SentimentClass { kNegative = 0, kNeutral = 1, kPositive = 2 };

std::string_view sentiment_name(SentimentClass c);  // "negative", ...
SentimentClass parse_sentiment(std::string_view name);

struct ClassBoundaries {
  int negative_max = 3;
  int neutral_max = 7;
};

// Half-up rounding with a 1e-9 tolerance: 7.5 -> 8, 7.4999999999 -> 8.
int round_score(double score);

// Throws std::out_of_range when the score is outside [1, 10].
SentimentClass sentiment_class(double score, const ClassBoundaries& classes = {});

struct BucketKey {
  std::string hotel_id;
  SentimentClass sentiment = SentimentClass::kNegative;
  int64_t bin = 0;

  auto operator<=>(const BucketKey&) const = default;
  bool operator==(const BucketKey&) const = default;
};

struct ReviewPair {
  std::string pair_id;
  ReviewRecord tw;
  ReviewRecord cn;
  BucketKey key;

  bool operator==(const ReviewPair&) const = default;
};

struct PairingConfig {
  uint64_t seed = 0;
  LengthConfig lengths;
  ClassBoundaries classes;
  // Parallel bucket processing; output is identical either way.
  bool parallel = true;
};

struct PairingResult {
  std::vector<ReviewPair> pairs;
  size_t excluded_tw = 0;  // length 0 or above max_len
  size_t excluded_cn = 0;
  size_t unpaired_tw = 0;
  size_t unpaired_cn = 0;
  size_t buckets = 0;
};

// Stable hash of both record ids, salted with the seed.
std::string make_pair_id(uint64_t seed, std::string_view tw_id, std::string_view cn_id);

// One side of a bucket: records sorted by (score, length, id).
struct BucketMember {
  const ReviewRecord* record;
  double score;
  int64_t length;
};

struct Bucket {
  BucketKey key;
  std::vector<BucketMember> tw;
  std::vector<BucketMember> cn;
};

// Groups admitted records by key; records with length 0 or above max_len are
// counted and left out. Buckets come back in key order with members sorted.
std::vector<Bucket> group_buckets(std::span<const ReviewRecord> tw, std::span<const ReviewRecord> cn,
                                  const PairingConfig& config, PairingResult* counts);

// Emits min(|TW|, |CN|) pairs per bucket by zipping the sorted sides.
// Output is ordered by bucket key, then by position in the bucket.
PairingResult build_pairs(std::span<const ReviewRecord> tw, std::span<const ReviewRecord> cn,
                          const PairingConfig& config = {});

std::vector<ReviewPair> subset_filter(std::span<const ReviewPair> pairs, const CharSetTables& tables,
                                      SubsetConstraint constraint);

nlohmann::ordered_json pair_to_json(const ReviewPair& pair);
ReviewPair pair_from_json(const nlohmann::json& j);
void write_pairs(std::ostream& out, std::span<const ReviewPair> pairs);
std::vector<ReviewPair> read_pairs(std::istream& in);
std::vector<ReviewPair> read_pairs(const std::filesystem::path& path);

}  // namespace varbench

#endif  // VARBENCH_PAIRING_H_
