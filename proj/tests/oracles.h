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

#ifndef VARBENCH_TESTS_ORACLES_H_
#define VARBENCH_TESTS_ORACLES_H_

// Independent reference implementations used to check the library.

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "varbench/record.h"
#include "varbench/util.h"

namespace varbench::testing {

inline ReviewRecord make_record(std::string id, std::string hotel, Variety variety, double score,
                                std::optional<std::string> positive,
                                std::optional<std::string> title = std::nullopt,
                                std::optional<std::string> negative = std::nullopt) {
  ReviewRecord r;
  r.record_id = std::move(id);
  r.hotel_id = std::move(hotel);
  r.variety = variety;
  r.score = score;
  r.title = std::move(title);
  r.positive = std::move(positive);
  r.negative = std::move(negative);
  return r;
}

// Maximum bipartite matching by augmenting paths (Kuhn's algorithm).
inline size_t max_matching(size_t left, size_t right,
                           const std::function<bool(size_t, size_t)>& edge) {
  std::vector<long> match_right(right, -1);
  size_t size = 0;
  for (size_t u = 0; u < left; ++u) {
    std::vector<bool> seen(right, false);
    std::function<bool(size_t)> augment = [&](size_t v) -> bool {
      for (size_t w = 0; w < right; ++w) {
        if (!edge(v, w) || seen[w]) continue;
        seen[w] = true;
        if (match_right[w] < 0 || augment(static_cast<size_t>(match_right[w]))) {
          match_right[w] = static_cast<long>(v);
          return true;
        }
      }
      return false;
    };
    if (augment(u)) ++size;
  }
  return size;
}

// Percent of exact matches, by definition.
inline double brute_accuracy(const std::vector<int>& p, const std::vector<int>& t) {
  long double hits = 0;
  for (size_t i = 0; i < p.size(); ++i) hits += (p[i] == t[i]) ? 1 : 0;
  return static_cast<double>(100.0L * hits / static_cast<long double>(p.size()));
}

inline double brute_mse(const std::vector<int>& p, const std::vector<int>& t) {
  long double s = 0;
  for (size_t i = 0; i < p.size(); ++i) {
    long double d = p[i] - t[i];
    s += d * d;
  }
  return static_cast<double>(s / static_cast<long double>(p.size()));
}

// 0 negative, 1 neutral, 2 positive, straight from the 1-3 / 4-7 / 8-10
// scheme with half-up rounding.
inline int oracle_class(double score) {
  const int rounded = static_cast<int>(std::floor(score + 0.5));
  if (rounded <= 3) return 0;
  if (rounded <= 7) return 1;
  return 2;
}

struct PairingInput {
  std::vector<ReviewRecord> tw;
  std::vector<ReviewRecord> cn;
};

// Small random inputs: three hotels, scores in half steps, lengths mostly in
// the first six bins with occasional empty and over-cap texts.
inline PairingInput random_pairing_input(SplitMix64& rng, size_t max_per_side) {
  PairingInput in;
  auto make_side = [&](Variety v, std::vector<ReviewRecord>& out) {
    const size_t n = rng.below(max_per_side + 1);
    for (size_t i = 0; i < n; ++i) {
      const uint64_t kind = rng.below(20);
      size_t len = 1 + rng.below(60);
      if (kind == 0) len = 0;
      if (kind == 1) len = 495 + rng.below(11);
      std::optional<std::string> text;
      if (len > 0) text = std::string(len, 'x');
      const double score = 1.0 + 0.5 * static_cast<double>(rng.below(19));
      out.push_back(make_record((v == Variety::kTW ? "tw" : "cn") + std::to_string(i),
                                "H" + std::to_string(rng.below(3)), v, score, text));
    }
  };
  make_side(Variety::kTW, in.tw);
  make_side(Variety::kCN, in.cn);
  return in;
}

inline size_t oracle_length(const ReviewRecord& r) {
  return r.positive ? r.positive->size() : 0;  // ASCII-only test texts
}

inline bool oracle_compatible(const ReviewRecord& a, const ReviewRecord& b, size_t max_len = 500) {
  const size_t la = oracle_length(a), lb = oracle_length(b);
  if (la == 0 || lb == 0 || la > max_len || lb > max_len) return false;
  return a.hotel_id == b.hotel_id && oracle_class(a.score) == oracle_class(b.score) &&
         (la - 1) / 10 == (lb - 1) / 10;
}

}  // namespace varbench::testing

#endif  // VARBENCH_TESTS_ORACLES_H_
