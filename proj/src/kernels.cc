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

#include "varbench/kernels.h"

#include <algorithm>
#include <numeric>

#include <omp.h>

namespace varbench::kernels {

namespace {

void zip_one(const Bucket& b, uint64_t seed, ReviewPair* out) {
  const size_t n = std::min(b.tw.size(), b.cn.size());
  for (size_t i = 0; i < n; ++i) {
    ReviewPair& p = out[i];
    p.tw = *b.tw[i].record;
    p.cn = *b.cn[i].record;
    p.key = b.key;
    p.pair_id = make_pair_id(seed, p.tw.record_id, p.cn.record_id);
  }
}

std::vector<size_t> output_offsets(std::span<const Bucket> buckets) {
  std::vector<size_t> offsets(buckets.size() + 1, 0);
  for (size_t i = 0; i < buckets.size(); ++i) {
    offsets[i + 1] = offsets[i] + std::min(buckets[i].tw.size(), buckets[i].cn.size());
  }
  return offsets;
}

size_t hist_bins(const LengthConfig& config) {
  return static_cast<size_t>((config.max_len + config.bin_width - 1) / config.bin_width);
}

void hist_add(LengthHistogram& h, int64_t len, const LengthConfig& config) {
  if (len < 1) {
    ++h.empty;
  } else if (len > config.max_len) {
    ++h.over_cap;
  } else {
    ++h.counts[static_cast<size_t>(length_bin(len, config.bin_width))];
  }
}

}  // namespace

namespace serial {

std::vector<ReviewPair> zip_buckets(std::span<const Bucket> buckets, uint64_t seed) {
  auto offsets = output_offsets(buckets);
  std::vector<ReviewPair> pairs(offsets.back());
  for (size_t i = 0; i < buckets.size(); ++i) zip_one(buckets[i], seed, pairs.data() + offsets[i]);
  return pairs;
}

std::vector<ScriptProfile> profile_records(std::span<const ReviewRecord> records,
                                           const CharSetTables& tables) {
  std::vector<ScriptProfile> out(records.size());
  for (size_t i = 0; i < records.size(); ++i) out[i] = profile_record(records[i], tables);
  return out;
}

LengthHistogram length_histogram(std::span<const ReviewRecord> records, const LengthConfig& config) {
  LengthHistogram h;
  h.bin_width = config.bin_width;
  h.counts.assign(hist_bins(config), 0);
  for (const auto& r : records) hist_add(h, review_length(r), config);
  return h;
}

}  // namespace serial

namespace omp {

std::vector<ReviewPair> zip_buckets(std::span<const Bucket> buckets, uint64_t seed) {
  auto offsets = output_offsets(buckets);
  std::vector<ReviewPair> pairs(offsets.back());
  const auto n = static_cast<std::ptrdiff_t>(buckets.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    zip_one(buckets[static_cast<size_t>(i)], seed, pairs.data() + offsets[static_cast<size_t>(i)]);
  }
  return pairs;
}

std::vector<ScriptProfile> profile_records(std::span<const ReviewRecord> records,
                                           const CharSetTables& tables) {
  std::vector<ScriptProfile> out(records.size());
  const auto n = static_cast<std::ptrdiff_t>(records.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out[static_cast<size_t>(i)] = profile_record(records[static_cast<size_t>(i)], tables);
  }
  return out;
}

LengthHistogram length_histogram(std::span<const ReviewRecord> records, const LengthConfig& config) {
  LengthHistogram total;
  total.bin_width = config.bin_width;
  total.counts.assign(hist_bins(config), 0);
  const auto n = static_cast<std::ptrdiff_t>(records.size());
#pragma omp parallel
  {
    LengthHistogram local;
    local.counts.assign(total.counts.size(), 0);
#pragma omp for schedule(static) nowait
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      hist_add(local, review_length(records[static_cast<size_t>(i)]), config);
    }
#pragma omp critical
    {
      for (size_t b = 0; b < local.counts.size(); ++b) total.counts[b] += local.counts[b];
      total.over_cap += local.over_cap;
      total.empty += local.empty;
    }
  }
  return total;
}

}  // namespace omp

}  // namespace varbench::kernels
