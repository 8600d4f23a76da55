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

#ifndef VARBENCH_KERNELS_H_
#define VARBENCH_KERNELS_H_

// Data-parallel inner loops of the pipeline. Each kernel has a serial
// reference and an OpenMP version; both return identical results.

#include <cstdint>
#include <span>
#include <vector>

#include "varbench/pairing.h"
#include "varbench/record.h"
#include "varbench/script.h"
#include "varbench/textstats.h"

namespace varbench::kernels {

struct LengthHistogram {
  int64_t bin_width = 10;
  std::vector<size_t> counts;  // bins [0, max_len / bin_width)
  size_t over_cap = 0;         // longer than max_len
  size_t empty = 0;            // zero length

  bool operator==(const LengthHistogram&) const = default;
};

namespace serial {

std::vector<ReviewPair> zip_buckets(std::span<const Bucket> buckets, uint64_t seed);
std::vector<ScriptProfile> profile_records(std::span<const ReviewRecord> records,
                                           const CharSetTables& tables);
LengthHistogram length_histogram(std::span<const ReviewRecord> records, const LengthConfig& config);

}  // namespace serial

namespace omp {

std::vector<ReviewPair> zip_buckets(std::span<const Bucket> buckets, uint64_t seed);
std::vector<ScriptProfile> profile_records(std::span<const ReviewRecord> records,
                                           const CharSetTables& tables);
LengthHistogram length_histogram(std::span<const ReviewRecord> records, const LengthConfig& config);

}  // namespace omp

}  // namespace varbench::kernels

#endif  // VARBENCH_KERNELS_H_
