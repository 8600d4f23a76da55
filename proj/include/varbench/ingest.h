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

#ifndef VARBENCH_INGEST_H_
#define VARBENCH_INGEST_H_

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "varbench/record.h"

namespace varbench {

// Source key names for raw exports. Defaults follow the Booking.com export
// layout (hotel__booking_id, user_nationality, ...).
struct FieldMap {
  std::string record_id = "record_id";
  std::string hotel_id = "hotel__booking_id";
  std::string nationality = "user_nationality";
  std::string score = "score";
  std::string title = "review_title";
  std::string positive = "positive_review";
  std::string negative = "negative_review";
  std::string review_time = "review_time";
  // Nationality codes; compared case-insensitively after trimming.
  std::string tw_code = "tw";
  std::string cn_code = "cn";

  // Keys in the file match the member names above; unknown keys are errors.
  static FieldMap load(const std::filesystem::path& path);
};

struct Rejection {
  size_t line = 0;  // 1-based
  std::string reason;  // "bad_score" | "missing_venue"
};

struct ParseResult {
  std::vector<ReviewRecord> records;
  std::vector<Rejection> rejected;
  size_t skipped = 0;  // malformed lines (not JSON objects, bad field types)
  size_t lines = 0;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parses one JSON object per line. Records without an id get
// "<id_prefix><line number, 8 digits>".
ParseResult parse_records(std::istream& in, const FieldMap& fields = {},
                          const std::string& id_prefix = "r");

std::vector<ReviewRecord> filter_nonempty(std::span<const ReviewRecord> records);

struct VarietySplit {
  std::vector<ReviewRecord> tw;
  std::vector<ReviewRecord> cn;
  size_t excluded = 0;
};

VarietySplit filter_varieties(std::span<const ReviewRecord> records);

// Canonical line-delimited record files.
void write_records(std::ostream& out, std::span<const ReviewRecord> records);
std::vector<ReviewRecord> read_records(std::istream& in);
std::vector<ReviewRecord> read_records(const std::filesystem::path& path);

}  // namespace varbench

#endif  // VARBENCH_INGEST_H_
