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

#ifndef VARBENCH_SYNTHETIC_H_
#define VARBENCH_SYNTHETIC_H_

// Deterministic synthetic review exports for tests, demos and the bundled
// fixture. Traditional text is drawn from a fixed phrase list whose
// characters are either traditional-only or shared; the simplified text is
// its character-map image, so the two sides differ only in script.

#include <cstdint>
#include <string>

namespace varbench {

struct SyntheticOptions {
  uint64_t seed = 20240501;
  // Matched (TW, CN) slots; each contributes one review per side that shares
  // hotel, sentiment class and length bin with its partner.
  size_t slots = 700;
  size_t unpaired = 400;     // single reviews with a random key
  size_t other_variety = 100;
  size_t empty = 50;         // no text in any part
  size_t bad_score = 20;     // rejected at ingest
  size_t missing_venue = 10; // rejected at ingest
  size_t over_cap = 20;      // longer than 500 characters
  size_t hotels = 40;
};

// Total line count for the options (2,000 with the defaults).
size_t synthetic_line_count(const SyntheticOptions& options);

// Raw export lines in the default field layout, newline-terminated.
std::string synthetic_export(const SyntheticOptions& options = {});

}  // namespace varbench

#endif  // VARBENCH_SYNTHETIC_H_
