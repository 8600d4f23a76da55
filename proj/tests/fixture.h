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

#ifndef VARBENCH_TESTS_FIXTURE_H_
#define VARBENCH_TESTS_FIXTURE_H_

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "varbench/ingest.h"
#include "varbench/pairing.h"
#include "varbench/script.h"

namespace varbench::testing {

inline std::filesystem::path data_dir() { return VARBENCH_DATA_DIR; }
inline std::filesystem::path fixture_path() {
  return data_dir() / "fixtures" / "synthetic_2000.jsonl";
}

inline const CharSetTables& tables() {
  static const CharSetTables t = CharSetTables::load(data_dir() / "charsets");
  return t;
}

// Ingest and pair the committed fixture the same way the pipeline does.
inline const std::vector<ReviewPair>& fixture_pairs(uint64_t seed = 0) {
  static const std::vector<ReviewPair> pairs = [seed] {
    std::ifstream in(fixture_path());
    ParseResult parsed = parse_records(in);
    auto nonempty = filter_nonempty(parsed.records);
    VarietySplit split = filter_varieties(nonempty);
    PairingConfig pc;
    pc.seed = seed;
    return build_pairs(split.tw, split.cn, pc).pairs;
  }();
  return pairs;
}

// A fresh scratch directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("varbench_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace varbench::testing

#endif  // VARBENCH_TESTS_FIXTURE_H_
