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

#ifndef VARBENCH_PIPELINE_H_
#define VARBENCH_PIPELINE_H_

// End-to-end orchestration: ingest -> stats -> classify -> pair -> eval ->
// validate -> metrics (-> mt) -> report. Every stage writes its artifacts and
// a manifest under <output_dir>/manifests; a stage whose manifest key and
// output hashes still match is skipped on the next run.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "varbench/kvfile.h"
#include "varbench/metrics.h"
#include "varbench/mt.h"
#include "varbench/pairing.h"
#include "varbench/prompt.h"
#include "varbench/textstats.h"

namespace varbench {

struct RunConfig {
  std::filesystem::path input;
  std::optional<std::filesystem::path> field_map;
  std::optional<std::filesystem::path> charsets;  // default_tables_dir() when unset
  std::optional<std::filesystem::path> endpoints;
  uint64_t seed = 0;
  ClassBoundaries classes;
  LengthConfig lengths;
  std::vector<std::string> models = {"mock:echo"};
  std::vector<PromptVariant> variants = {PromptVariant::kStructured, PromptVariant::kPlain,
                                         PromptVariant::kShuffled};
  std::vector<Subset> subsets = {Subset::kAll, Subset::kChineseOnly, Subset::kChinesePlusEnglish};
  std::vector<TranslationDirection> mt_directions;  // empty: no translation stage
  std::string translator = "mock:identity";
  std::filesystem::path output_dir = "varbench-out";
  int parallelism = 4;

  // Keys: input, field_map, charsets, endpoints, seed, negative_max,
  // neutral_max, bin_width, max_len, short_max, models, variants, subsets,
  // mt_directions, translator, output_dir, parallelism. Lists are
  // comma-separated. Unknown keys are errors. Relative paths resolve against
  // `base_dir`.
  void apply(const KeyValueFile& kv, const std::filesystem::path& base_dir = {});
  static RunConfig load(const std::filesystem::path& path);
  void validate() const;  // throws ConfigError
};

class StageError : public std::runtime_error {
 public:
  StageError(std::string stage, const std::string& message)
      : std::runtime_error("stage " + stage + " failed: " + message), stage_(std::move(stage)) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

struct PipelineResult {
  std::vector<GapReportRow> rows;
  std::vector<GapReportRow> mt_rows;
  std::vector<std::string> stages_run;
  std::vector<std::string> stages_skipped;
  std::string bundle_hash;  // over every artifact and manifest
};

// Throws StageError naming the failing stage; artifacts of completed stages
// stay on disk.
PipelineResult run_pipeline(const RunConfig& config);

// File-system safe form of a model spec ("mock:echo" -> "mock_echo").
std::string artifact_stem(std::string_view name);

// FNV-1a over the relative paths and bytes of every regular file under
// `dir`, in path order, skipping the translation cache.
std::string bundle_hash(const std::filesystem::path& dir);

}  // namespace varbench

#endif  // VARBENCH_PIPELINE_H_
