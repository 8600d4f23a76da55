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

#ifndef VARBENCH_MT_H_
#define VARBENCH_MT_H_

// Translation round trip: each source-side review is translated to the
// other variety and scored against its original.

#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "varbench/llm_client.h"
#include "varbench/metrics.h"
#include "varbench/pairing.h"
#include "varbench/record.h"

namespace varbench {

enum class TranslationDirection { kTwToCn, kCnToTw };

std::string_view direction_name(TranslationDirection d);  // "tw2cn", "cn2tw"
TranslationDirection parse_direction(std::string_view name);
Side source_side(TranslationDirection d);

class Translator {
 public:
  virtual ~Translator() = default;
  virtual const std::string& name() const = 0;
  // nullopt on failure. Must be safe to call concurrently.
  virtual std::optional<std::string> translate(std::string_view text,
                                               TranslationDirection direction) const = 0;
};

class IdentityTranslator : public Translator {
 public:
  const std::string& name() const override { return name_; }
  std::optional<std::string> translate(std::string_view text, TranslationDirection) const override {
    return std::string(text);
  }

 private:
  std::string name_ = "mock:identity";
};

// Fixed 50-entry traditional/simplified character table; other characters
// pass through.
class CharMapTranslator : public Translator {
 public:
  CharMapTranslator();
  const std::string& name() const override { return name_; }
  std::optional<std::string> translate(std::string_view text,
                                       TranslationDirection direction) const override;

  // The (traditional, simplified) entries.
  static std::span<const std::pair<char32_t, char32_t>> entries();

 private:
  std::string name_ = "mock:charmap";
  std::unordered_map<char32_t, char32_t> to_cn_;
  std::unordered_map<char32_t, char32_t> to_tw_;
};

// Google Translate v2-style REST endpoint. The API key, when the variable is
// set, goes in the `key` query parameter.
class HttpTranslator : public Translator {
 public:
  struct Options {
    std::string url;
    std::string api_key_env_var = "GOOGLE_TRANSLATE_API_KEY";
    std::chrono::milliseconds timeout{30000};
    int max_retries = 3;
    std::chrono::milliseconds backoff{500};
  };
  explicit HttpTranslator(Options options);
  const std::string& name() const override { return options_.url; }
  std::optional<std::string> translate(std::string_view text,
                                       TranslationDirection direction) const override;

 private:
  Options options_;
};

// Memoizes another translator; entries are keyed by (text hash, direction)
// and persisted as line-delimited {hash, direction, output} records.
class CachingTranslator : public Translator {
 public:
  CachingTranslator(const Translator& inner, std::optional<std::filesystem::path> cache_file);
  const std::string& name() const override { return inner_.name(); }
  std::optional<std::string> translate(std::string_view text,
                                       TranslationDirection direction) const override;
  size_t hits() const;
  size_t misses() const;

 private:
  const Translator& inner_;
  std::optional<std::filesystem::path> cache_file_;
  mutable std::mutex mu_;
  mutable std::unordered_map<std::string, std::string> cache_;
  mutable size_t hits_ = 0;
  mutable size_t misses_ = 0;
};

// "mock:identity", "mock:charmap", or an http(s) URL.
std::unique_ptr<Translator> make_translator(std::string_view spec);

struct TranslatedRecord {
  ReviewRecord record;  // same id and metadata; text parts translated
  TranslationDirection direction = TranslationDirection::kTwToCn;
};

struct TranslatedCorpus {
  std::vector<TranslatedRecord> records;  // input order, failures removed
  std::vector<std::string> dropped;       // record ids
};

TranslatedCorpus translate_corpus(std::span<const ReviewRecord> records, TranslationDirection direction,
                                  const Translator& translator, int parallelism = 1);

nlohmann::ordered_json translated_to_json(const TranslatedRecord& r);

struct MtRunOptions {
  uint64_t seed = 0;
  int parallelism = 1;
  int64_t short_max = 49;
};

struct MtResult {
  // Overall/Short/Long rows, origin = source variety ("tw" or "cn"). The
  // tw/cn columns hold the TW-script and CN-script versions of each item.
  std::vector<GapReportRow> rows;
  size_t dropped_translations = 0;
  size_t issued = 0;
  size_t valid = 0;
  size_t complete_items = 0;
};

MtResult mt_gap_rows(std::span<const ReviewPair> pairs, TranslationDirection direction,
                     const Translator& translator, const ChatModel& model, PromptVariant variant,
                     const MtRunOptions& options = {});

}  // namespace varbench

#endif  // VARBENCH_MT_H_
