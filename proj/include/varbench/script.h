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

#ifndef VARBENCH_SCRIPT_H_
#define VARBENCH_SCRIPT_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "varbench/record.h"

namespace varbench {

enum class CharCategory : uint8_t {
  kTraditionalOnly,
  kSimplifiedOnly,
  kSharedChinese,
  kEnglish,
  kEmoji,
  kBopomofo,
  kJapaneseKorean,
  kSymbol,
  kPunctuation,
  kNumber,
  kWhitespace,
  kUnknown,
};

inline constexpr size_t kNumCharCategories = 12;

std::string_view category_name(CharCategory c);

// Character-set tables, one file per set under a directory:
//   traditional.txt simplified.txt bopomofo.txt emoji.txt jpkr.txt
//   english.txt number.txt punctuation.txt symbol.txt whitespace.txt
// Each line is a hex code point ("4E00") or inclusive range ("4E00..9FFF");
// '#' lines are comments. Overlaps are resolved by precedence:
//   Bopomofo > Emoji > JP/KR > Chinese > English > Number > Punctuation
//   > Symbol > Whitespace > Unknown.
// Code points in both Chinese sets are SharedChinese.
class CharSetTables {
 public:
  static inline constexpr std::array<std::string_view, 10> kFileNames = {
      "traditional", "simplified", "bopomofo", "emoji",  "jpkr",
      "english",     "number",     "punctuation", "symbol", "whitespace"};

  static CharSetTables load(const std::filesystem::path& dir);
  // `files` maps a name from kFileNames to its text; missing names are empty.
  static CharSetTables from_texts(const std::map<std::string, std::string>& files);

  CharCategory classify(char32_t c) const {
    return c < table_.size() ? static_cast<CharCategory>(table_[c]) : CharCategory::kUnknown;
  }

  // FNV-1a over the file contents in kFileNames order.
  const std::string& version() const { return version_; }

 private:
  std::vector<uint8_t> table_;  // indexed by code point
  std::string version_;
};

// Default table directory: $VARBENCH_CHARSETS if set, else the source tree's
// data/charsets.
std::filesystem::path default_tables_dir();

enum class ScriptBucket : uint8_t {
  kOnlyTraditional,
  kOnlySimplified,
  kOnlyEnglish,
  kOnlyEmoji,
  kOnlySymbol,
  kOnlyBopomofo,
  kOnlyJpKr,
  kOnlyPunctuation,
  kOnlyUnknown,
  kTraditionalEnglish,
  kTraditionalEmoji,
  kTraditionalSymbol,
  kTraditionalBopomofo,
  kTraditionalJpKr,
  kTraditionalUnknown,
  kSimplifiedEnglish,
  kSimplifiedEmoji,
  kSimplifiedSymbol,
  kSimplifiedBopomofo,
  kSimplifiedJpKr,
  kSimplifiedUnknown,
  // Not in the published layout.
  kChineseUndetermined,
  kOnlyNumber,
  kOnlyWhitespace,
  kOtherMixed,
  kEmpty,
};

inline constexpr size_t kNumScriptBuckets = 26;

std::string_view bucket_label(ScriptBucket b);  // e.g. "Traditional + English"
ScriptBucket parse_bucket_label(std::string_view label);

using CategoryMask = uint16_t;

inline constexpr CategoryMask category_bit(CharCategory c) {
  return static_cast<CategoryMask>(1u << static_cast<unsigned>(c));
}

struct ScriptProfile {
  CategoryMask present = 0;
  ScriptBucket bucket = ScriptBucket::kEmpty;

  bool has(CharCategory c) const { return (present & category_bit(c)) != 0; }
};

CharCategory classify_char(char32_t c, const CharSetTables& tables);

// Pure reduction of a category set to its bucket.
ScriptBucket reduce_bucket(CategoryMask present);

ScriptProfile profile_text(std::string_view text, const CharSetTables& tables);
// Profile over all text parts of a record.
ScriptProfile profile_record(const ReviewRecord& record, const CharSetTables& tables);

enum class SubsetConstraint { kChineseOnly, kChinesePlusEnglish };

// ChineseOnly: TW side Only Traditional, CN side Only Simplified.
// ChinesePlusEnglish: TW side Traditional + English, CN side
// Simplified + English.
bool subset_admits(SubsetConstraint constraint, ScriptBucket tw, ScriptBucket cn);

}  // namespace varbench

#endif  // VARBENCH_SCRIPT_H_
