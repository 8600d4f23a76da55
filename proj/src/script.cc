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

#include "varbench/script.h"

#include <bit>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "varbench/ingest.h"
#include "varbench/util.h"

#ifndef VARBENCH_DATA_DIR
#define VARBENCH_DATA_DIR "data"
#endif

namespace varbench {

std::string_view category_name(CharCategory c) {
  switch (c) {
    case CharCategory::kTraditionalOnly: return "TraditionalOnly";
    case CharCategory::kSimplifiedOnly: return "SimplifiedOnly";
    case CharCategory::kSharedChinese: return "SharedChinese";
    case CharCategory::kEnglish: return "English";
    case CharCategory::kEmoji: return "Emoji";
    case CharCategory::kBopomofo: return "Bopomofo";
    case CharCategory::kJapaneseKorean: return "JapaneseKorean";
    case CharCategory::kSymbol: return "Symbol";
    case CharCategory::kPunctuation: return "Punctuation";
    case CharCategory::kNumber: return "Number";
    case CharCategory::kWhitespace: return "Whitespace";
    case CharCategory::kUnknown: return "Unknown";
  }
  return "Unknown";
}

namespace {

constexpr char32_t kMaxCodePoint = 0x10FFFF;

struct CodeRange {
  char32_t lo;
  char32_t hi;
};

std::vector<CodeRange> parse_ranges(std::string_view name, std::string_view text) {
  std::vector<CodeRange> ranges;
  size_t line_no = 0;
  for (const std::string& raw : split(text, '\n')) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto parse_hex = [&](std::string_view s) -> char32_t {
      std::string buf(s);
      char* end = nullptr;
      unsigned long v = std::strtoul(buf.c_str(), &end, 16);
      if (buf.empty() || *end != '\0' || v > kMaxCodePoint) {
        throw FormatError(fmt::format("{}.txt line {}: bad code point '{}'", name, line_no, s));
      }
      return static_cast<char32_t>(v);
    };
    size_t dots = line.find("..");
    CodeRange r;
    if (dots == std::string_view::npos) {
      r.lo = r.hi = parse_hex(line);
    } else {
      r.lo = parse_hex(line.substr(0, dots));
      r.hi = parse_hex(line.substr(dots + 2));
    }
    if (r.hi < r.lo) throw FormatError(fmt::format("{}.txt line {}: empty range", name, line_no));
    ranges.push_back(r);
  }
  return ranges;
}

}  // namespace

CharSetTables CharSetTables::from_texts(const std::map<std::string, std::string>& files) {
  auto text_of = [&](std::string_view name) -> std::string_view {
    auto it = files.find(std::string(name));
    return it == files.end() ? std::string_view() : std::string_view(it->second);
  };
  uint64_t h = kFnvOffset;
  for (std::string_view name : kFileNames) {
    h = fnv1a64(name, h);
    h = fnv1a64(text_of(name), h);
  }

  CharSetTables t;
  t.version_ = hex64(h);
  t.table_.assign(kMaxCodePoint + 1, static_cast<uint8_t>(CharCategory::kUnknown));
  auto paint = [&](std::string_view name, CharCategory cat) {
    for (const auto& r : parse_ranges(name, text_of(name))) {
      for (char32_t c = r.lo; c <= r.hi; ++c) t.table_[c] = static_cast<uint8_t>(cat);
    }
  };
  // Lowest precedence first; later writes win.
  paint("whitespace", CharCategory::kWhitespace);
  paint("symbol", CharCategory::kSymbol);
  paint("punctuation", CharCategory::kPunctuation);
  paint("number", CharCategory::kNumber);
  paint("english", CharCategory::kEnglish);

  std::vector<uint8_t> chinese(kMaxCodePoint + 1, 0);  // bit0 traditional, bit1 simplified
  for (const auto& r : parse_ranges("traditional", text_of("traditional"))) {
    for (char32_t c = r.lo; c <= r.hi; ++c) chinese[c] |= 1;
  }
  for (const auto& r : parse_ranges("simplified", text_of("simplified"))) {
    for (char32_t c = r.lo; c <= r.hi; ++c) chinese[c] |= 2;
  }
  for (char32_t c = 0; c <= kMaxCodePoint; ++c) {
    switch (chinese[c]) {
      case 1: t.table_[c] = static_cast<uint8_t>(CharCategory::kTraditionalOnly); break;
      case 2: t.table_[c] = static_cast<uint8_t>(CharCategory::kSimplifiedOnly); break;
      case 3: t.table_[c] = static_cast<uint8_t>(CharCategory::kSharedChinese); break;
      default: break;
    }
  }

  paint("jpkr", CharCategory::kJapaneseKorean);
  paint("emoji", CharCategory::kEmoji);
  paint("bopomofo", CharCategory::kBopomofo);
  return t;
}

CharSetTables CharSetTables::load(const std::filesystem::path& dir) {
  std::map<std::string, std::string> files;
  for (std::string_view name : kFileNames) {
    auto path = dir / (std::string(name) + ".txt");
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open character-set table " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    files[std::string(name)] = buf.str();
  }
  return from_texts(files);
}

std::filesystem::path default_tables_dir() {
  if (const char* env = std::getenv("VARBENCH_CHARSETS"); env && *env) return env;
  return std::filesystem::path(VARBENCH_DATA_DIR) / "charsets";
}

namespace {

constexpr std::array<std::string_view, kNumScriptBuckets> kBucketLabels = {
    "Only Traditional",
    "Only Simplified",
    "Only English",
    "Only Emoji",
    "Only Symbol",
    "Only Bopomofo",
    "Only JP/KR",
    "Only Punctuation",
    "Only Unknown",
    "Traditional + English",
    "Traditional + Emoji",
    "Traditional + Symbol",
    "Traditional + Bopomofo",
    "Traditional + JP/KR",
    "Traditional + Unknown",
    "Simplified + English",
    "Simplified + Emoji",
    "Simplified + Symbol",
    "Simplified + Bopomofo",
    "Simplified + JP/KR",
    "Simplified + Unknown",
    "Chinese (undetermined)",
    "Only Number",
    "Only Whitespace",
    "Other mixed",
    "Empty",
};

// Non-Chinese, non-neutral categories in the order of the "+ X" rows.
constexpr std::array<CharCategory, 6> kExtras = {
    CharCategory::kEnglish, CharCategory::kEmoji,          CharCategory::kSymbol,
    CharCategory::kBopomofo, CharCategory::kJapaneseKorean, CharCategory::kUnknown};

constexpr std::array<ScriptBucket, 6> kOnlyExtra = {
    ScriptBucket::kOnlyEnglish,  ScriptBucket::kOnlyEmoji, ScriptBucket::kOnlySymbol,
    ScriptBucket::kOnlyBopomofo, ScriptBucket::kOnlyJpKr,  ScriptBucket::kOnlyUnknown};

constexpr CategoryMask kNeutral = category_bit(CharCategory::kPunctuation) |
                                  category_bit(CharCategory::kNumber) |
                                  category_bit(CharCategory::kWhitespace);

}  // namespace

std::string_view bucket_label(ScriptBucket b) { return kBucketLabels[static_cast<size_t>(b)]; }

ScriptBucket parse_bucket_label(std::string_view label) {
  for (size_t i = 0; i < kBucketLabels.size(); ++i) {
    if (kBucketLabels[i] == label) return static_cast<ScriptBucket>(i);
  }
  throw FormatError("unknown script bucket '" + std::string(label) + "'");
}

CharCategory classify_char(char32_t c, const CharSetTables& tables) { return tables.classify(c); }

ScriptBucket reduce_bucket(CategoryMask present) {
  if (present == 0) return ScriptBucket::kEmpty;
  const CategoryMask salient = present & ~kNeutral;
  if (salient == 0) {
    if (present & category_bit(CharCategory::kPunctuation)) return ScriptBucket::kOnlyPunctuation;
    if (present & category_bit(CharCategory::kNumber)) return ScriptBucket::kOnlyNumber;
    return ScriptBucket::kOnlyWhitespace;
  }

  const bool trad = salient & category_bit(CharCategory::kTraditionalOnly);
  const bool simp = salient & category_bit(CharCategory::kSimplifiedOnly);
  const bool shared = salient & category_bit(CharCategory::kSharedChinese);
  const CategoryMask extras = salient & ~(category_bit(CharCategory::kTraditionalOnly) |
                                         category_bit(CharCategory::kSimplifiedOnly) |
                                         category_bit(CharCategory::kSharedChinese));
  const int num_extras = std::popcount(extras);
  size_t extra_index = 0;
  if (num_extras == 1) {
    for (size_t i = 0; i < kExtras.size(); ++i) {
      if (extras & category_bit(kExtras[i])) extra_index = i;
    }
  }

  if (trad && simp) return ScriptBucket::kOtherMixed;
  if (trad || simp) {
    if (num_extras == 0) return trad ? ScriptBucket::kOnlyTraditional : ScriptBucket::kOnlySimplified;
    if (num_extras > 1) return ScriptBucket::kOtherMixed;
    auto base = static_cast<size_t>(trad ? ScriptBucket::kTraditionalEnglish
                                         : ScriptBucket::kSimplifiedEnglish);
    return static_cast<ScriptBucket>(base + extra_index);
  }
  if (shared) {
    return num_extras == 0 ? ScriptBucket::kChineseUndetermined : ScriptBucket::kOtherMixed;
  }
  if (num_extras == 1) return kOnlyExtra[extra_index];
  return ScriptBucket::kOtherMixed;
}

namespace {

CategoryMask mask_of(std::string_view text, const CharSetTables& tables) {
  CategoryMask mask = 0;
  for (char32_t c : decode_utf8(text)) mask |= category_bit(tables.classify(c));
  return mask;
}

}  // namespace

ScriptProfile profile_text(std::string_view text, const CharSetTables& tables) {
  ScriptProfile p;
  p.present = mask_of(text, tables);
  p.bucket = reduce_bucket(p.present);
  return p;
}

ScriptProfile profile_record(const ReviewRecord& record, const CharSetTables& tables) {
  ScriptProfile p;
  for (const auto* part : {&record.title, &record.positive, &record.negative}) {
    if (*part) p.present |= mask_of(**part, tables);
  }
  p.bucket = reduce_bucket(p.present);
  return p;
}

bool subset_admits(SubsetConstraint constraint, ScriptBucket tw, ScriptBucket cn) {
  switch (constraint) {
    case SubsetConstraint::kChineseOnly:
      return tw == ScriptBucket::kOnlyTraditional && cn == ScriptBucket::kOnlySimplified;
    case SubsetConstraint::kChinesePlusEnglish:
      return tw == ScriptBucket::kTraditionalEnglish && cn == ScriptBucket::kSimplifiedEnglish;
  }
  return false;
}

}  // namespace varbench
