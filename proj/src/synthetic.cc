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

#include "varbench/synthetic.h"

#include <algorithm>
#include <array>
#include <string_view>
#include <vector>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "varbench/mt.h"
#include "varbench/util.h"

namespace varbench {
namespace {

// Every character is traditional-only (and in the char-map table) or shared
// by both scripts; each phrase opens with a traditional-only character.
constexpr std::array<std::string_view, 43> kPhrases = {
    "這個房間很大", "飯店早餐很好吃", "飯店位置很方便", "樓下有很多商店", "機場很近",
    "價錢合理", "電梯有點小", "門口有車站", "衛生不好", "熱水不太熱",
    "燈不太亮", "開車到這很方便", "還會再來", "覺得很滿意", "廳很大",
    "說明書很清楚", "頭一次住這間", "錯過了早餐", "環境很安", "體感很好",
    "從前台到房間很近", "員工們都很友善", "邊上有超市", "區位很好", "館子很乾淨",
    "點心很好吃", "視野很好", "貼心的服務", "歡迎下次再來", "實在很好",
    "對面有公車站", "會再入住", "時間很短", "幣值不同", "滿房了",
    "書桌很大", "過了晚上很安", "進門有點小", "讓人很放心", "關門很吵",
    "氣味不好", "親友都喜歡", "錢花得值得",
};

enum class Style { kChinese, kEnglish, kEmoji, kSymbol, kBopomofo, kMixed };

constexpr std::array<std::string_view, 5> kEnglishTails = {" nice", " very good", " clean room",
                                                           " great value", " OK"};

Style pick_style(SplitMix64& rng) {
  const uint64_t r = rng.below(100);
  if (r < 45) return Style::kChinese;
  if (r < 75) return Style::kEnglish;
  if (r < 85) return Style::kEmoji;
  if (r < 90) return Style::kSymbol;
  if (r < 93) return Style::kBopomofo;
  return Style::kMixed;
}

std::string style_tail(Style style, SplitMix64& rng) {
  switch (style) {
    case Style::kChinese:
      return "";
    case Style::kEnglish:
      return std::string(kEnglishTails[rng.below(kEnglishTails.size())]);
    case Style::kEmoji:
      return rng.below(2) ? "\U0001F600" : "\U0001F44D";
    case Style::kSymbol:
      return "★";
    case Style::kBopomofo:
      return "ㄉ";
    case Style::kMixed:
      return " good \U0001F44D";
  }
  return "";
}

std::u32string chinese_text(SplitMix64& rng, size_t n) {
  std::u32string out;
  while (out.size() < n) {
    if (!out.empty()) out.push_back(rng.below(3) ? U'，' : U'。');
    std::u32string phrase = decode_utf8(kPhrases[rng.below(kPhrases.size())]);
    out += phrase;
  }
  out.resize(n);
  return out;
}

std::string encode(std::u32string_view s) {
  std::string out;
  for (char32_t c : s) append_utf8(out, c);
  return out;
}

struct Parts {
  std::optional<std::string> title;
  std::optional<std::string> positive;
  std::optional<std::string> negative;
};

// Splits `total` scalars (tail included) over the three parts.
Parts traditional_parts(SplitMix64& rng, size_t total, const std::string& tail) {
  const size_t tail_len = count_scalars(tail);
  const size_t body = total - tail_len;
  std::u32string text = chinese_text(rng, body);
  size_t title = 0;
  if (rng.below(10) >= 4) title = std::min<size_t>(4 + rng.below(5), body / 3);
  size_t negative = 0;
  if (rng.below(2) == 0) negative = (body - title) / 3;
  Parts p;
  if (title > 0) p.title = encode(text.substr(0, title));
  p.positive = encode(text.substr(title, body - title - negative)) + tail;
  if (negative > 0) {
    p.negative = encode(text.substr(body - negative));
  } else if (rng.below(10) == 0) {
    p.negative = "";
  }
  return p;
}

Parts to_simplified(const Parts& tw) {
  static const CharMapTranslator map;
  auto conv = [](const std::optional<std::string>& s) -> std::optional<std::string> {
    if (!s) return std::nullopt;
    return map.translate(*s, TranslationDirection::kTwToCn);
  };
  return {conv(tw.title), conv(tw.positive), conv(tw.negative)};
}

int score_in_class(SplitMix64& rng, int cls) {
  switch (cls) {
    case 0:
      return 1 + static_cast<int>(rng.below(3));
    case 1:
      return 4 + static_cast<int>(rng.below(4));
    default:
      return 8 + static_cast<int>(rng.below(3));
  }
}

int pick_class(SplitMix64& rng) {
  const uint64_t r = rng.below(10);
  return r < 2 ? 0 : (r < 5 ? 1 : 2);
}

// A length in bin `bin` (width 10) that respects the group and leaves room
// for a tail of `min_len - 2` scalars.
size_t pick_length(SplitMix64& rng, bool short_group, size_t min_len) {
  for (;;) {
    size_t bin;
    if (short_group) {
      bin = rng.below(5);
    } else {
      bin = rng.below(10) < 7 ? 5 + rng.below(11) : 16 + rng.below(34);
    }
    size_t lo = bin * 10 + 1;
    size_t hi = bin * 10 + 10;
    if (short_group) hi = std::min<size_t>(hi, 49);
    if (!short_group) lo = std::max<size_t>(lo, 50);
    lo = std::max(lo, min_len);
    if (lo > hi) continue;
    return lo + rng.below(hi - lo + 1);
  }
}

// Another length in the same width-10 bin and group as `len`.
size_t partner_length(SplitMix64& rng, size_t len, size_t min_len) {
  const size_t bin = (len - 1) / 10;
  size_t lo = std::max(bin * 10 + 1, min_len);
  size_t hi = bin * 10 + 10;
  if (len <= 49) hi = std::min<size_t>(hi, 49);
  if (len >= 50) lo = std::max<size_t>(lo, 50);
  if (lo > hi) return len;
  return lo + rng.below(hi - lo + 1);
}

std::string hotel_name(size_t i) { return fmt::format("H{:04d}", i + 1); }

std::string review_time(SplitMix64& rng) {
  return fmt::format("2023-{:02d}-{:02d}", 1 + rng.below(12), 1 + rng.below(28));
}

nlohmann::ordered_json line(const std::optional<std::string>& hotel, std::string_view nationality,
                            const nlohmann::json& score, const Parts& parts, SplitMix64& rng) {
  nlohmann::ordered_json j;
  if (hotel) j["hotel__booking_id"] = *hotel;
  j["user_nationality"] = nationality;
  j["score"] = score;
  if (parts.title) j["review_title"] = *parts.title;
  if (parts.positive) j["positive_review"] = *parts.positive;
  if (parts.negative) j["negative_review"] = *parts.negative;
  j["review_time"] = review_time(rng);
  return j;
}

std::string_view nationality_code(bool tw, SplitMix64& rng) {
  // Occasional upper case exercises the case-insensitive match.
  if (rng.below(20) == 0) return tw ? "TW" : "CN";
  return tw ? "tw" : "cn";
}

}  // namespace

size_t synthetic_line_count(const SyntheticOptions& o) {
  return 2 * o.slots + o.unpaired + o.other_variety + o.empty + o.bad_score + o.missing_venue +
         o.over_cap;
}

std::string synthetic_export(const SyntheticOptions& o) {
  SplitMix64 rng(o.seed);
  std::vector<nlohmann::ordered_json> lines;
  lines.reserve(synthetic_line_count(o));

  for (size_t i = 0; i < o.slots; ++i) {
    const std::string hotel = hotel_name(rng.below(o.hotels));
    const int cls = pick_class(rng);
    const bool short_group = rng.below(2) == 0;
    const Style tw_style = pick_style(rng);
    const Style cn_style = rng.below(10) < 7 ? tw_style : pick_style(rng);
    const std::string tw_tail = style_tail(tw_style, rng);
    const std::string cn_tail = style_tail(cn_style, rng);
    const size_t min_len = std::max(count_scalars(tw_tail), count_scalars(cn_tail)) + 2;
    const size_t tw_len = pick_length(rng, short_group, min_len);
    const size_t cn_len = partner_length(rng, tw_len, min_len);
    Parts tw = traditional_parts(rng, tw_len, tw_tail);
    Parts cn = to_simplified(traditional_parts(rng, cn_len, cn_tail));
    lines.push_back(line(hotel, nationality_code(true, rng), score_in_class(rng, cls), tw, rng));
    lines.push_back(line(hotel, nationality_code(false, rng), score_in_class(rng, cls), cn, rng));
  }

  auto single = [&](std::string_view nationality, bool simplified, size_t len) {
    const std::string tail = style_tail(pick_style(rng), rng);
    len = std::max(len, count_scalars(tail) + 2);
    Parts p = traditional_parts(rng, len, tail);
    if (simplified) p = to_simplified(p);
    const std::string hotel = hotel_name(rng.below(o.hotels + 20));
    return line(hotel, nationality, score_in_class(rng, pick_class(rng)), p, rng);
  };

  for (size_t i = 0; i < o.unpaired; ++i) {
    const bool tw = rng.below(2) == 0;
    const size_t len = pick_length(rng, rng.below(2) == 0, 2);
    lines.push_back(single(nationality_code(tw, rng), !tw, len));
  }
  constexpr std::array<std::string_view, 3> kOther = {"jp", "us", "hk"};
  for (size_t i = 0; i < o.other_variety; ++i) {
    lines.push_back(single(kOther[rng.below(kOther.size())], rng.below(2) == 1,
                           pick_length(rng, true, 2)));
  }
  for (size_t i = 0; i < o.empty; ++i) {
    Parts p;
    switch (rng.below(3)) {
      case 0:
        break;
      case 1:
        p.positive = "";
        break;
      default:
        p.title = "  ";
        p.negative = "　";
        break;
    }
    const bool tw = rng.below(2) == 0;
    lines.push_back(line(hotel_name(rng.below(o.hotels)), nationality_code(tw, rng),
                         score_in_class(rng, pick_class(rng)), p, rng));
  }
  for (size_t i = 0; i < o.bad_score; ++i) {
    nlohmann::json score;
    switch (i % 4) {
      case 0:
        score = 0;
        break;
      case 1:
        score = 11;
        break;
      case 2:
        score = "excellent";
        break;
      default:
        score = nullptr;
        break;
    }
    auto j = single(nationality_code(i % 2 == 0, rng), i % 2 == 1, pick_length(rng, true, 2));
    j["score"] = score;
    lines.push_back(std::move(j));
  }
  for (size_t i = 0; i < o.missing_venue; ++i) {
    auto j = single(nationality_code(i % 2 == 0, rng), i % 2 == 1, pick_length(rng, true, 2));
    j.erase("hotel__booking_id");
    lines.push_back(std::move(j));
  }
  for (size_t i = 0; i < o.over_cap; ++i) {
    lines.push_back(single(nationality_code(i % 2 == 0, rng), i % 2 == 1, 501 + rng.below(100)));
  }

  std::vector<size_t> order = seeded_permutation(lines.size(), rng.next());
  std::string out;
  for (size_t k = 0; k < order.size(); ++k) {
    nlohmann::ordered_json j;
    // One line in a hundred has no id and gets a line-derived one at ingest.
    if (k % 100 != 99) j["record_id"] = fmt::format("fx{:06d}", k + 1);
    for (auto& [key, value] : lines[order[k]].items()) j[key] = value;
    out += j.dump();
    out += '\n';
  }
  return out;
}

}  // namespace varbench
