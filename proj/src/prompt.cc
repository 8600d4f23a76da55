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

#include "varbench/prompt.h"

#include "varbench/util.h"

namespace varbench {

namespace templates::detail {
// Defined in the generated templates_data.cc.
extern const char* const kSystem;
extern const char* const kStructured;
extern const char* const kPlain;
extern const char* const kSentiment;
}  // namespace templates::detail

namespace templates {

namespace {
// Asset files end with a newline that is not part of the template.
std::string_view strip_final_newline(std::string_view s) {
  if (!s.empty() && s.back() == '\n') s.remove_suffix(1);
  return s;
}
}  // namespace

std::string_view system_text() { return strip_final_newline(detail::kSystem); }
std::string_view structured() { return strip_final_newline(detail::kStructured); }
std::string_view plain() { return strip_final_newline(detail::kPlain); }
std::string_view sentiment() { return strip_final_newline(detail::kSentiment); }

const std::string& version() {
  static const std::string v = [] {
    uint64_t h = kFnvOffset;
    for (std::string_view t : {system_text(), structured(), plain(), sentiment()}) {
      h = fnv1a64(t, h);
      h = fnv1a64("\x1e", h);
    }
    return hex64(h);
  }();
  return v;
}

}  // namespace templates

std::string_view variant_name(PromptVariant v) {
  switch (v) {
    case PromptVariant::kStructured: return "structured";
    case PromptVariant::kPlain: return "plain";
    case PromptVariant::kShuffled: return "shuffled";
  }
  return "plain";
}

PromptVariant parse_variant(std::string_view name) {
  if (name == "structured") return PromptVariant::kStructured;
  if (name == "plain") return PromptVariant::kPlain;
  if (name == "shuffled") return PromptVariant::kShuffled;
  throw FormatError("unknown prompt variant '" + std::string(name) + "'");
}

std::string fill_template(std::string_view tpl,
                          std::initializer_list<std::pair<std::string_view, std::string_view>> slots) {
  std::string out;
  size_t pos = 0;
  while (pos < tpl.size()) {
    size_t open = tpl.find('{', pos);
    if (open == std::string_view::npos) break;
    bool matched = false;
    for (const auto& [name, value] : slots) {
      if (tpl.compare(open + 1, name.size(), name) == 0 && open + 1 + name.size() < tpl.size() &&
          tpl[open + 1 + name.size()] == '}') {
        out.append(tpl.substr(pos, open - pos));
        out.append(value);
        pos = open + name.size() + 2;
        matched = true;
        break;
      }
    }
    if (!matched) {
      out.append(tpl.substr(pos, open + 1 - pos));
      pos = open + 1;
    }
  }
  out.append(tpl.substr(std::min(pos, tpl.size())));
  return out;
}

std::vector<std::string_view> review_elements(const ReviewRecord& record) {
  std::vector<std::string_view> parts;
  for (const auto* part : {&record.title, &record.positive, &record.negative}) {
    if (*part && !is_blank(**part)) parts.emplace_back(**part);
  }
  return parts;
}

namespace {

std::string join_lines(const std::vector<std::string_view>& parts) {
  std::string text;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) text.push_back('\n');
    text.append(parts[i]);
  }
  return text;
}

PromptInstance base_instance(const ReviewRecord& record, PromptVariant variant, uint64_t seed) {
  PromptInstance p;
  p.system_text = std::string(templates::system_text());
  p.variant = variant;
  p.seed = seed;
  p.review_ref = record.record_id;
  return p;
}

std::string_view or_empty(const std::optional<std::string>& v) {
  return v ? std::string_view(*v) : std::string_view();
}

}  // namespace

PromptInstance render_structured(const ReviewRecord& record) {
  PromptInstance p = base_instance(record, PromptVariant::kStructured, 0);
  p.user_text = fill_template(templates::structured(), {{"title", or_empty(record.title)},
                                                        {"positive", or_empty(record.positive)},
                                                        {"negative", or_empty(record.negative)}});
  return p;
}

PromptInstance render_plain(const ReviewRecord& record) {
  PromptInstance p = base_instance(record, PromptVariant::kPlain, 0);
  std::string text = join_lines(review_elements(record));
  p.user_text = fill_template(templates::plain(), {{"text", text}});
  return p;
}

PromptInstance render_shuffled(const ReviewRecord& record, uint64_t seed) {
  PromptInstance p = base_instance(record, PromptVariant::kShuffled, seed);
  auto parts = review_elements(record);
  std::vector<std::string_view> shuffled;
  for (size_t i : seeded_permutation(parts.size(), seed)) shuffled.push_back(parts[i]);
  std::string text = join_lines(shuffled);
  p.user_text = fill_template(templates::plain(), {{"text", text}});
  return p;
}

uint64_t shuffle_seed(uint64_t global_seed, std::string_view pair_id, Side side) {
  uint64_t h = fnv1a64(pair_id);
  h = fnv1a64(side_name(side), h);
  return SplitMix64(global_seed ^ h).next();
}

PromptInstance render(const ReviewRecord& record, PromptVariant variant, uint64_t seed) {
  switch (variant) {
    case PromptVariant::kStructured: return render_structured(record);
    case PromptVariant::kPlain: return render_plain(record);
    case PromptVariant::kShuffled: return render_shuffled(record, seed);
  }
  return render_plain(record);
}

PromptInstance render_sentiment(const ReviewRecord& record) {
  PromptInstance p;
  p.variant = PromptVariant::kPlain;
  p.review_ref = record.record_id;
  p.user_text = fill_template(templates::sentiment(), {{"text", join_lines(review_elements(record))}});
  return p;
}

}  // namespace varbench
