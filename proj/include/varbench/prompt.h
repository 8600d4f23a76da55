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

#ifndef VARBENCH_PROMPT_H_
#define VARBENCH_PROMPT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "varbench/record.h"

namespace varbench {

enum class PromptVariant { kStructured, kPlain, kShuffled };

std::string_view variant_name(PromptVariant v);  // "structured", "plain", "shuffled"
PromptVariant parse_variant(std::string_view name);

struct PromptInstance {
  std::optional<std::string> system_text;
  std::string user_text;
  PromptVariant variant = PromptVariant::kPlain;
  uint64_t seed = 0;
  std::string review_ref;
};

// Template assets compiled in from data/templates/. Placeholders are
// {title}, {positive}, {negative} and {text}.
namespace templates {
std::string_view system_text();
std::string_view structured();
std::string_view plain();
std::string_view sentiment();
// Hash over all template texts.
const std::string& version();
}  // namespace templates

// Single-pass placeholder substitution; substituted text is never rescanned.
std::string fill_template(std::string_view tpl,
                          std::initializer_list<std::pair<std::string_view, std::string_view>> slots);

// Non-blank text parts in title, positive, negative order.
std::vector<std::string_view> review_elements(const ReviewRecord& record);

PromptInstance render_structured(const ReviewRecord& record);
PromptInstance render_plain(const ReviewRecord& record);
PromptInstance render_shuffled(const ReviewRecord& record, uint64_t seed);

// Seed for one side of one pair under a run-wide seed.
uint64_t shuffle_seed(uint64_t global_seed, std::string_view pair_id, Side side);

PromptInstance render(const ReviewRecord& record, PromptVariant variant, uint64_t seed);

// Three-way sentiment prompt used by the length sweep. Has no system text.
PromptInstance render_sentiment(const ReviewRecord& record);

}  // namespace varbench

#endif  // VARBENCH_PROMPT_H_
