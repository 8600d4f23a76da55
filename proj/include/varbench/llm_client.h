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

#ifndef VARBENCH_LLM_CLIENT_H_
#define VARBENCH_LLM_CLIENT_H_

#include <chrono>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "varbench/pairing.h"
#include "varbench/prompt.h"
#include "varbench/record.h"
#include "varbench/script.h"

namespace varbench {

// A chat-completion endpoint (OpenAI-style wire format).
struct ModelEndpoint {
  std::string name;      // unique within a run
  std::string base_url;  // e.g. http://localhost:8000/v1
  std::string model;     // value of the "model" request field; defaults to name
  std::string auth_token_env_var;
  bool supports_system_role = true;
  bool send_temperature = true;
  std::chrono::milliseconds request_timeout{60000};
  int max_retries = 3;  // attempts = 1 + max_retries
  std::chrono::milliseconds backoff{500};  // doubled after each failed attempt
};

// JSON array of endpoint objects with the member names above
// (request_timeout_ms, backoff_ms for the durations).
std::vector<ModelEndpoint> load_endpoints(const std::filesystem::path& path);

struct CompletionResult {
  std::string pair_id;
  Side side = Side::kTW;
  std::string review_ref;
  std::string model;
  PromptVariant variant = PromptVariant::kPlain;
  std::optional<std::string> raw_text;  // xor transport_error
  std::optional<std::string> transport_error;
  double latency_ms = 0.0;
  int attempt_count = 0;

  bool operator==(const CompletionResult&) const = default;
};

class ChatModel {
 public:
  virtual ~ChatModel() = default;
  virtual const std::string& name() const = 0;
  virtual bool supports_system_role() const { return true; }
  // Fills review_ref, model, variant, raw_text or transport_error, latency
  // and attempt_count. Must be safe to call concurrently.
  virtual CompletionResult complete(const PromptInstance& prompt) const = 0;
};

class HttpChatModel : public ChatModel {
 public:
  explicit HttpChatModel(ModelEndpoint endpoint);
  const std::string& name() const override { return endpoint_.name; }
  bool supports_system_role() const override { return endpoint_.supports_system_role; }
  CompletionResult complete(const PromptInstance& prompt) const override;

  // Request body for a prompt; exposed for tests.
  nlohmann::json request_body(const PromptInstance& prompt) const;

 private:
  ModelEndpoint endpoint_;
};

// Side channel for mock models: the label of every review they may see.
struct GroundTruth {
  double score = 0.0;
  Variety variety = Variety::kOther;
};
using TruthTable = std::unordered_map<std::string, GroundTruth>;

TruthTable truth_from_pairs(std::span<const ReviewPair> pairs);
TruthTable truth_from_records(std::span<const ReviewRecord> records);

// Deterministic stand-ins. Each answers from the truth table; an unknown
// review_ref yields a transport error.
//   mock:echo              rounded true score
//   mock:constant:K        "K" for every prompt
//   mock:biased:tw|cn      true score shifted by one for that variety
//                          (+1, or -1 when the truth is 10)
//   mock:script-biased     shifted by one when the prompt contains a
//                          traditional-only character
//   mock:echo-sentiment    "positive" / "neutral" / "negative"
struct ModelContext {
  const TruthTable* truth = nullptr;
  const CharSetTables* tables = nullptr;  // mock:script-biased only
  std::vector<ModelEndpoint> endpoints;   // looked up by name otherwise
};

std::unique_ptr<ChatModel> make_model(std::string_view spec, const ModelContext& context);

// One request of an evaluation run.
struct EvalItem {
  std::string pair_id;
  Side side = Side::kTW;
  PromptInstance prompt;
};

// Issues every item with at most `parallelism` in flight. Results come back
// sorted by (pair_id, side) whatever the completion order.
std::vector<CompletionResult> run_items(std::span<const EvalItem> items, const ChatModel& model,
                                        int parallelism);

// Both sides of every pair under one prompt variant: 2 * |pairs| requests.
std::vector<EvalItem> eval_items(std::span<const ReviewPair> pairs, PromptVariant variant,
                                 uint64_t seed);

std::vector<CompletionResult> run_eval(std::span<const ReviewPair> pairs, const ChatModel& model,
                                       PromptVariant variant, uint64_t seed, int parallelism);

struct RunManifest {
  std::string endpoint;
  PromptVariant variant = PromptVariant::kPlain;
  uint64_t seed = 0;
  std::string template_version;
  std::string tables_version;

  // Hash over exactly the fields above.
  std::string hash() const;
  nlohmann::ordered_json to_json() const;
};

nlohmann::ordered_json completion_to_json(const CompletionResult& r);
CompletionResult completion_from_json(const nlohmann::json& j);
void write_completions(std::ostream& out, std::span<const CompletionResult> results);
std::vector<CompletionResult> read_completions(std::istream& in);
std::vector<CompletionResult> read_completions(const std::filesystem::path& path);

}  // namespace varbench

#endif  // VARBENCH_LLM_CLIENT_H_
