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

#include "varbench/llm_client.h"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <thread>
#include <tuple>

#include <fmt/format.h>
#include <omp.h>

#include "varbench/http.h"
#include "varbench/kvfile.h"
#include "varbench/ingest.h"
#include "varbench/util.h"

namespace varbench {

std::vector<ModelEndpoint> load_endpoints(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
  if (!doc.is_array()) throw FormatError(path.string() + ": expected a JSON array");
  std::vector<ModelEndpoint> out;
  for (const auto& j : doc) {
    ModelEndpoint e;
    try {
      e.name = j.at("name").get<std::string>();
      e.base_url = j.at("base_url").get<std::string>();
      e.model = j.value("model", e.name);
      e.auth_token_env_var = j.value("auth_token_env_var", "");
      e.supports_system_role = j.value("supports_system_role", true);
      e.send_temperature = j.value("send_temperature", true);
      e.request_timeout = std::chrono::milliseconds(j.value("request_timeout_ms", 60000));
      e.max_retries = j.value("max_retries", 3);
      e.backoff = std::chrono::milliseconds(j.value("backoff_ms", 500));
    } catch (const nlohmann::json::exception& ex) {
      throw FormatError(path.string() + ": " + ex.what());
    }
    for (const auto& other : out) {
      if (other.name == e.name) throw FormatError("duplicate endpoint name '" + e.name + "'");
    }
    out.push_back(std::move(e));
  }
  return out;
}

HttpChatModel::HttpChatModel(ModelEndpoint endpoint) : endpoint_(std::move(endpoint)) {
  if (endpoint_.model.empty()) endpoint_.model = endpoint_.name;
  if (endpoint_.max_retries < 0) throw std::invalid_argument("max_retries must be >= 0");
}

nlohmann::json HttpChatModel::request_body(const PromptInstance& prompt) const {
  nlohmann::json messages = nlohmann::json::array();
  if (endpoint_.supports_system_role && prompt.system_text) {
    messages.push_back({{"role", "system"}, {"content", *prompt.system_text}});
  }
  messages.push_back({{"role", "user"}, {"content", prompt.user_text}});
  nlohmann::json body = {{"model", endpoint_.model}, {"messages", messages}};
  if (endpoint_.send_temperature) body["temperature"] = 0;
  return body;
}

CompletionResult HttpChatModel::complete(const PromptInstance& prompt) const {
  CompletionResult r;
  r.review_ref = prompt.review_ref;
  r.model = endpoint_.name;
  r.variant = prompt.variant;

  const auto start = std::chrono::steady_clock::now();
  http::Url base = http::parse_url(endpoint_.base_url);
  std::map<std::string, std::string> headers;
  if (!endpoint_.auth_token_env_var.empty()) {
    if (const char* token = std::getenv(endpoint_.auth_token_env_var.c_str()); token && *token) {
      headers["Authorization"] = std::string("Bearer ") + token;
    }
  }
  const std::string body = request_body(prompt).dump();
  auto backoff = endpoint_.backoff;
  std::string last_error;
  for (int attempt = 1; attempt <= endpoint_.max_retries + 1; ++attempt) {
    r.attempt_count = attempt;
    auto res = http::post_json(base, "/chat/completions", body, headers, endpoint_.request_timeout);
    bool retryable = true;
    if (res.response) {
      const auto& resp = *res.response;
      if (resp.status >= 200 && resp.status < 300) {
        auto j = nlohmann::json::parse(resp.body, nullptr, false);
        std::optional<std::string> content;
        if (j.is_object() && j.contains("choices") && j["choices"].is_array() &&
            !j["choices"].empty() && j["choices"][0].is_object()) {
          const nlohmann::json& choice = j["choices"][0];
          auto msg = choice.find("message");
          if (msg != choice.end() && msg->is_object()) {
            auto text = msg->find("content");
            if (text != msg->end() && text->is_string()) content = text->get<std::string>();
          }
        }
        if (content) {
          r.raw_text = std::move(content);
          r.transport_error.reset();
          break;
        }
        last_error = "malformed response: " + resp.body.substr(0, 512);
        retryable = false;
      } else {
        last_error = fmt::format("http {}: {}", resp.status, resp.body.substr(0, 2048));
        retryable = resp.status == 429 || resp.status >= 500;
      }
    } else {
      last_error = res.error;
    }
    r.transport_error = last_error;
    if (!retryable || attempt == endpoint_.max_retries + 1) break;
    std::this_thread::sleep_for(backoff);
    backoff *= 2;
  }
  r.latency_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

TruthTable truth_from_pairs(std::span<const ReviewPair> pairs) {
  TruthTable t;
  for (const auto& p : pairs) {
    t[p.tw.record_id] = {p.tw.score, p.tw.variety};
    t[p.cn.record_id] = {p.cn.score, p.cn.variety};
  }
  return t;
}

TruthTable truth_from_records(std::span<const ReviewRecord> records) {
  TruthTable t;
  for (const auto& r : records) t[r.record_id] = {r.score, r.variety};
  return t;
}

namespace {

int shift_by_one(int score) { return score >= 10 ? score - 1 : score + 1; }

// Shared plumbing for mocks: look up the truth and format an answer.
class MockModel : public ChatModel {
 public:
  MockModel(std::string name, const TruthTable* truth) : name_(std::move(name)), truth_(truth) {}
  const std::string& name() const override { return name_; }

  CompletionResult complete(const PromptInstance& prompt) const override {
    CompletionResult r;
    r.review_ref = prompt.review_ref;
    r.model = name_;
    r.variant = prompt.variant;
    r.attempt_count = 1;
    const GroundTruth* truth = nullptr;
    if (truth_) {
      auto it = truth_->find(prompt.review_ref);
      if (it != truth_->end()) truth = &it->second;
    }
    auto answer = respond(prompt, truth);
    if (answer) {
      r.raw_text = std::move(*answer);
    } else {
      r.transport_error = "mock: no ground truth for " + prompt.review_ref;
    }
    return r;
  }

 protected:
  virtual std::optional<std::string> respond(const PromptInstance& prompt,
                                             const GroundTruth* truth) const = 0;

 private:
  std::string name_;
  const TruthTable* truth_;
};

class EchoScoreModel : public MockModel {
 public:
  using MockModel::MockModel;

 protected:
  std::optional<std::string> respond(const PromptInstance&, const GroundTruth* truth) const override {
    if (!truth) return std::nullopt;
    return std::to_string(round_score(truth->score));
  }
};

class ConstantModel : public MockModel {
 public:
  ConstantModel(std::string name, std::string answer)
      : MockModel(std::move(name), nullptr), answer_(std::move(answer)) {}

 protected:
  std::optional<std::string> respond(const PromptInstance&, const GroundTruth*) const override {
    return answer_;
  }

 private:
  std::string answer_;
};

class BiasedModel : public MockModel {
 public:
  BiasedModel(std::string name, const TruthTable* truth, Variety target)
      : MockModel(std::move(name), truth), target_(target) {}

 protected:
  std::optional<std::string> respond(const PromptInstance&, const GroundTruth* truth) const override {
    if (!truth) return std::nullopt;
    int s = round_score(truth->score);
    return std::to_string(truth->variety == target_ ? shift_by_one(s) : s);
  }

 private:
  Variety target_;
};

class ScriptBiasedModel : public MockModel {
 public:
  ScriptBiasedModel(std::string name, const TruthTable* truth, const CharSetTables* tables)
      : MockModel(std::move(name), truth), tables_(tables) {}

 protected:
  std::optional<std::string> respond(const PromptInstance& prompt,
                                     const GroundTruth* truth) const override {
    if (!truth) return std::nullopt;
    int s = round_score(truth->score);
    bool traditional = profile_text(prompt.user_text, *tables_).has(CharCategory::kTraditionalOnly);
    return std::to_string(traditional ? shift_by_one(s) : s);
  }

 private:
  const CharSetTables* tables_;
};

class EchoSentimentModel : public MockModel {
 public:
  using MockModel::MockModel;

 protected:
  std::optional<std::string> respond(const PromptInstance&, const GroundTruth* truth) const override {
    if (!truth) return std::nullopt;
    return std::string(sentiment_name(sentiment_class(truth->score)));
  }
};

}  // namespace

std::unique_ptr<ChatModel> make_model(std::string_view spec, const ModelContext& context) {
  const std::string name(spec);
  if (spec.starts_with("mock:")) {
    auto parts = split(spec, ':');
    const std::string& kind = parts.size() > 1 ? parts[1] : std::string();
    auto need_truth = [&] {
      if (!context.truth) throw ConfigError(name + " needs a ground-truth table");
      return context.truth;
    };
    if (kind == "echo" && parts.size() == 2) return std::make_unique<EchoScoreModel>(name, need_truth());
    if (kind == "constant" && parts.size() == 3) {
      return std::make_unique<ConstantModel>(name, parts[2]);
    }
    if (kind == "biased" && parts.size() == 3 && (parts[2] == "tw" || parts[2] == "cn")) {
      return std::make_unique<BiasedModel>(name, need_truth(),
                                           parts[2] == "tw" ? Variety::kTW : Variety::kCN);
    }
    if (kind == "script-biased" && parts.size() == 2) {
      if (!context.tables) throw ConfigError(name + " needs character-set tables");
      return std::make_unique<ScriptBiasedModel>(name, need_truth(), context.tables);
    }
    if (kind == "echo-sentiment" && parts.size() == 2) {
      return std::make_unique<EchoSentimentModel>(name, need_truth());
    }
    throw ConfigError("unknown mock model '" + name + "'");
  }
  for (const auto& e : context.endpoints) {
    if (e.name == spec) return std::make_unique<HttpChatModel>(e);
  }
  throw ConfigError("no endpoint named '" + name + "' (pass --endpoints or use a mock:)");
}

std::vector<EvalItem> eval_items(std::span<const ReviewPair> pairs, PromptVariant variant,
                                 uint64_t seed) {
  std::vector<EvalItem> items;
  items.reserve(pairs.size() * 2);
  for (const auto& p : pairs) {
    for (Side side : {Side::kTW, Side::kCN}) {
      const ReviewRecord& rec = side == Side::kTW ? p.tw : p.cn;
      items.push_back({p.pair_id, side, render(rec, variant, shuffle_seed(seed, p.pair_id, side))});
    }
  }
  return items;
}

std::vector<CompletionResult> run_items(std::span<const EvalItem> items, const ChatModel& model,
                                        int parallelism) {
  if (parallelism < 1) throw std::invalid_argument("parallelism must be >= 1");
  std::vector<CompletionResult> results(items.size());
  const auto n = static_cast<std::ptrdiff_t>(items.size());
#pragma omp parallel for num_threads(parallelism) schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const EvalItem& item = items[static_cast<size_t>(i)];
    CompletionResult r;
    try {
      PromptInstance prompt = item.prompt;
      if (!model.supports_system_role()) prompt.system_text.reset();
      r = model.complete(prompt);
    } catch (const std::exception& e) {
      r = CompletionResult{};
      r.review_ref = item.prompt.review_ref;
      r.model = model.name();
      r.variant = item.prompt.variant;
      r.transport_error = std::string("client: ") + e.what();
    }
    r.pair_id = item.pair_id;
    r.side = item.side;
    results[static_cast<size_t>(i)] = std::move(r);
  }
  std::stable_sort(results.begin(), results.end(), [](const auto& a, const auto& b) {
    return std::tie(a.pair_id, a.side) < std::tie(b.pair_id, b.side);
  });
  return results;
}

std::vector<CompletionResult> run_eval(std::span<const ReviewPair> pairs, const ChatModel& model,
                                       PromptVariant variant, uint64_t seed, int parallelism) {
  auto items = eval_items(pairs, variant, seed);
  return run_items(items, model, parallelism);
}

nlohmann::ordered_json RunManifest::to_json() const {
  nlohmann::ordered_json j;
  j["endpoint"] = endpoint;
  j["variant"] = variant_name(variant);
  j["seed"] = seed;
  j["template_version"] = template_version;
  j["tables_version"] = tables_version;
  j["hash"] = hash();
  return j;
}

std::string RunManifest::hash() const {
  uint64_t h = kFnvOffset;
  for (std::string_view field : {std::string_view(endpoint), variant_name(variant)}) {
    h = fnv1a64(field, h);
    h = fnv1a64("\x1f", h);
  }
  h = fnv1a64(std::to_string(seed), h);
  h = fnv1a64("\x1f", h);
  h = fnv1a64(template_version, h);
  h = fnv1a64("\x1f", h);
  h = fnv1a64(tables_version, h);
  return hex64(h);
}

nlohmann::ordered_json completion_to_json(const CompletionResult& r) {
  nlohmann::ordered_json j;
  j["pair_id"] = r.pair_id;
  j["side"] = side_name(r.side);
  j["review_ref"] = r.review_ref;
  j["model"] = r.model;
  j["variant"] = variant_name(r.variant);
  j["raw_text"] = r.raw_text ? nlohmann::ordered_json(*r.raw_text) : nlohmann::ordered_json(nullptr);
  j["transport_error"] =
      r.transport_error ? nlohmann::ordered_json(*r.transport_error) : nlohmann::ordered_json(nullptr);
  j["latency_ms"] = r.latency_ms;
  j["attempts"] = r.attempt_count;
  return j;
}

CompletionResult completion_from_json(const nlohmann::json& j) {
  try {
    CompletionResult r;
    r.pair_id = j.at("pair_id").get<std::string>();
    r.side = parse_side(j.at("side").get<std::string>());
    r.review_ref = j.at("review_ref").get<std::string>();
    r.model = j.at("model").get<std::string>();
    r.variant = parse_variant(j.at("variant").get<std::string>());
    if (!j.at("raw_text").is_null()) r.raw_text = j["raw_text"].get<std::string>();
    if (!j.at("transport_error").is_null()) r.transport_error = j["transport_error"].get<std::string>();
    if (r.raw_text.has_value() == r.transport_error.has_value()) {
      throw FormatError("exactly one of raw_text and transport_error must be set");
    }
    r.latency_ms = j.value("latency_ms", 0.0);
    r.attempt_count = j.value("attempts", 1);
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed completion: ") + e.what());
  }
}

void write_completions(std::ostream& out, std::span<const CompletionResult> results) {
  for (const auto& r : results) out << completion_to_json(r).dump() << '\n';
}

std::vector<CompletionResult> read_completions(std::istream& in) {
  std::vector<CompletionResult> out;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    try {
      out.push_back(completion_from_json(nlohmann::json::parse(line)));
    } catch (const std::exception& e) {
      throw FormatError(fmt::format("line {}: {}", line_no, e.what()));
    }
  }
  return out;
}

std::vector<CompletionResult> read_completions(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return read_completions(in);
}

}  // namespace varbench
