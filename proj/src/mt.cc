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

#include "varbench/mt.h"

#include <fstream>
#include <thread>

#include <fmt/format.h>

#include "varbench/http.h"
#include "varbench/ingest.h"
#include "varbench/kvfile.h"
#include "varbench/util.h"

namespace varbench {

std::string_view direction_name(TranslationDirection d) {
  return d == TranslationDirection::kTwToCn ? "tw2cn" : "cn2tw";
}

TranslationDirection parse_direction(std::string_view name) {
  if (name == "tw2cn" || name == "TW_to_CN") return TranslationDirection::kTwToCn;
  if (name == "cn2tw" || name == "CN_to_TW") return TranslationDirection::kCnToTw;
  throw FormatError("unknown translation direction '" + std::string(name) + "'");
}

Side source_side(TranslationDirection d) {
  return d == TranslationDirection::kTwToCn ? Side::kTW : Side::kCN;
}

namespace {

constexpr std::pair<char32_t, char32_t> kCharMap[] = {
    {U'機', U'机'}, {U'場', U'场'}, {U'這', U'这'}, {U'們', U'们'}, {U'個', U'个'},
    {U'來', U'来'}, {U'時', U'时'}, {U'實', U'实'}, {U'對', U'对'}, {U'會', U'会'},
    {U'說', U'说'}, {U'進', U'进'}, {U'還', U'还'}, {U'點', U'点'}, {U'間', U'间'},
    {U'電', U'电'}, {U'車', U'车'}, {U'門', U'门'}, {U'開', U'开'}, {U'關', U'关'},
    {U'樓', U'楼'}, {U'廳', U'厅'}, {U'飯', U'饭'}, {U'體', U'体'}, {U'環', U'环'},
    {U'衛', U'卫'}, {U'淨', U'净'}, {U'親', U'亲'}, {U'價', U'价'}, {U'錢', U'钱'},
    {U'務', U'务'}, {U'員', U'员'}, {U'熱', U'热'}, {U'氣', U'气'}, {U'燈', U'灯'},
    {U'幣', U'币'}, {U'滿', U'满'}, {U'讓', U'让'}, {U'過', U'过'}, {U'邊', U'边'},
    {U'從', U'从'}, {U'書', U'书'}, {U'覺', U'觉'}, {U'視', U'视'}, {U'頭', U'头'},
    {U'歡', U'欢'}, {U'貼', U'贴'}, {U'館', U'馆'}, {U'區', U'区'}, {U'錯', U'错'},
};

}  // namespace

CharMapTranslator::CharMapTranslator() {
  for (const auto& [trad, simp] : kCharMap) {
    to_cn_[trad] = simp;
    to_tw_[simp] = trad;
  }
}

std::span<const std::pair<char32_t, char32_t>> CharMapTranslator::entries() { return kCharMap; }

std::optional<std::string> CharMapTranslator::translate(std::string_view text,
                                                        TranslationDirection direction) const {
  const auto& map = direction == TranslationDirection::kTwToCn ? to_cn_ : to_tw_;
  std::string out;
  out.reserve(text.size());
  for (char32_t c : decode_utf8(text)) {
    auto it = map.find(c);
    append_utf8(out, it == map.end() ? c : it->second);
  }
  return out;
}

HttpTranslator::HttpTranslator(Options options) : options_(std::move(options)) {
  http::parse_url(options_.url);  // validate early
}

std::optional<std::string> HttpTranslator::translate(std::string_view text,
                                                     TranslationDirection direction) const {
  http::Url url = http::parse_url(options_.url);
  std::string path;
  if (const char* key = std::getenv(options_.api_key_env_var.c_str()); key && *key) {
    path = std::string("?key=") + key;
  }
  const bool to_cn = direction == TranslationDirection::kTwToCn;
  nlohmann::json body = {{"q", std::string(text)},
                         {"source", to_cn ? "zh-TW" : "zh-CN"},
                         {"target", to_cn ? "zh-CN" : "zh-TW"},
                         {"format", "text"}};
  auto backoff = options_.backoff;
  for (int attempt = 0; attempt <= options_.max_retries; ++attempt) {
    auto res = http::post_json(url, path, body.dump(), {}, options_.timeout);
    if (res.response && res.response->status >= 200 && res.response->status < 300) {
      auto j = nlohmann::json::parse(res.response->body, nullptr, false);
      try {
        return j.at("data").at("translations").at(0).at("translatedText").get<std::string>();
      } catch (const nlohmann::json::exception&) {
        return std::nullopt;
      }
    }
    bool retryable = !res.response || res.response->status == 429 || res.response->status >= 500;
    if (!retryable) return std::nullopt;
    if (attempt < options_.max_retries) {
      std::this_thread::sleep_for(backoff);
      backoff *= 2;
    }
  }
  return std::nullopt;
}

namespace {
std::string cache_key(std::string_view hash, std::string_view direction) {
  return std::string(hash) + "/" + std::string(direction);
}
}  // namespace

CachingTranslator::CachingTranslator(const Translator& inner,
                                     std::optional<std::filesystem::path> cache_file)
    : inner_(inner), cache_file_(std::move(cache_file)) {
  if (!cache_file_ || !std::filesystem::exists(*cache_file_)) return;
  std::ifstream in(*cache_file_, std::ios::binary);
  std::string line;
  while (std::getline(in, line)) {
    auto j = nlohmann::json::parse(line, nullptr, false);
    if (!j.is_object()) continue;  // tolerate a torn final line
    try {
      cache_[cache_key(j.at("hash").get<std::string>(), j.at("direction").get<std::string>())] =
          j.at("output").get<std::string>();
    } catch (const nlohmann::json::exception&) {
    }
  }
}

std::optional<std::string> CachingTranslator::translate(std::string_view text,
                                                        TranslationDirection direction) const {
  const std::string hash = hex64(fnv1a64(text));
  const std::string key = cache_key(hash, direction_name(direction));
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) {
      ++hits_;
      return it->second;
    }
  }
  auto out = inner_.translate(text, direction);
  std::lock_guard<std::mutex> lock(mu_);
  ++misses_;
  if (!out) return out;
  if (cache_.emplace(key, *out).second && cache_file_) {
    std::ofstream file(*cache_file_, std::ios::binary | std::ios::app);
    nlohmann::ordered_json j;
    j["hash"] = hash;
    j["direction"] = direction_name(direction);
    j["output"] = *out;
    file << j.dump() << '\n';
  }
  return out;
}

size_t CachingTranslator::hits() const {
  std::lock_guard<std::mutex> lock(mu_);
  return hits_;
}

size_t CachingTranslator::misses() const {
  std::lock_guard<std::mutex> lock(mu_);
  return misses_;
}

std::unique_ptr<Translator> make_translator(std::string_view spec) {
  if (spec == "mock:identity") return std::make_unique<IdentityTranslator>();
  if (spec == "mock:charmap") return std::make_unique<CharMapTranslator>();
  if (spec.starts_with("http://") || spec.starts_with("https://")) {
    HttpTranslator::Options options;
    options.url = std::string(spec);
    return std::make_unique<HttpTranslator>(options);
  }
  throw ConfigError("unknown translator '" + std::string(spec) + "'");
}

TranslatedCorpus translate_corpus(std::span<const ReviewRecord> records, TranslationDirection direction,
                                  const Translator& translator, int parallelism) {
  if (parallelism < 1) throw std::invalid_argument("parallelism must be >= 1");
  std::vector<std::optional<TranslatedRecord>> slots(records.size());
  const auto n = static_cast<std::ptrdiff_t>(records.size());
#pragma omp parallel for num_threads(parallelism) schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const ReviewRecord& src = records[static_cast<size_t>(i)];
    TranslatedRecord out{src, direction};
    bool ok = true;
    for (auto* part : {&out.record.title, &out.record.positive, &out.record.negative}) {
      if (!*part || is_blank(**part)) continue;
      std::optional<std::string> t;
      try {
        t = translator.translate(**part, direction);
      } catch (const std::exception&) {
        t.reset();
      }
      if (!t) {
        ok = false;
        break;
      }
      *part = std::move(*t);
    }
    if (ok) slots[static_cast<size_t>(i)] = std::move(out);
  }
  TranslatedCorpus corpus;
  for (size_t i = 0; i < slots.size(); ++i) {
    if (slots[i]) {
      corpus.records.push_back(std::move(*slots[i]));
    } else {
      corpus.dropped.push_back(records[i].record_id);
    }
  }
  return corpus;
}

nlohmann::ordered_json translated_to_json(const TranslatedRecord& r) {
  nlohmann::ordered_json j = record_to_json(r.record);
  j["translated"] = true;
  j["direction"] = direction_name(r.direction);
  return j;
}

MtResult mt_gap_rows(std::span<const ReviewPair> pairs, TranslationDirection direction,
                     const Translator& translator, const ChatModel& model, PromptVariant variant,
                     const MtRunOptions& options) {
  const Side origin = source_side(direction);
  const Side target = origin == Side::kTW ? Side::kCN : Side::kTW;
  std::vector<ReviewRecord> sources;
  sources.reserve(pairs.size());
  for (const auto& p : pairs) sources.push_back(origin == Side::kTW ? p.tw : p.cn);
  TranslatedCorpus corpus = translate_corpus(sources, direction, translator, options.parallelism);

  std::unordered_map<std::string, const ReviewRecord*> translated;
  for (const auto& t : corpus.records) translated[t.record.record_id] = &t.record;

  // The translated copy keeps the origin's shuffle seed so that an identity
  // translation renders byte-identical prompts.
  std::vector<EvalItem> originals;
  std::vector<EvalItem> copies;
  std::vector<const ReviewPair*> kept;
  for (size_t i = 0; i < pairs.size(); ++i) {
    auto it = translated.find(sources[i].record_id);
    if (it == translated.end()) continue;
    const ReviewPair& p = pairs[i];
    uint64_t s = shuffle_seed(options.seed, p.pair_id, origin);
    originals.push_back({p.pair_id, origin, render(sources[i], variant, s)});
    copies.push_back({p.pair_id, target, render(*it->second, variant, s)});
    kept.push_back(&p);
  }
  auto res_orig = run_items(originals, model, options.parallelism);
  auto res_copy = run_items(copies, model, options.parallelism);

  MtResult result;
  result.dropped_translations = corpus.dropped.size();
  result.issued = res_orig.size() + res_copy.size();

  std::unordered_map<std::string, PredictionOutcome> orig_by_pair;
  std::unordered_map<std::string, PredictionOutcome> copy_by_pair;
  for (const auto& r : res_orig) orig_by_pair[r.pair_id] = outcome_from(r);
  for (const auto& r : res_copy) copy_by_pair[r.pair_id] = outcome_from(r);

  std::vector<ScoredPair> scored;
  for (const ReviewPair* p : kept) {
    const auto& o = orig_by_pair.at(p->pair_id);
    const auto& c = copy_by_pair.at(p->pair_id);
    result.valid += o.valid() + c.valid();
    if (!o.valid() || !c.valid()) continue;
    const ReviewRecord& src = origin == Side::kTW ? p->tw : p->cn;
    ScoredPair s;
    s.pair_id = p->pair_id;
    s.truth_tw = s.truth_cn = round_score(src.score);
    s.pred_tw = origin == Side::kTW ? *o.score : *c.score;
    s.pred_cn = origin == Side::kTW ? *c.score : *o.score;
    s.group = length_group(review_length(src), options.short_max);
    scored.push_back(s);
  }
  result.complete_items = scored.size();
  const Subset all[] = {Subset::kAll};
  result.rows = gap_rows(model.name(), variant, scored, all);
  for (auto& row : result.rows) row.origin = std::string(side_name(origin));
  return result;
}

}  // namespace varbench
