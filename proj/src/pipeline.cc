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

#include "varbench/pipeline.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "varbench/ingest.h"
#include "varbench/kernels.h"
#include "varbench/llm_client.h"
#include "varbench/predict.h"
#include "varbench/report.h"
#include "varbench/script.h"
#include "varbench/util.h"

namespace fs = std::filesystem;

namespace varbench {

namespace {

std::vector<std::string> split_list(std::string_view value) {
  std::vector<std::string> out;
  for (std::string_view item : split(value, ',')) {
    item = trim(item);
    if (!item.empty()) out.emplace_back(item);
  }
  return out;
}

int64_t parse_int(const std::string& key, const std::string& value) {
  try {
    size_t pos = 0;
    long long v = std::stoll(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config key '" + key + "' expects an integer, got '" + value + "'");
  }
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : ",") + s;
  return out;
}

}  // namespace

void RunConfig::apply(const KeyValueFile& kv, const fs::path& base_dir) {
  auto path_of = [&](const std::string& v) {
    fs::path p(v);
    return p.is_absolute() || base_dir.empty() ? p : base_dir / p;
  };
  for (const auto& [key, value] : kv.values()) {
    if (key == "input") {
      input = path_of(value);
    } else if (key == "field_map") {
      field_map = path_of(value);
    } else if (key == "charsets") {
      charsets = path_of(value);
    } else if (key == "endpoints") {
      endpoints = path_of(value);
    } else if (key == "output_dir") {
      output_dir = path_of(value);
    } else if (key == "seed") {
      seed = static_cast<uint64_t>(parse_int(key, value));
    } else if (key == "negative_max") {
      classes.negative_max = static_cast<int>(parse_int(key, value));
    } else if (key == "neutral_max") {
      classes.neutral_max = static_cast<int>(parse_int(key, value));
    } else if (key == "bin_width") {
      lengths.bin_width = parse_int(key, value);
    } else if (key == "max_len") {
      lengths.max_len = parse_int(key, value);
    } else if (key == "short_max") {
      lengths.short_max = parse_int(key, value);
    } else if (key == "parallelism") {
      parallelism = static_cast<int>(parse_int(key, value));
    } else if (key == "translator") {
      translator = value;
    } else if (key == "models") {
      models = split_list(value);
    } else if (key == "variants") {
      variants.clear();
      for (const auto& v : split_list(value)) variants.push_back(parse_variant(v));
    } else if (key == "subsets") {
      subsets.clear();
      for (const auto& v : split_list(value)) subsets.push_back(parse_subset(v));
    } else if (key == "mt_directions") {
      mt_directions.clear();
      for (const auto& v : split_list(value)) mt_directions.push_back(parse_direction(v));
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
}

RunConfig RunConfig::load(const fs::path& path) {
  RunConfig config;
  config.apply(KeyValueFile::load(path), path.parent_path());
  return config;
}

void RunConfig::validate() const {
  if (input.empty()) throw ConfigError("no input file configured");
  if (models.empty()) throw ConfigError("no models configured");
  if (variants.empty()) throw ConfigError("no prompt variants configured");
  if (subsets.empty()) throw ConfigError("no subsets configured");
  if (parallelism < 1) throw ConfigError("parallelism must be >= 1");
  if (lengths.bin_width < 1 || lengths.max_len < 1 || lengths.short_max < 1) {
    throw ConfigError("length parameters must be positive");
  }
  if (!(1 <= classes.negative_max && classes.negative_max < classes.neutral_max &&
        classes.neutral_max < 10)) {
    throw ConfigError("class boundaries must satisfy 1 <= negative_max < neutral_max < 10");
  }
}

std::string artifact_stem(std::string_view name) {
  std::string out;
  for (char c : name) {
    const bool keep = std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == '.';
    out += keep ? c : '_';
  }
  return out;
}

namespace {

constexpr std::string_view kCacheName = "translation_cache.jsonl";

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string file_hash(const fs::path& path) { return hex64(fnv1a64(read_file(path))); }

void write_file(const fs::path& path, std::string_view content) {
  fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out << content;
    if (!out) throw IoError("write failed for " + tmp.string());
  }
  fs::rename(tmp, path);
}

// One stage's bookkeeping. Paths are recorded relative to the output
// directory when they live under it.
class Stage {
 public:
  Stage(const fs::path& root, std::string name, nlohmann::ordered_json params,
        std::vector<fs::path> inputs, std::vector<fs::path> outputs)
      : root_(root),
        name_(std::move(name)),
        params_(std::move(params)),
        inputs_(std::move(inputs)),
        outputs_(std::move(outputs)) {}

  const std::string& name() const { return name_; }
  fs::path manifest_path() const { return root_ / "manifests" / (name_ + ".json"); }

  std::string key() const {
    if (!key_.empty()) return key_;
    uint64_t h = fnv1a64(name_);
    h = fnv1a64(params_.dump(), h);
    for (const auto& in : inputs_) {
      h = fnv1a64(display(in), h);
      h = fnv1a64(file_hash(in), h);
    }
    key_ = hex64(h);
    return key_;
  }

  bool up_to_date() const {
    if (!fs::exists(manifest_path())) return false;
    auto j = nlohmann::json::parse(read_file(manifest_path()), nullptr, false);
    if (!j.is_object() || j.value("key", "") != key()) return false;
    if (!j.contains("outputs") || j["outputs"].size() != outputs_.size()) return false;
    for (size_t i = 0; i < outputs_.size(); ++i) {
      if (!fs::exists(outputs_[i])) return false;
      if (j["outputs"][i].value("hash", "") != file_hash(outputs_[i])) return false;
    }
    return true;
  }

  void commit() const {
    nlohmann::ordered_json j;
    j["stage"] = name_;
    j["key"] = key();
    j["params"] = params_;
    j["inputs"] = nlohmann::ordered_json::array();
    for (const auto& in : inputs_) {
      j["inputs"].push_back({{"path", display(in)}, {"hash", file_hash(in)}});
    }
    j["outputs"] = nlohmann::ordered_json::array();
    for (const auto& out : outputs_) {
      j["outputs"].push_back({{"path", display(out)}, {"hash", file_hash(out)}});
    }
    write_file(manifest_path(), j.dump(2) + "\n");
  }

 private:
  std::string display(const fs::path& p) const {
    auto rel = p.lexically_relative(root_);
    if (!rel.empty() && *rel.begin() != "..") return rel.generic_string();
    return p.generic_string();
  }

  fs::path root_;
  std::string name_;
  nlohmann::ordered_json params_;
  std::vector<fs::path> inputs_;
  std::vector<fs::path> outputs_;
  mutable std::string key_;
};

template <typename Fn>
void run_stage(const Stage& stage, PipelineResult& result, Fn&& body) {
  try {
    if (stage.up_to_date()) {
      result.stages_skipped.push_back(stage.name());
      return;
    }
    body();
    stage.commit();
    result.stages_run.push_back(stage.name());
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError(stage.name(), e.what());
  }
}

std::string gap_csv(std::span<const GapReportRow> rows) {
  std::ostringstream out;
  write_gap_csv(out, rows);
  return out.str();
}

std::vector<GapReportRow> load_gap_csv(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return read_gap_csv(in);
}

BucketDistribution load_distribution(const fs::path& path) {
  std::istringstream in(read_file(path));
  BucketDistribution d;
  std::string line;
  std::getline(in, line);  // header
  size_t b = 0;
  while (std::getline(in, line) && b < kNumScriptBuckets) {
    auto comma2 = line.rfind(',');
    auto comma1 = line.rfind(',', comma2 - 1);
    d.tw[b] = std::stoull(line.substr(comma1 + 1, comma2 - comma1 - 1));
    d.cn[b] = std::stoull(line.substr(comma2 + 1));
    d.tw_total += d.tw[b];
    d.cn_total += d.cn[b];
    ++b;
  }
  return d;
}

}  // namespace

std::string bundle_hash(const fs::path& dir) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    if (entry.path().filename() == kCacheName || entry.path().filename() == "bundle_hash.txt") {
      continue;
    }
    files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end(), [&](const fs::path& a, const fs::path& b) {
    return a.lexically_relative(dir).generic_string() < b.lexically_relative(dir).generic_string();
  });
  uint64_t h = kFnvOffset;
  for (const auto& f : files) {
    h = fnv1a64(f.lexically_relative(dir).generic_string(), h);
    h = fnv1a64(std::string_view("\0", 1), h);
    h = fnv1a64(read_file(f), h);
  }
  return hex64(h);
}

PipelineResult run_pipeline(const RunConfig& config) {
  try {
    config.validate();
  } catch (const std::exception& e) {
    throw StageError("config", e.what());
  }
  PipelineResult result;
  const fs::path root = config.output_dir;
  fs::create_directories(root / "manifests");

  const fs::path records_path = root / "records.jsonl";
  const fs::path rejects_path = root / "rejects.jsonl";
  const fs::path ingest_summary = root / "ingest_summary.json";
  const fs::path histogram_path = root / "length_histogram.csv";
  const fs::path profiles_path = root / "script_profiles.jsonl";
  const fs::path distribution_path = root / "script_distribution.csv";
  const fs::path pairs_path = root / "pairs.jsonl";
  const fs::path pair_summary = root / "pair_summary.json";
  const fs::path rows_path = root / "gap_rows.csv";

  // ---- ingest
  {
    std::vector<fs::path> inputs{config.input};
    nlohmann::ordered_json params = {{"field_map", "default"}};
    if (config.field_map) {
      inputs.push_back(*config.field_map);
      params["field_map"] = "file";
    }
    Stage stage(root, "ingest", params, inputs, {records_path, rejects_path, ingest_summary});
    run_stage(stage, result, [&] {
      FieldMap fields = config.field_map ? FieldMap::load(*config.field_map) : FieldMap{};
      std::ifstream in(config.input, std::ios::binary);
      if (!in) throw IoError("cannot open " + config.input.string());
      ParseResult parsed = parse_records(in, fields);
      std::vector<ReviewRecord> nonempty = filter_nonempty(parsed.records);
      VarietySplit split = filter_varieties(nonempty);
      std::vector<ReviewRecord> kept;
      for (const auto& r : nonempty) {
        if (r.variety != Variety::kOther) kept.push_back(r);
      }
      std::ostringstream records;
      write_records(records, kept);
      write_file(records_path, records.str());
      std::string rejects;
      for (const auto& r : parsed.rejected) {
        nlohmann::ordered_json j;
        j["line"] = r.line;
        j["reason"] = r.reason;
        rejects += j.dump() + "\n";
      }
      write_file(rejects_path, rejects);
      nlohmann::ordered_json summary;
      summary["lines"] = parsed.lines;
      summary["parsed"] = parsed.records.size();
      summary["rejected"] = parsed.rejected.size();
      summary["skipped"] = parsed.skipped;
      summary["empty_text"] = parsed.records.size() - nonempty.size();
      summary["other_variety"] = split.excluded;
      summary["tw"] = split.tw.size();
      summary["cn"] = split.cn.size();
      write_file(ingest_summary, summary.dump(2) + "\n");
    });
  }

  auto load_split = [&] {
    std::vector<ReviewRecord> records = read_records(records_path);
    return filter_varieties(records);
  };

  // ---- stats
  {
    nlohmann::ordered_json params = {{"bin_width", config.lengths.bin_width},
                                     {"max_len", config.lengths.max_len}};
    Stage stage(root, "stats", params, {records_path}, {histogram_path});
    run_stage(stage, result, [&] {
      VarietySplit split = load_split();
      auto tw = kernels::omp::length_histogram(split.tw, config.lengths);
      auto cn = kernels::omp::length_histogram(split.cn, config.lengths);
      std::string csv = "bin,range,tw,cn\n";
      for (size_t b = 0; b < tw.counts.size(); ++b) {
        const int64_t lo = static_cast<int64_t>(b) * config.lengths.bin_width + 1;
        csv += fmt::format("{},{}-{},{},{}\n", b, lo, lo + config.lengths.bin_width - 1,
                           tw.counts[b], cn.counts[b]);
      }
      csv += fmt::format("over_cap,>{},{},{}\n", config.lengths.max_len, tw.over_cap, cn.over_cap);
      write_file(histogram_path, csv);
    });
  }

  // ---- classify
  std::optional<CharSetTables> tables;
  auto get_tables = [&]() -> const CharSetTables& {
    if (!tables) tables = CharSetTables::load(config.charsets.value_or(default_tables_dir()));
    return *tables;
  };
  try {
    get_tables();
  } catch (const std::exception& e) {
    throw StageError("classify", e.what());
  }
  {
    nlohmann::ordered_json params = {{"tables_version", get_tables().version()}};
    Stage stage(root, "classify", params, {records_path}, {profiles_path, distribution_path});
    run_stage(stage, result, [&] {
      std::vector<ReviewRecord> records = read_records(records_path);
      auto profiles = kernels::omp::profile_records(records, get_tables());
      std::string out;
      for (size_t i = 0; i < records.size(); ++i) {
        nlohmann::ordered_json j;
        j["record_id"] = records[i].record_id;
        j["variety"] = variety_name(records[i].variety);
        j["bucket"] = bucket_label(profiles[i].bucket);
        j["categories"] = nlohmann::ordered_json::array();
        for (size_t c = 0; c < kNumCharCategories; ++c) {
          if (profiles[i].has(static_cast<CharCategory>(c))) {
            j["categories"].push_back(category_name(static_cast<CharCategory>(c)));
          }
        }
        out += j.dump() + "\n";
      }
      write_file(profiles_path, out);
      VarietySplit split = filter_varieties(records);
      std::ostringstream csv;
      write_distribution_csv(csv, bucket_distribution(split.tw, split.cn, get_tables()));
      write_file(distribution_path, csv.str());
    });
  }

  // ---- pair
  {
    nlohmann::ordered_json params = {{"seed", config.seed},
                                     {"negative_max", config.classes.negative_max},
                                     {"neutral_max", config.classes.neutral_max},
                                     {"bin_width", config.lengths.bin_width},
                                     {"max_len", config.lengths.max_len}};
    Stage stage(root, "pair", params, {records_path}, {pairs_path, pair_summary});
    run_stage(stage, result, [&] {
      VarietySplit split = load_split();
      PairingConfig pc;
      pc.seed = config.seed;
      pc.lengths = config.lengths;
      pc.classes = config.classes;
      PairingResult pr = build_pairs(split.tw, split.cn, pc);
      std::ostringstream out;
      write_pairs(out, pr.pairs);
      write_file(pairs_path, out.str());
      nlohmann::ordered_json s;
      s["pairs"] = pr.pairs.size();
      s["buckets"] = pr.buckets;
      s["excluded_tw"] = pr.excluded_tw;
      s["excluded_cn"] = pr.excluded_cn;
      s["unpaired_tw"] = pr.unpaired_tw;
      s["unpaired_cn"] = pr.unpaired_cn;
      TTest t = score_difference_test(pr.pairs);
      s["score_diff_mean"] = t.mean;
      s["score_diff_t"] = std::isfinite(t.t) ? nlohmann::json(t.t) : nlohmann::json(nullptr);
      s["score_diff_df"] = t.df;
      s["score_diff_p"] = t.p;
      write_file(pair_summary, s.dump(2) + "\n");
    });
  }

  std::optional<std::vector<ReviewPair>> pairs_cache;
  auto pairs = [&]() -> const std::vector<ReviewPair>& {
    if (!pairs_cache) pairs_cache = read_pairs(pairs_path);
    return *pairs_cache;
  };
  std::vector<ModelEndpoint> endpoints;
  if (config.endpoints) {
    try {
      endpoints = load_endpoints(*config.endpoints);
    } catch (const std::exception& e) {
      throw StageError("eval", e.what());
    }
  }
  std::optional<TruthTable> truth;
  auto make = [&](const std::string& spec) {
    if (!truth) truth = truth_from_pairs(pairs());
    ModelContext ctx{&*truth, &get_tables(), endpoints};
    return make_model(spec, ctx);
  };
  auto endpoint_params = [&](const std::string& spec) {
    nlohmann::ordered_json j = nullptr;
    for (const auto& e : endpoints) {
      if (e.name == spec) {
        j = {{"base_url", e.base_url},
             {"model", e.model},
             {"supports_system_role", e.supports_system_role},
             {"send_temperature", e.send_temperature}};
      }
    }
    return j;
  };

  // ---- eval + validate
  std::vector<std::pair<std::string, PromptVariant>> runs;
  std::vector<fs::path> outcome_paths;
  for (const auto& model : config.models) {
    for (PromptVariant variant : config.variants) {
      runs.emplace_back(model, variant);
      const std::string stem = artifact_stem(model) + "." + std::string(variant_name(variant));
      const fs::path completions = root / "completions" / (stem + ".jsonl");
      const fs::path outcomes = root / "outcomes" / (stem + ".jsonl");
      RunManifest manifest{model, variant, config.seed, templates::version(),
                           get_tables().version()};
      nlohmann::ordered_json params = manifest.to_json();
      params["endpoint_config"] = endpoint_params(model);
      Stage eval(root, "eval." + stem, params, {pairs_path}, {completions});
      run_stage(eval, result, [&] {
        auto model_ptr = make(model);
        auto results = run_eval(pairs(), *model_ptr, variant, config.seed, config.parallelism);
        std::ostringstream out;
        write_completions(out, results);
        write_file(completions, out.str());
      });
      Stage validate(root, "validate." + stem, nlohmann::ordered_json::object(), {completions},
                     {outcomes});
      run_stage(validate, result, [&] {
        auto completed = read_completions(completions);
        std::ostringstream out;
        write_outcomes(out, outcomes_from(completed));
        write_file(outcomes, out.str());
      });
      outcome_paths.push_back(outcomes);
    }
  }

  // ---- metrics
  {
    nlohmann::ordered_json params;
    params["short_max"] = config.lengths.short_max;
    params["subsets"] = nlohmann::ordered_json::array();
    for (Subset s : config.subsets) params["subsets"].push_back(subset_name(s));
    params["tables_version"] = get_tables().version();
    std::vector<fs::path> inputs{pairs_path};
    inputs.insert(inputs.end(), outcome_paths.begin(), outcome_paths.end());
    Stage stage(root, "metrics", params, inputs, {rows_path});
    run_stage(stage, result, [&] {
      std::vector<GapReportRow> rows;
      for (size_t i = 0; i < runs.size(); ++i) {
        auto outcomes = read_outcomes(outcome_paths[i]);
        auto scored = score_pairs(pairs(), outcomes, get_tables(), config.lengths.short_max);
        auto part = gap_rows(runs[i].first, runs[i].second, scored, config.subsets);
        rows.insert(rows.end(), part.begin(), part.end());
      }
      write_file(rows_path, gap_csv(rows));
    });
    result.rows = load_gap_csv(rows_path);
  }

  // ---- mt
  std::vector<fs::path> mt_paths;
  if (!config.mt_directions.empty()) {
    std::unique_ptr<Translator> inner;
    std::unique_ptr<CachingTranslator> translator;
    for (TranslationDirection dir : config.mt_directions) {
      for (const auto& [model, variant] : runs) {
        const std::string stem = std::string(direction_name(dir)) + "." + artifact_stem(model) +
                                 "." + std::string(variant_name(variant));
        const fs::path out_path = root / "mt" / (stem + ".csv");
        RunManifest manifest{model, variant, config.seed, templates::version(),
                             get_tables().version()};
        nlohmann::ordered_json params = manifest.to_json();
        params["endpoint_config"] = endpoint_params(model);
        params["translator"] = config.translator;
        params["direction"] = direction_name(dir);
        params["short_max"] = config.lengths.short_max;
        Stage stage(root, "mt." + stem, params, {pairs_path}, {out_path});
        run_stage(stage, result, [&] {
          if (!translator) {
            inner = make_translator(config.translator);
            fs::create_directories(root / "mt");
            translator = std::make_unique<CachingTranslator>(*inner, root / "mt" / kCacheName);
          }
          auto model_ptr = make(model);
          MtRunOptions options{config.seed, config.parallelism, config.lengths.short_max};
          MtResult mt = mt_gap_rows(pairs(), dir, *translator, *model_ptr, variant, options);
          write_file(out_path, gap_csv(mt.rows));
        });
        mt_paths.push_back(out_path);
        auto rows = load_gap_csv(out_path);
        result.mt_rows.insert(result.mt_rows.end(), rows.begin(), rows.end());
      }
    }
  }

  // ---- report
  {
    const fs::path md_path = root / "report.md";
    const fs::path csv_path = root / "report.csv";
    const fs::path validity_path = root / "validity.csv";
    const fs::path mt_csv_path = root / "mt_report.csv";
    std::vector<fs::path> inputs{rows_path, distribution_path, pair_summary, ingest_summary};
    inputs.insert(inputs.end(), outcome_paths.begin(), outcome_paths.end());
    inputs.insert(inputs.end(), mt_paths.begin(), mt_paths.end());
    // Upstream manifests are inputs too, so the report cites every stage key.
    for (const auto& entry : fs::directory_iterator(root / "manifests")) {
      if (entry.path().filename() != "report.json") inputs.push_back(entry.path());
    }
    std::sort(inputs.begin() + 4 + static_cast<std::ptrdiff_t>(outcome_paths.size() + mt_paths.size()),
              inputs.end());
    std::vector<fs::path> outputs{md_path, csv_path, validity_path};
    if (!mt_paths.empty()) outputs.push_back(mt_csv_path);
    Stage stage(root, "report", nlohmann::ordered_json::object(), inputs, outputs);
    run_stage(stage, result, [&] {
      std::vector<ValidityRow> validity;
      for (size_t i = 0; i < runs.size(); ++i) {
        auto outcomes = read_outcomes(outcome_paths[i]);
        validity.push_back(
            validity_row(runs[i].first, std::string(variant_name(runs[i].second)), outcomes));
      }
      auto ingest = nlohmann::json::parse(read_file(ingest_summary));
      auto paired = nlohmann::json::parse(read_file(pair_summary));
      std::ostringstream md;
      md << "# varbench report\n\n";
      md << "| | |\n|---|---|\n";
      md << "| Input lines | " << ingest["lines"].get<size_t>() << " |\n";
      md << "| TW / CN reviews | " << ingest["tw"].get<size_t>() << " / "
         << ingest["cn"].get<size_t>() << " |\n";
      md << "| Pairs | " << paired["pairs"].get<size_t>() << " |\n";
      md << "| Seed | " << config.seed << " |\n";
      md << "| Models | " << join(config.models) << " |\n";
      md << "| Template version | " << templates::version() << " |\n";
      md << "| Tables version | " << get_tables().version() << " |\n\n";
      write_gap_markdown(md, result.rows, "Prediction gap");
      if (!result.mt_rows.empty()) {
        md << "\n";
        write_gap_markdown(md, result.mt_rows, "Original vs machine-translated");
      }
      md << "\n";
      write_distribution_markdown(md, load_distribution(distribution_path));
      md << "\n";
      write_validity_markdown(md, validity);
      md << "\n## Upstream manifests\n\n";
      for (const auto& entry : inputs) {
        if (entry.parent_path() != root / "manifests") continue;
        auto j = nlohmann::json::parse(read_file(entry));
        md << "- " << j["stage"].get<std::string>() << ": " << j["key"].get<std::string>() << "\n";
      }
      write_file(md_path, md.str());
      write_file(csv_path, gap_csv(result.rows));
      std::ostringstream vcsv;
      write_validity_csv(vcsv, validity);
      write_file(validity_path, vcsv.str());
      if (!mt_paths.empty()) write_file(mt_csv_path, gap_csv(result.mt_rows));
    });
  }

  result.bundle_hash = bundle_hash(root);
  write_file(root / "bundle_hash.txt", result.bundle_hash + "\n");
  return result;
}

}  // namespace varbench
