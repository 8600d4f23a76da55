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

// varbench command-line front end. Each subcommand wraps one pipeline stage;
// `run` executes all of them from a config file.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "varbench/ingest.h"
#include "varbench/kernels.h"
#include "varbench/llm_client.h"
#include "varbench/metrics.h"
#include "varbench/mt.h"
#include "varbench/pairing.h"
#include "varbench/pipeline.h"
#include "varbench/predict.h"
#include "varbench/prompt.h"
#include "varbench/report.h"
#include "varbench/script.h"
#include "varbench/sweep.h"

namespace fs = std::filesystem;
using namespace varbench;

namespace {

std::ofstream open_out(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  return out;
}

std::ifstream open_in(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return in;
}

CharSetTables load_tables(const std::string& dir) {
  return CharSetTables::load(dir.empty() ? default_tables_dir() : fs::path(dir));
}

std::vector<ModelEndpoint> load_endpoint_file(const std::string& path) {
  return path.empty() ? std::vector<ModelEndpoint>{} : load_endpoints(path);
}

struct Options {
  std::string input, output, records, pairs, completions, outcomes, charsets, endpoints, field_map;
  std::string rejects, distribution, model = "mock:echo", variant = "plain", subset = "All";
  std::string direction = "tw2cn", translator = "mock:identity", cache, format = "markdown";
  std::string config, title = "Prediction gap", translated_out, manifest;
  std::vector<std::string> row_files, models, variants, subsets, mt_directions;
  uint64_t seed = 0;
  int negative_max = 3, neutral_max = 7, parallelism = 4;
  int64_t bin_width = 10, max_len = 500, short_max = 49;
  size_t quota = 200;
};

int cmd_ingest(const Options& o) {
  FieldMap fields = o.field_map.empty() ? FieldMap{} : FieldMap::load(o.field_map);
  auto in = open_in(o.input);
  ParseResult parsed = parse_records(in, fields);
  auto nonempty = filter_nonempty(parsed.records);
  VarietySplit split = filter_varieties(nonempty);
  std::vector<ReviewRecord> kept;
  for (const auto& r : nonempty) {
    if (r.variety != Variety::kOther) kept.push_back(r);
  }
  auto out = open_out(o.output);
  write_records(out, kept);
  if (!o.rejects.empty()) {
    auto rej = open_out(o.rejects);
    for (const auto& r : parsed.rejected) {
      rej << nlohmann::ordered_json{{"line", r.line}, {"reason", r.reason}}.dump() << '\n';
    }
  }
  fmt::print("lines={} parsed={} rejected={} skipped={} empty={} other={} tw={} cn={}\n",
             parsed.lines, parsed.records.size(), parsed.rejected.size(), parsed.skipped,
             parsed.records.size() - nonempty.size(), split.excluded, split.tw.size(),
             split.cn.size());
  return 0;
}

int cmd_stats(const Options& o) {
  auto records = read_records(o.records);
  VarietySplit split = filter_varieties(records);
  LengthConfig lc{o.bin_width, o.max_len, o.short_max};
  auto tw = kernels::omp::length_histogram(split.tw, lc);
  auto cn = kernels::omp::length_histogram(split.cn, lc);
  std::ostringstream csv;
  csv << "bin,range,tw,cn\n";
  for (size_t b = 0; b < tw.counts.size(); ++b) {
    const int64_t lo = static_cast<int64_t>(b) * o.bin_width + 1;
    csv << fmt::format("{},{}-{},{},{}\n", b, lo, lo + o.bin_width - 1, tw.counts[b], cn.counts[b]);
  }
  csv << fmt::format("over_cap,>{},{},{}\n", o.max_len, tw.over_cap, cn.over_cap);
  if (o.output.empty()) {
    std::cout << csv.str();
  } else {
    open_out(o.output) << csv.str();
  }
  size_t short_tw = 0, short_cn = 0;
  for (const auto& r : split.tw) short_tw += review_length(r) <= o.short_max;
  for (const auto& r : split.cn) short_cn += review_length(r) <= o.short_max;
  std::cerr << fmt::format("short (<= {}): tw={} cn={}\n", o.short_max, short_tw, short_cn);
  return 0;
}

int cmd_classify(const Options& o) {
  CharSetTables tables = load_tables(o.charsets);
  auto records = read_records(o.records);
  auto profiles = kernels::omp::profile_records(records, tables);
  if (!o.output.empty()) {
    auto out = open_out(o.output);
    for (size_t i = 0; i < records.size(); ++i) {
      nlohmann::ordered_json j;
      j["record_id"] = records[i].record_id;
      j["variety"] = variety_name(records[i].variety);
      j["bucket"] = bucket_label(profiles[i].bucket);
      out << j.dump() << '\n';
    }
  }
  VarietySplit split = filter_varieties(records);
  auto dist = bucket_distribution(split.tw, split.cn, tables);
  if (!o.distribution.empty()) {
    auto out = open_out(o.distribution);
    write_distribution_csv(out, dist);
  }
  write_distribution_markdown(std::cout, dist);
  return 0;
}

int cmd_pair(const Options& o) {
  auto records = read_records(o.records);
  VarietySplit split = filter_varieties(records);
  PairingConfig pc;
  pc.seed = o.seed;
  pc.classes = {o.negative_max, o.neutral_max};
  pc.lengths = {o.bin_width, o.max_len, o.short_max};
  PairingResult pr = build_pairs(split.tw, split.cn, pc);
  std::vector<ReviewPair> pairs = std::move(pr.pairs);
  Subset subset = parse_subset(o.subset);
  if (subset != Subset::kAll) {
    CharSetTables tables = load_tables(o.charsets);
    pairs = subset_filter(pairs, tables,
                          subset == Subset::kChineseOnly ? SubsetConstraint::kChineseOnly
                                                         : SubsetConstraint::kChinesePlusEnglish);
  }
  auto out = open_out(o.output);
  write_pairs(out, pairs);
  fmt::print("pairs={} buckets={} excluded_tw={} excluded_cn={} unpaired_tw={} unpaired_cn={}\n",
             pairs.size(), pr.buckets, pr.excluded_tw, pr.excluded_cn, pr.unpaired_tw,
             pr.unpaired_cn);
  return 0;
}

int cmd_render(const Options& o) {
  auto pairs = read_pairs(o.pairs);
  auto items = eval_items(pairs, parse_variant(o.variant), o.seed);
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!o.output.empty()) {
    file = open_out(o.output);
    out = &file;
  }
  for (const auto& item : items) {
    nlohmann::ordered_json j;
    j["pair_id"] = item.pair_id;
    j["side"] = side_name(item.side);
    j["review_ref"] = item.prompt.review_ref;
    j["variant"] = variant_name(item.prompt.variant);
    j["seed"] = item.prompt.seed;
    j["system"] = item.prompt.system_text ? nlohmann::json(*item.prompt.system_text) : nlohmann::json(nullptr);
    j["user"] = item.prompt.user_text;
    *out << j.dump() << '\n';
  }
  return 0;
}

int cmd_eval(const Options& o) {
  auto pairs = read_pairs(o.pairs);
  CharSetTables tables = load_tables(o.charsets);
  TruthTable truth = truth_from_pairs(pairs);
  auto model = make_model(o.model, {&truth, &tables, load_endpoint_file(o.endpoints)});
  const PromptVariant variant = parse_variant(o.variant);
  auto results = run_eval(pairs, *model, variant, o.seed, o.parallelism);
  auto out = open_out(o.output);
  write_completions(out, results);
  if (!o.manifest.empty()) {
    RunManifest m{o.model, variant, o.seed, templates::version(), tables.version()};
    open_out(o.manifest) << m.to_json().dump(2) << '\n';
  }
  size_t errors = 0;
  for (const auto& r : results) errors += r.transport_error.has_value();
  fmt::print("issued={} transport_errors={}\n", results.size(), errors);
  return 0;
}

int cmd_validate(const Options& o) {
  auto outcomes = outcomes_from(read_completions(o.completions));
  auto out = open_out(o.output);
  write_outcomes(out, outcomes);
  Completeness c = complete_pairs(outcomes);
  fmt::print("issued={} valid={} invalid={} complete_pairs={} incomplete_pairs={}\n", c.issued(),
             c.valid(), c.invalid(), c.complete.size(), c.incomplete_pairs);
  for (size_t i = 0; i < kNumInvalidReasons; ++i) {
    fmt::print("  {}: tw={} cn={}\n", reason_name(static_cast<InvalidReason>(i)),
               c.tw.by_reason[i], c.cn.by_reason[i]);
  }
  return 0;
}

std::vector<Subset> subsets_of(const std::vector<std::string>& names) {
  std::vector<Subset> out;
  for (const auto& n : names) out.push_back(parse_subset(n));
  if (out.empty()) out = {Subset::kAll, Subset::kChineseOnly, Subset::kChinesePlusEnglish};
  return out;
}

int cmd_metrics(const Options& o) {
  auto pairs = read_pairs(o.pairs);
  auto outcomes = read_outcomes(o.outcomes);
  CharSetTables tables = load_tables(o.charsets);
  auto scored = score_pairs(pairs, outcomes, tables, o.short_max);
  auto rows = gap_rows(o.model, parse_variant(o.variant), scored, subsets_of(o.subsets));
  auto out = open_out(o.output);
  write_gap_csv(out, rows);
  write_gap_markdown(std::cout, rows, o.title);
  return 0;
}

int cmd_mt(const Options& o) {
  auto pairs = read_pairs(o.pairs);
  CharSetTables tables = load_tables(o.charsets);
  TruthTable truth = truth_from_pairs(pairs);
  auto model = make_model(o.model, {&truth, &tables, load_endpoint_file(o.endpoints)});
  auto inner = make_translator(o.translator);
  std::optional<fs::path> cache;
  if (!o.cache.empty()) cache = o.cache;
  CachingTranslator translator(*inner, cache);
  const TranslationDirection dir = parse_direction(o.direction);
  if (!o.translated_out.empty()) {
    std::vector<ReviewRecord> sources;
    for (const auto& p : pairs) sources.push_back(source_side(dir) == Side::kTW ? p.tw : p.cn);
    auto corpus = translate_corpus(sources, dir, translator, o.parallelism);
    auto out = open_out(o.translated_out);
    for (const auto& r : corpus.records) out << translated_to_json(r).dump() << '\n';
  }
  MtRunOptions options{o.seed, o.parallelism, o.short_max};
  MtResult mt = mt_gap_rows(pairs, dir, translator, *model, parse_variant(o.variant), options);
  auto out = open_out(o.output);
  write_gap_csv(out, mt.rows);
  write_gap_markdown(std::cout, mt.rows, "Original vs machine-translated");
  std::cerr << fmt::format("dropped_translations={} issued={} valid={} complete={} cache_hits={}\n",
                           mt.dropped_translations, mt.issued, mt.valid, mt.complete_items,
                           translator.hits());
  return 0;
}

int cmd_sweep(const Options& o) {
  auto records = read_records(o.records);
  CharSetTables tables = load_tables(o.charsets);
  TruthTable truth = truth_from_records(records);
  auto model = make_model(o.model, {&truth, &tables, load_endpoint_file(o.endpoints)});
  SweepConfig sc;
  sc.bin_width = o.bin_width;
  sc.max_len = o.max_len;
  sc.per_bin_quota = o.quota;
  sc.seed = o.seed;
  sc.classes = {o.negative_max, o.neutral_max};
  sc.parallelism = o.parallelism;
  SweepTable table = length_sweep(records, *model, sc);
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!o.output.empty()) {
    file = open_out(o.output);
    out = &file;
  }
  write_sweep_csv(*out, table, o.bin_width);
  std::cerr << fmt::format("issued={} excluded_predictions={}\n", table.issued,
                           table.excluded_predictions);
  return 0;
}

int cmd_report(const Options& o) {
  std::vector<GapReportRow> rows;
  for (const auto& path : o.row_files) {
    auto in = open_in(path);
    auto part = read_gap_csv(in);
    rows.insert(rows.end(), part.begin(), part.end());
  }
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!o.output.empty()) {
    file = open_out(o.output);
    out = &file;
  }
  if (o.format == "csv") {
    write_gap_csv(*out, rows);
  } else if (o.format == "markdown" || o.format == "md") {
    write_gap_markdown(*out, rows, o.title);
  } else {
    throw ConfigError("unknown report format '" + o.format + "'");
  }
  return 0;
}

int cmd_run(const Options& o, const CLI::App& sub) {
  RunConfig config;
  if (!o.config.empty()) config = RunConfig::load(o.config);
  KeyValueFile overrides;
  auto flag = [&](const char* name, const std::string& key, const std::string& value) {
    if (sub.count(name) > 0) overrides.set(key, value);
  };
  auto list = [](const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ",") + x;
    return s;
  };
  flag("--input", "input", o.input);
  flag("--output-dir", "output_dir", o.output);
  flag("--charsets", "charsets", o.charsets);
  flag("--endpoints", "endpoints", o.endpoints);
  flag("--field-map", "field_map", o.field_map);
  flag("--seed", "seed", std::to_string(o.seed));
  flag("--parallelism", "parallelism", std::to_string(o.parallelism));
  flag("--translator", "translator", o.translator);
  flag("--models", "models", list(o.models));
  flag("--variants", "variants", list(o.variants));
  flag("--subsets", "subsets", list(o.subsets));
  flag("--mt-directions", "mt_directions", list(o.mt_directions));
  config.apply(overrides);
  PipelineResult r = run_pipeline(config);
  fmt::print("stages run: {}, skipped: {}\n", r.stages_run.size(), r.stages_skipped.size());
  fmt::print("report: {}\n", (config.output_dir / "report.md").string());
  fmt::print("bundle hash: {}\n", r.bundle_hash);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"varbench: paired-variety evaluation of rating prediction"};
  app.require_subcommand(1);
  Options o;

  auto common_lengths = [&](CLI::App* s) {
    s->add_option("--bin-width", o.bin_width, "Length bin width")->capture_default_str();
    s->add_option("--max-len", o.max_len, "Maximum review length")->capture_default_str();
    s->add_option("--short-max", o.short_max, "Longest Short review")->capture_default_str();
  };
  auto common_classes = [&](CLI::App* s) {
    s->add_option("--negative-max", o.negative_max)->capture_default_str();
    s->add_option("--neutral-max", o.neutral_max)->capture_default_str();
  };
  auto model_opts = [&](CLI::App* s) {
    s->add_option("--model", o.model, "Endpoint name or mock:<kind>")->capture_default_str();
    s->add_option("--endpoints", o.endpoints, "JSON endpoint list");
    s->add_option("--seed", o.seed)->capture_default_str();
    s->add_option("--parallelism,-j", o.parallelism)->capture_default_str();
  };

  std::map<std::string, std::function<int()>> handlers;

  auto* ingest = app.add_subcommand("ingest", "Parse a raw export into canonical records");
  ingest->add_option("--input,-i", o.input)->required();
  ingest->add_option("--out,-o", o.output)->required();
  ingest->add_option("--field-map", o.field_map);
  ingest->add_option("--rejects", o.rejects);
  handlers["ingest"] = [&] { return cmd_ingest(o); };

  auto* stats = app.add_subcommand("stats", "Length histogram per variety");
  stats->add_option("--records", o.records)->required();
  stats->add_option("--out,-o", o.output);
  common_lengths(stats);
  handlers["stats"] = [&] { return cmd_stats(o); };

  auto* classify = app.add_subcommand("classify", "Script profile of every record");
  classify->add_option("--records", o.records)->required();
  classify->add_option("--out,-o", o.output);
  classify->add_option("--distribution", o.distribution);
  classify->add_option("--charsets", o.charsets);
  handlers["classify"] = [&] { return cmd_classify(o); };

  auto* pair = app.add_subcommand("pair", "Build matched TW/CN pairs");
  pair->add_option("--records", o.records)->required();
  pair->add_option("--out,-o", o.output)->required();
  pair->add_option("--seed", o.seed)->capture_default_str();
  pair->add_option("--subset", o.subset)->capture_default_str();
  pair->add_option("--charsets", o.charsets);
  common_lengths(pair);
  common_classes(pair);
  handlers["pair"] = [&] { return cmd_pair(o); };

  auto* render = app.add_subcommand("render", "Render prompts for every pair");
  render->add_option("--pairs", o.pairs)->required();
  render->add_option("--variant", o.variant)->capture_default_str();
  render->add_option("--seed", o.seed)->capture_default_str();
  render->add_option("--out,-o", o.output);
  handlers["render"] = [&] { return cmd_render(o); };

  auto* eval = app.add_subcommand("eval", "Query a model for both sides of every pair");
  eval->add_option("--pairs", o.pairs)->required();
  eval->add_option("--variant", o.variant)->capture_default_str();
  eval->add_option("--out,-o", o.output)->required();
  eval->add_option("--manifest", o.manifest);
  eval->add_option("--charsets", o.charsets);
  model_opts(eval);
  handlers["eval"] = [&] { return cmd_eval(o); };

  auto* validate = app.add_subcommand("validate", "Parse completions into predictions");
  validate->add_option("--completions", o.completions)->required();
  validate->add_option("--out,-o", o.output)->required();
  handlers["validate"] = [&] { return cmd_validate(o); };

  auto* metrics = app.add_subcommand("metrics", "Accuracy/MSE gaps with paired tests");
  metrics->add_option("--pairs", o.pairs)->required();
  metrics->add_option("--outcomes", o.outcomes)->required();
  metrics->add_option("--model", o.model, "Row label")->capture_default_str();
  metrics->add_option("--variant", o.variant)->capture_default_str();
  metrics->add_option("--subsets", o.subsets)->delimiter(',');
  metrics->add_option("--short-max", o.short_max)->capture_default_str();
  metrics->add_option("--charsets", o.charsets);
  metrics->add_option("--out,-o", o.output)->required();
  metrics->add_option("--title", o.title)->capture_default_str();
  handlers["metrics"] = [&] { return cmd_metrics(o); };

  auto* mt = app.add_subcommand("mt", "Original vs machine-translated evaluation");
  mt->add_option("--pairs", o.pairs)->required();
  mt->add_option("--direction", o.direction, "tw2cn or cn2tw")->capture_default_str();
  mt->add_option("--translator", o.translator, "URL, mock:identity or mock:charmap")
      ->capture_default_str();
  mt->add_option("--cache", o.cache, "Translation cache file");
  mt->add_option("--variant", o.variant)->capture_default_str();
  mt->add_option("--short-max", o.short_max)->capture_default_str();
  mt->add_option("--charsets", o.charsets);
  mt->add_option("--translated-out", o.translated_out);
  mt->add_option("--out,-o", o.output)->required();
  model_opts(mt);
  handlers["mt"] = [&] { return cmd_mt(o); };

  auto* sweep = app.add_subcommand("sweep", "Three-way sentiment accuracy by length bin");
  sweep->add_option("--records", o.records)->required();
  sweep->add_option("--quota", o.quota, "Samples per (bin, class)")->capture_default_str();
  sweep->add_option("--out,-o", o.output);
  sweep->add_option("--charsets", o.charsets);
  common_lengths(sweep);
  common_classes(sweep);
  model_opts(sweep);
  handlers["sweep"] = [&] { return cmd_sweep(o); };

  auto* report = app.add_subcommand("report", "Render gap rows as CSV or Markdown");
  report->add_option("--rows", o.row_files, "Gap CSV files")->required();
  report->add_option("--format", o.format, "csv or markdown")->capture_default_str();
  report->add_option("--title", o.title)->capture_default_str();
  report->add_option("--out,-o", o.output);
  handlers["report"] = [&] { return cmd_report(o); };

  auto* run = app.add_subcommand("run", "Run the whole pipeline");
  run->add_option("--config,-c", o.config, "key = value config file");
  run->add_option("--input", o.input);
  run->add_option("--output-dir", o.output);
  run->add_option("--charsets", o.charsets);
  run->add_option("--endpoints", o.endpoints);
  run->add_option("--field-map", o.field_map);
  run->add_option("--seed", o.seed);
  run->add_option("--parallelism,-j", o.parallelism);
  run->add_option("--translator", o.translator);
  run->add_option("--models", o.models)->delimiter(',');
  run->add_option("--variants", o.variants)->delimiter(',');
  run->add_option("--subsets", o.subsets)->delimiter(',');
  run->add_option("--mt-directions", o.mt_directions)->delimiter(',');

  CLI11_PARSE(app, argc, argv);

  const CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  try {
    if (name == "run") return cmd_run(o, *run);
    return handlers.at(name)();
  } catch (const StageError& e) {
    std::cerr << "varbench: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "varbench: stage " << name << " failed: " << e.what() << '\n';
    return 1;
  }
}
