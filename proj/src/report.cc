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

#include "varbench/report.h"

#include <charconv>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <tuple>

#include <fmt/format.h>

#include "varbench/kernels.h"
#include "varbench/util.h"

namespace varbench {
namespace {

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string num(double v) {
  if (std::isnan(v)) return "nan";
  return fmt::format("{}", v);
}

// RFC 4180 record; returns false at end of input.
bool read_csv_record(std::istream& in, std::vector<std::string>& fields) {
  fields.clear();
  std::string field;
  bool quoted = false;
  bool any = false;
  for (int ch; (ch = in.get()) != EOF;) {
    any = true;
    const char c = static_cast<char>(ch);
    if (quoted) {
      if (c == '"') {
        if (in.peek() == '"') {
          field += '"';
          in.get();
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (c == '\n') {
      fields.push_back(std::move(field));
      return true;
    } else if (c != '\r') {
      field += c;
    }
  }
  if (!any) return false;
  fields.push_back(std::move(field));
  return true;
}

double parse_double(const std::string& s) {
  if (s == "nan" || s.empty()) return std::nan("");
  if (s == "inf") return INFINITY;
  if (s == "-inf") return -INFINITY;
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ReportError("not a number: '" + s + "'");
  }
  return v;
}

std::string fixed(double v, int precision) {
  if (std::isnan(v)) return "n/a";
  return fmt::format("{:.{}f}", v, precision);
}

}  // namespace

const std::vector<std::string>& gap_csv_columns() {
  static const std::vector<std::string> cols = {
      "model",  "variant", "length_group", "subset", "origin",    "n_pairs",
      "acc_tw", "acc_cn",  "delta_acc",    "mse_tw", "mse_cn",    "delta_mse",
      "t_acc",  "p_acc",   "stars_acc",    "t_mse",  "p_mse",     "stars_mse"};
  return cols;
}

void write_gap_csv(std::ostream& out, std::span<const GapReportRow> rows) {
  if (rows.empty()) throw ReportError("no report rows");
  const auto& cols = gap_csv_columns();
  for (size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
  out << '\n';
  for (const auto& r : rows) {
    out << csv_field(r.model) << ',' << csv_field(r.variant) << ',' << split_name(r.length_group)
        << ',' << subset_name(r.subset) << ',' << csv_field(r.origin) << ',' << r.n_pairs << ','
        << num(r.acc_tw) << ',' << num(r.acc_cn) << ',' << num(r.delta_acc) << ','
        << num(r.mse_tw) << ',' << num(r.mse_cn) << ',' << num(r.delta_mse) << ','
        << num(r.t_acc) << ',' << num(r.p_acc) << ',' << r.stars_acc << ',' << num(r.t_mse)
        << ',' << num(r.p_mse) << ',' << r.stars_mse << '\n';
  }
}

std::vector<GapReportRow> read_gap_csv(std::istream& in) {
  std::vector<std::string> f;
  if (!read_csv_record(in, f) || f != gap_csv_columns()) {
    throw ReportError("gap CSV header does not match the expected columns");
  }
  std::vector<GapReportRow> rows;
  while (read_csv_record(in, f)) {
    if (f.size() == 1 && f[0].empty()) continue;
    if (f.size() != gap_csv_columns().size()) {
      throw ReportError(fmt::format("gap CSV row {} has {} fields", rows.size() + 1, f.size()));
    }
    GapReportRow r;
    r.model = f[0];
    r.variant = f[1];
    r.length_group = parse_split(f[2]);
    r.subset = parse_subset(f[3]);
    r.origin = f[4];
    r.n_pairs = static_cast<size_t>(parse_double(f[5]));
    r.acc_tw = parse_double(f[6]);
    r.acc_cn = parse_double(f[7]);
    r.delta_acc = parse_double(f[8]);
    r.mse_tw = parse_double(f[9]);
    r.mse_cn = parse_double(f[10]);
    r.delta_mse = parse_double(f[11]);
    r.t_acc = parse_double(f[12]);
    r.p_acc = parse_double(f[13]);
    r.stars_acc = f[14];
    r.t_mse = parse_double(f[15]);
    r.p_mse = parse_double(f[16]);
    r.stars_mse = f[17];
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string format_delta(double value, int precision, std::string_view stars) {
  if (std::isnan(value)) return "n/a";
  // Avoid "-0.00" for tiny negative values.
  if (std::fabs(value) < 0.5 * std::pow(10.0, -precision)) value = 0.0;
  return fmt::format("{:+.{}f}{}", value, precision, stars);
}

void write_gap_markdown(std::ostream& out, std::span<const GapReportRow> rows,
                        std::string_view heading) {
  if (rows.empty()) throw ReportError("no report rows");
  out << "## " << heading << "\n\n";
  out << "Δ = cn − tw. Stars: * p < .05, ** p < .01, *** p < .001 (paired t-test).\n";

  // Sections in first-appearance order.
  std::vector<std::pair<Subset, std::string>> sections;
  for (const auto& r : rows) {
    std::pair<Subset, std::string> key{r.subset, r.origin};
    if (std::find(sections.begin(), sections.end(), key) == sections.end()) sections.push_back(key);
  }
  const bool mt = std::any_of(rows.begin(), rows.end(), [](auto& r) { return !r.origin.empty(); });
  for (const auto& [subset, origin] : sections) {
    out << "\n### " << subset_name(subset);
    if (!origin.empty()) out << " — original " << origin;
    out << "\n";
    for (LengthSplit split : {LengthSplit::kOverall, LengthSplit::kShort, LengthSplit::kLong}) {
      std::vector<const GapReportRow*> sel;
      for (const auto& r : rows) {
        if (r.subset == subset && r.origin == origin && r.length_group == split) sel.push_back(&r);
      }
      if (sel.empty()) continue;
      out << "\n#### " << split_name(split) << "\n\n";
      out << "| Model | Prompt |" << (mt ? " Ori. |" : "")
          << " n | Acc tw | Acc cn | ΔAcc (cn−tw) | MSE tw | MSE cn | ΔMSE (cn−tw) |\n";
      out << "|---|---|" << (mt ? "---|" : "") << "---:|---:|---:|---:|---:|---:|---:|\n";
      for (const GapReportRow* r : sel) {
        out << "| " << r->model << " | " << r->variant << " |";
        if (mt) out << ' ' << r->origin << " |";
        out << ' ' << r->n_pairs << " | " << fixed(r->acc_tw, 2) << " | " << fixed(r->acc_cn, 2)
            << " | " << format_delta(r->delta_acc, 2, r->stars_acc) << " | "
            << fixed(r->mse_tw, 3) << " | " << fixed(r->mse_cn, 3) << " | "
            << format_delta(r->delta_mse, 3, r->stars_mse) << " |\n";
      }
    }
  }
}

BucketDistribution bucket_distribution(std::span<const ReviewRecord> tw,
                                       std::span<const ReviewRecord> cn,
                                       const CharSetTables& tables) {
  BucketDistribution d;
  for (const auto& p : kernels::omp::profile_records(tw, tables)) {
    ++d.tw[static_cast<size_t>(p.bucket)];
  }
  for (const auto& p : kernels::omp::profile_records(cn, tables)) {
    ++d.cn[static_cast<size_t>(p.bucket)];
  }
  d.tw_total = tw.size();
  d.cn_total = cn.size();
  return d;
}

namespace {
std::string share(size_t n, size_t total) {
  if (total == 0) return "n/a";
  return fmt::format("{:.2f}%", 100.0 * static_cast<double>(n) / static_cast<double>(total));
}
}  // namespace

void write_distribution_markdown(std::ostream& out, const BucketDistribution& d) {
  out << "## Script profile distribution\n\n";
  out << "| Bucket | TW count | TW % | CN count | CN % |\n";
  out << "|---|---:|---:|---:|---:|\n";
  for (size_t b = 0; b < kNumScriptBuckets; ++b) {
    if (d.tw[b] == 0 && d.cn[b] == 0) continue;
    out << "| " << bucket_label(static_cast<ScriptBucket>(b)) << " | " << d.tw[b] << " | "
        << share(d.tw[b], d.tw_total) << " | " << d.cn[b] << " | " << share(d.cn[b], d.cn_total)
        << " |\n";
  }
  out << "| Total | " << d.tw_total << " | | " << d.cn_total << " | |\n";
}

void write_distribution_csv(std::ostream& out, const BucketDistribution& d) {
  out << "bucket,tw,cn\n";
  for (size_t b = 0; b < kNumScriptBuckets; ++b) {
    out << csv_field(bucket_label(static_cast<ScriptBucket>(b))) << ',' << d.tw[b] << ','
        << d.cn[b] << '\n';
  }
}

ValidityRow validity_row(std::string model, std::string variant,
                         std::span<const PredictionOutcome> outcomes) {
  Completeness c = complete_pairs(outcomes);
  ValidityRow row;
  row.model = std::move(model);
  row.variant = std::move(variant);
  row.tw = c.tw;
  row.cn = c.cn;
  row.complete_pairs = c.complete.size();
  row.incomplete_pairs = c.incomplete_pairs;
  return row;
}

void write_validity_markdown(std::ostream& out, std::span<const ValidityRow> rows) {
  out << "## Valid and invalid predictions\n\n";
  out << "| Model | Prompt | Side | Valid | Invalid |";
  for (size_t i = 0; i < kNumInvalidReasons; ++i) {
    out << ' ' << reason_name(static_cast<InvalidReason>(i)) << " |";
  }
  out << "\n|---|---|---|---:|---:|";
  for (size_t i = 0; i < kNumInvalidReasons; ++i) out << "---:|";
  out << '\n';
  for (const auto& r : rows) {
    for (Side side : {Side::kTW, Side::kCN}) {
      const SideCounts& s = side == Side::kTW ? r.tw : r.cn;
      out << "| " << r.model << " | " << r.variant << " | " << side_name(side) << " | " << s.valid
          << " | " << s.invalid << " |";
      for (size_t n : s.by_reason) out << ' ' << n << " |";
      out << '\n';
    }
  }
  out << "\n| Model | Prompt | Issued | Complete pairs | Incomplete pairs |\n";
  out << "|---|---|---:|---:|---:|\n";
  for (const auto& r : rows) {
    out << "| " << r.model << " | " << r.variant << " | " << r.issued() << " | "
        << r.complete_pairs << " | " << r.incomplete_pairs << " |\n";
  }
}

void write_validity_csv(std::ostream& out, std::span<const ValidityRow> rows) {
  out << "model,variant,side,valid,invalid";
  for (size_t i = 0; i < kNumInvalidReasons; ++i) {
    out << ',' << reason_name(static_cast<InvalidReason>(i));
  }
  out << ",complete_pairs,incomplete_pairs\n";
  for (const auto& r : rows) {
    for (Side side : {Side::kTW, Side::kCN}) {
      const SideCounts& s = side == Side::kTW ? r.tw : r.cn;
      out << csv_field(r.model) << ',' << csv_field(r.variant) << ',' << side_name(side) << ','
          << s.valid << ',' << s.invalid;
      for (size_t n : s.by_reason) out << ',' << n;
      out << ',' << r.complete_pairs << ',' << r.incomplete_pairs << '\n';
    }
  }
}

}  // namespace varbench
