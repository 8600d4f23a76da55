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

#include "varbench/stats.h"

#include <cmath>
#include <limits>

namespace varbench {

namespace {

void check_inputs(std::span<const int> predictions, std::span<const int> truths) {
  if (predictions.empty()) throw MetricError("metric undefined on empty input");
  if (predictions.size() != truths.size()) throw MetricError("predictions and truths differ in length");
}

// Continued fraction for I_x(a, b); valid for x < (a + 1) / (a + b + 2).
double beta_fraction(double a, double b, double x) {
  constexpr int kMaxIterations = 100000;
  constexpr double kEps = 1e-15;
  constexpr double kTiny = 1e-300;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIterations; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) return h;
  }
  return h;
}

}  // namespace

double accuracy(std::span<const int> predictions, std::span<const int> truths) {
  check_inputs(predictions, truths);
  size_t hits = 0;
  for (size_t i = 0; i < predictions.size(); ++i) hits += predictions[i] == truths[i];
  return 100.0 * static_cast<double>(hits) / static_cast<double>(predictions.size());
}

double mse(std::span<const int> predictions, std::span<const int> truths) {
  check_inputs(predictions, truths);
  double sum = 0.0;
  for (size_t i = 0; i < predictions.size(); ++i) {
    const double d = predictions[i] - truths[i];
    sum += d * d;
  }
  return sum / static_cast<double>(predictions.size());
}

double incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0)) throw MetricError("incomplete_beta: a and b must be positive");
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) +
                           b * std::log1p(-x);
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_fraction(a, b, x) / a;
  return 1.0 - front * beta_fraction(b, a, 1.0 - x) / b;
}

double student_t_two_sided_p(double t, double df) {
  if (!(df > 0.0)) throw MetricError("student_t: df must be positive");
  if (std::isnan(t)) return std::numeric_limits<double>::quiet_NaN();
  if (std::isinf(t)) return 0.0;
  const double x = df / (df + t * t);
  return incomplete_beta(df / 2.0, 0.5, x);
}

double student_t_cdf(double t, double df) {
  const double tail = 0.5 * student_t_two_sided_p(t, df);
  return t >= 0.0 ? 1.0 - tail : tail;
}

TTest paired_t_test(std::span<const double> differences) {
  const size_t n = differences.size();
  if (n < 2) throw MetricError("paired t-test needs at least two pairs");
  TTest r;
  r.df = static_cast<double>(n - 1);
  double sum = 0.0;
  for (double d : differences) sum += d;
  r.mean = sum / static_cast<double>(n);
  double ss = 0.0;
  for (double d : differences) ss += (d - r.mean) * (d - r.mean);
  const double sd = std::sqrt(ss / r.df);
  const double se = sd / std::sqrt(static_cast<double>(n));
  if (se == 0.0) {
    if (r.mean == 0.0) {
      r.t = 0.0;
      r.p = 1.0;
    } else {
      r.t = r.mean > 0 ? std::numeric_limits<double>::infinity()
                       : -std::numeric_limits<double>::infinity();
      r.p = 0.0;
    }
    return r;
  }
  r.t = r.mean / se;
  r.p = student_t_two_sided_p(r.t, r.df);
  return r;
}

std::string_view significance_stars(double p) {
  if (std::isnan(p)) return "";
  if (p < 0.001) return "***";
  if (p < 0.01) return "**";
  if (p < 0.05) return "*";
  return "";
}

}  // namespace varbench
