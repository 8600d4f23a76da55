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

#ifndef VARBENCH_STATS_H_
#define VARBENCH_STATS_H_

#include <span>
#include <stdexcept>
#include <string_view>

namespace varbench {

class MetricError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Percentage of exact matches, 100 * hits / n. Throws MetricError on empty or
// mismatched inputs.
double accuracy(std::span<const int> predictions, std::span<const int> truths);

// Mean of squared differences. Throws MetricError on empty or mismatched
// inputs.
double mse(std::span<const int> predictions, std::span<const int> truths);

// Regularized incomplete beta I_x(a, b), continued fraction (modified
// Lentz), absolute tolerance 1e-10 on the fraction.
double incomplete_beta(double a, double b, double x);

// P(T <= t) for Student's t with `df` degrees of freedom.
double student_t_cdf(double t, double df);

// Two-sided tail probability P(|T| >= |t|).
double student_t_two_sided_p(double t, double df);

struct TTest {
  double t = 0.0;
  double df = 0.0;
  double p = 1.0;
  double mean = 0.0;
};

// One-sample t-test of the differences against zero (paired t-test),
// df = n - 1, two-sided. All-zero differences give t = 0, p = 1; constant
// non-zero differences give t = +-inf, p = 0. Throws MetricError if n < 2.
TTest paired_t_test(std::span<const double> differences);

// "***" p < .001, "**" p < .01, "*" p < .05, otherwise "".
std::string_view significance_stars(double p);

}  // namespace varbench

#endif  // VARBENCH_STATS_H_
