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

#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracles.h"
#include "t_test_reference.h"
#include "varbench/stats.h"

using namespace varbench;

TEST_CASE("accuracy and MSE against brute force") {
  SplitMix64 rng(7);
  for (int iter = 0; iter < 50; ++iter) {
    const size_t n = 1 + rng.below(30);
    std::vector<int> p(n), t(n);
    for (size_t i = 0; i < n; ++i) {
      p[i] = 1 + static_cast<int>(rng.below(10));
      t[i] = 1 + static_cast<int>(rng.below(10));
    }
    CHECK(std::fabs(accuracy(p, t) - testing::brute_accuracy(p, t)) <= 1e-12);
    CHECK(std::fabs(mse(p, t) - testing::brute_mse(p, t)) <= 1e-12);
  }
  std::vector<int> empty;
  CHECK_THROWS_AS(accuracy(empty, empty), MetricError);
  std::vector<int> one{1}, two{1, 2};
  CHECK_THROWS_AS(mse(one, two), MetricError);
}

TEST_CASE("paired t-test against reference values") {
  for (const auto& ref : testing::kTTestReferences) {
    auto r = paired_t_test(ref.values);
    CHECK(r.df == doctest::Approx(static_cast<double>(ref.values.size() - 1)));
    CHECK(std::fabs(r.t - ref.t) <= 1e-6);
    CHECK(std::fabs(r.p - ref.p) <= 1e-6);
  }
}

TEST_CASE("degenerate differences") {
  std::vector<double> zeros(5, 0.0);
  auto z = paired_t_test(zeros);
  CHECK(z.t == 0.0);
  CHECK(z.p == 1.0);
  std::vector<double> ones(5, 1.0);
  auto o = paired_t_test(ones);
  CHECK(std::isinf(o.t));
  CHECK(o.t > 0);
  CHECK(o.p == 0.0);
  std::vector<double> single{1.0};
  CHECK_THROWS_AS(paired_t_test(single), MetricError);
}

TEST_CASE("reported score-difference test reproduces its p-value") {
  // t(22917) = .160 corresponds to p = .873.
  CHECK(student_t_two_sided_p(0.160, 22917) == doctest::Approx(0.873).epsilon(0.0006));
}

TEST_CASE("incomplete beta identities") {
  CHECK(incomplete_beta(1, 1, 0.3) == doctest::Approx(0.3));
  CHECK(incomplete_beta(2, 3, 0.0) == 0.0);
  CHECK(incomplete_beta(2, 3, 1.0) == 1.0);
  // I_x(a, b) = 1 - I_{1-x}(b, a)
  CHECK(incomplete_beta(2.5, 4, 0.35) == doctest::Approx(1 - incomplete_beta(4, 2.5, 0.65)));
  CHECK(student_t_cdf(0, 5) == doctest::Approx(0.5));
}

TEST_CASE("significance stars") {
  CHECK(significance_stars(0.0009) == "***");
  CHECK(significance_stars(0.001) == "**");
  CHECK(significance_stars(0.0099) == "**");
  CHECK(significance_stars(0.01) == "*");
  CHECK(significance_stars(0.049) == "*");
  CHECK(significance_stars(0.05) == "");
  CHECK(significance_stars(std::nan("")) == "");
}
