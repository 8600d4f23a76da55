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

#ifndef VARBENCH_TESTS_T_TEST_REFERENCE_H_
#define VARBENCH_TESTS_T_TEST_REFERENCE_H_

// One-sample t-tests of the differences against zero, computed with
// scipy.stats.ttest_1samp (scipy 1.x) and frozen here.

#include <array>
#include <vector>

namespace varbench::testing {

struct TTestReference {
  std::vector<double> values;
  double t;
  double p;
};

inline const std::array<TTestReference, 10> kTTestReferences = {{
    {{1, 2, 3, 4, 5}, 4.2426406871192848, 0.013235599563682695},
    {{0.5, -0.25, 1.75, 0.0, 2.5, -1.0}, 1.090559667487073, 0.32521060621225534},
    {{1, 0, 0, 1, 1, 0, 1, 1, 1, 0}, 3.6742346141747673, 0.0051210727642726347},
    {{-1, -1, 0, -2, -1, 0, -1}, -3.2863353450309969, 0.016689984315831463},
    {{3.2, 2.9, 3.5, 3.1, 2.8, 3.0, 3.3, 3.4}, 36.373066958946417, 3.0845039588899597e-09},
    {{0.1, -0.1}, 0.0, 1.0},
    {{10, -3, 4, 7, -8, 2, 0, 5, -1}, 0.97463184619707621, 0.3582882107557675},
    {{1, 1, 1, 1, 2}, 5.9999999999999991, 0.003882537046960512},
    {{-0.5, 0.25, -0.75, 0.5, -1.25, 0.0, -0.25, -0.5, 0.75, -1.0, 0.25}, -1.183452670827877,
     0.26399961224944818},
    {{100, 101, 99, 102, 98, 103, 97}, 122.47448713915891, 1.9979015110765124e-11},
}};

}  // namespace varbench::testing

#endif  // VARBENCH_TESTS_T_TEST_REFERENCE_H_
