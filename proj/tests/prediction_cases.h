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

#ifndef VARBENCH_TESTS_PREDICTION_CASES_H_
#define VARBENCH_TESTS_PREDICTION_CASES_H_

// Thirty raw completions with their expected parse. Expected values follow
// the taxonomy directly: a bare integer in 1..10 is valid, other bare
// integers are out of range, anything carrying extra characters next to a
// digit is extra text, digit-free text is non-numeric, blank is empty.

#include <array>
#include <optional>
#include <string_view>

namespace varbench::testing {

struct PredictionCase {
  std::string_view raw;
  std::optional<int> score;
  std::string_view reason;  // empty when valid
};

inline constexpr std::array<PredictionCase, 30> kPredictionCases = {{
    {"7", 7, ""},
    {"10", 10, ""},
    {"1", 1, ""},
    {" 8 ", 8, ""},
    {"\n9\n", 9, ""},
    {"5\n", 5, ""},
    {"+7", 7, ""},
    {"07", 7, ""},
    {"0", std::nullopt, "OutOfRange"},
    {"11", std::nullopt, "OutOfRange"},
    {"-3", std::nullopt, "OutOfRange"},
    {"100", std::nullopt, "OutOfRange"},
    {"-0", std::nullopt, "OutOfRange"},
    {"99999999999999999999", std::nullopt, "OutOfRange"},
    {"7/10", std::nullopt, "ExtraText"},
    {"10/10", std::nullopt, "ExtraText"},
    {"The score is 7", std::nullopt, "ExtraText"},
    {"7.", std::nullopt, "ExtraText"},
    {"7.5", std::nullopt, "ExtraText"},
    {"Score: 8", std::nullopt, "ExtraText"},
    {"8分", std::nullopt, "ExtraText"},
    {"7 8", std::nullopt, "ExtraText"},
    {"**8**", std::nullopt, "ExtraText"},
    {"seven", std::nullopt, "NonNumeric"},
    {"N/A", std::nullopt, "NonNumeric"},
    {"positive", std::nullopt, "NonNumeric"},
    {"I cannot rate this review.", std::nullopt, "NonNumeric"},
    {"", std::nullopt, "Empty"},
    {"   ", std::nullopt, "Empty"},
    {"\t\n", std::nullopt, "Empty"},
}};

}  // namespace varbench::testing

#endif  // VARBENCH_TESTS_PREDICTION_CASES_H_
