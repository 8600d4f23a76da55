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

#ifndef VARBENCH_UTIL_H_
#define VARBENCH_UTIL_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace varbench {

inline constexpr uint64_t kFnvOffset = 0xcbf29ce484222325ULL;

// 64-bit FNV-1a. Chainable: pass a previous result as `state`.
uint64_t fnv1a64(std::string_view data, uint64_t state = kFnvOffset);

// Lower-case, zero-padded 16 hex digits.
std::string hex64(uint64_t value);

// SplitMix64 (Steele, Lea, Flood 2014). Small and fully specified so that
// shuffles are reproducible across platforms and implementations.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound). Modulo reduction; bias is negligible for the
  // small bounds used here and the result stays portable.
  uint64_t below(uint64_t bound) { return next() % bound; }

 private:
  uint64_t state_;
};

// Fisher-Yates permutation of [0, n) driven by SplitMix64(seed).
std::vector<size_t> seeded_permutation(size_t n, uint64_t seed);

bool is_unicode_space(char32_t c);

// Decodes UTF-8; each malformed byte decodes to U+FFFD.
std::u32string decode_utf8(std::string_view text);
size_t count_scalars(std::string_view text);
void append_utf8(std::string& out, char32_t c);

// Strips leading/trailing Unicode whitespace.
std::string_view trim(std::string_view text);
bool is_blank(std::string_view text);

std::string to_lower_ascii(std::string_view text);
std::vector<std::string> split(std::string_view text, char sep);

}  // namespace varbench

#endif  // VARBENCH_UTIL_H_
