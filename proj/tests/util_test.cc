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

#include <algorithm>
#include <numeric>
#include <set>

#include "varbench/kvfile.h"
#include "varbench/util.h"

using namespace varbench;

TEST_CASE("fnv1a64 matches published vectors") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(fnv1a64("foobar") == 0x85944171f73967e8ULL);
  // Chaining equals hashing the concatenation.
  CHECK(fnv1a64("bar", fnv1a64("foo")) == fnv1a64("foobar"));
  CHECK(hex64(0xabcULL) == "0000000000000abc");
}

TEST_CASE("SplitMix64 reference outputs") {
  // First outputs for seed 1234567 from the reference C implementation.
  SplitMix64 g(1234567);
  CHECK(g.next() == 6457827717110365317ULL);
  CHECK(g.next() == 3203168211198807973ULL);
  CHECK(g.next() == 9817491932198370423ULL);
}

TEST_CASE("seeded_permutation is a deterministic permutation") {
  for (size_t n : {0u, 1u, 2u, 7u, 100u}) {
    auto p = seeded_permutation(n, 42);
    std::vector<size_t> sorted = p;
    std::sort(sorted.begin(), sorted.end());
    std::vector<size_t> iota(n);
    std::iota(iota.begin(), iota.end(), 0);
    CHECK(sorted == iota);
    CHECK(p == seeded_permutation(n, 42));
  }
  CHECK(seeded_permutation(20, 1) != seeded_permutation(20, 2));
}

TEST_CASE("UTF-8 decoding and counting") {
  CHECK(count_scalars("") == 0);
  CHECK(count_scalars("abc") == 3);
  CHECK(count_scalars("這個房間") == 4);
  CHECK(count_scalars("\U0001F600") == 1);
  auto bad = decode_utf8("a\xff" "b");
  REQUIRE(bad.size() == 3);
  CHECK(bad[1] == U'�');
  std::string s;
  append_utf8(s, U'機');
  append_utf8(s, U'\U0001F44D');
  CHECK(s == "機\U0001F44D");
  CHECK(decode_utf8(s) == U"機\U0001F44D");
}

TEST_CASE("trim handles Unicode whitespace") {
  CHECK(trim("  x  ") == "x");
  CHECK(trim("　x ") == "x");
  CHECK(is_blank(" \t　"));
  CHECK_FALSE(is_blank(" a "));
  CHECK(to_lower_ascii("TW") == "tw");
  CHECK(split("a,,b", ',') == std::vector<std::string>{"a", "", "b"});
}

TEST_CASE("key-value files") {
  auto kv = KeyValueFile::parse("# comment\n seed = 7 \n\nmodels = a, b\n");
  CHECK(kv.get("seed") == "7");
  CHECK(kv.get("models") == "a, b");
  CHECK_FALSE(kv.get("missing"));
  CHECK_THROWS_AS(KeyValueFile::parse("a = 1\na = 2\n"), ConfigError);
  CHECK_THROWS_AS(KeyValueFile::parse("novalue\n"), ConfigError);
  CHECK_THROWS_AS(KeyValueFile::parse(" = 3\n"), ConfigError);
}
