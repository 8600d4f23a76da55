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

// Writes the synthetic fixture. The bundled data/fixtures/synthetic_2000.jsonl
// is the output of `make_fixture --out data/fixtures/synthetic_2000.jsonl`.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "varbench/synthetic.h"

int main(int argc, char** argv) {
  CLI::App app{"Generate a synthetic review export"};
  varbench::SyntheticOptions options;
  std::string out_path;
  app.add_option("--out,-o", out_path, "Output file (stdout when omitted)");
  app.add_option("--seed", options.seed)->capture_default_str();
  app.add_option("--slots", options.slots, "Matched TW/CN slots")->capture_default_str();
  app.add_option("--unpaired", options.unpaired)->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  const std::string text = varbench::synthetic_export(options);
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  if (!out) {
    std::cerr << "make_fixture: cannot write " << out_path << '\n';
    return 1;
  }
  out << text;
  return 0;
}
