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

// Serial vs OpenMP kernels on a scaled-up synthetic corpus.
//
//   OMP_NUM_THREADS=4 build/bench/kernels_bench

#include <benchmark/benchmark.h>

#include <sstream>

#include "varbench/ingest.h"
#include "varbench/kernels.h"
#include "varbench/pairing.h"
#include "varbench/synthetic.h"

namespace {

using namespace varbench;

struct Corpus {
  VarietySplit split;
  std::vector<ReviewRecord> all;
  std::vector<Bucket> buckets;
  CharSetTables tables;
};

const Corpus& corpus() {
  static const Corpus c = [] {
    SyntheticOptions opts;
    opts.slots = 40000;
    opts.unpaired = 20000;
    opts.hotels = 400;
    std::istringstream in(synthetic_export(opts));
    Corpus out;
    auto parsed = parse_records(in);
    out.all = filter_nonempty(parsed.records);
    out.split = filter_varieties(out.all);
    out.buckets = group_buckets(out.split.tw, out.split.cn, PairingConfig{}, nullptr);
    out.tables = CharSetTables::load(std::string(VARBENCH_DATA_DIR) + "/charsets");
    return out;
  }();
  return c;
}

template <auto Fn>
void BM_Zip(benchmark::State& state) {
  const auto& c = corpus();
  for (auto _ : state) benchmark::DoNotOptimize(Fn(c.buckets, 7));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(c.buckets.size()));
}

template <auto Fn>
void BM_Profile(benchmark::State& state) {
  const auto& c = corpus();
  for (auto _ : state) benchmark::DoNotOptimize(Fn(c.all, c.tables));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(c.all.size()));
}

template <auto Fn>
void BM_Histogram(benchmark::State& state) {
  const auto& c = corpus();
  for (auto _ : state) benchmark::DoNotOptimize(Fn(c.all, LengthConfig{}));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(c.all.size()));
}

BENCHMARK(BM_Zip<kernels::serial::zip_buckets>)->Name("zip_buckets/serial")->UseRealTime();
BENCHMARK(BM_Zip<kernels::omp::zip_buckets>)->Name("zip_buckets/omp")->UseRealTime();
BENCHMARK(BM_Profile<kernels::serial::profile_records>)->Name("profile_records/serial")->UseRealTime();
BENCHMARK(BM_Profile<kernels::omp::profile_records>)->Name("profile_records/omp")->UseRealTime();
BENCHMARK(BM_Histogram<kernels::serial::length_histogram>)->Name("length_histogram/serial")->UseRealTime();
BENCHMARK(BM_Histogram<kernels::omp::length_histogram>)->Name("length_histogram/omp")->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
