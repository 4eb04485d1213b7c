// Copyright 2026 The catt-sa Authors
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

#include <benchmark/benchmark.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "catt/insertion.hpp"
#include "catt/pasting.hpp"
#include "catt/reduction.hpp"
#include "catt/surface.hpp"
#include "catt/typecheck.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace catt;
using namespace catt::testing;

namespace {

// ((c1·c2)·c3)·…·cn, binary and left-nested.
Term left_nested(const Context &amb, int n) {
  Term acc = v("c1");
  for (int i = 2; i <= n; ++i) acc = comp(amb, {acc, v("c" + std::to_string(i))});
  return acc;
}

void BM_NormalizeLeftNested(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  const Context amb = chain_ambient(n);
  const Term t = left_nested(amb, n);
  for (auto _ : state) benchmark::DoNotOptimize(normalize(t));
  state.SetComplexityN(n);
}
BENCHMARK(BM_NormalizeLeftNested)->DenseRange(3, 12, 3)->Complexity();

void BM_DefEqBracketings(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  const Context amb = chain_ambient(n);
  const auto bs = bracketings(amb, n);
  for (auto _ : state) {
    for (const auto &t : bs) benchmark::DoNotOptimize(def_eq(bs.front(), t));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(bs.size()));
}
BENCHMARK(BM_DefEqBracketings)->DenseRange(3, 6);

void BM_InsertNested(benchmark::State &state) {
  const InsertionProblem p{example_delta(), "α", example_theta(), unbiased_type(example_theta())};
  for (auto _ : state) benchmark::DoNotOptimize(insert_ctx(p));
}
BENCHMARK(BM_InsertNested);

void BM_PastingCheckChain(benchmark::State &state) {
  const Context g = chain_ctx(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_pd(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PastingCheckChain)->RangeMultiplier(4)->Range(4, 256)->Complexity();

void BM_InferLeftNested(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  const Context amb = chain_ambient(n);
  const Term t = left_nested(amb, n);
  for (auto _ : state) {
    Checker sa;  // fresh, so head validation is included
    benchmark::DoNotOptimize(sa.infer(amb, t));
  }
}
BENCHMARK(BM_InferLeftNested)->DenseRange(3, 12, 3);

void BM_CheckCorpusFile(benchmark::State &state) {
  std::ifstream in(std::filesystem::path(CATT_CORPUS_DIR) / "valid" / "higher.catt");
  std::stringstream ss;
  ss << in.rdbuf();
  const SourceFile f = parse(ss.str());
  const Mode mode = state.range(0) == 0 ? Mode::Catt : Mode::CattSa;
  for (auto _ : state) {
    Checker checker(mode);
    Environment env;
    benchmark::DoNotOptimize(check_file(f, checker, env));
  }
  state.SetLabel(state.range(0) == 0 ? "catt" : "sa");
}
BENCHMARK(BM_CheckCorpusFile)->Arg(0)->Arg(1);

}  // namespace

BENCHMARK_MAIN();
