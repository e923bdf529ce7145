/* Copyright 2026 The cognarg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Serial reference against OpenMP kernels. Each benchmark takes arg 0 for
// serial and 1 for parallel; set OMP_NUM_THREADS to vary the width.

#include <benchmark/benchmark.h>

#include <random>

#include "cognarg/harness.hpp"
#include "cognarg/oracle.hpp"
#include "random_cases.hpp"

using namespace cognarg;

namespace {

const std::vector<testing::RandomCase>& cases() {
  static const auto all = [] {
    std::mt19937_64 rng(42);
    std::vector<testing::RandomCase> out;
    while (out.size() < 40) {
      auto c = testing::random_case(rng, 5, 4, 14);
      if (c.framework.size() >= 10) out.push_back(std::move(c));
    }
    return out;
  }();
  return all;
}

void BM_OracleQuery(benchmark::State& state) {
  const bool parallel = state.range(0) != 0;
  std::vector<std::pair<oracle::Oracle, Literal>> work;
  for (const auto& c : cases()) work.emplace_back(oracle::Oracle(c.framework, c.kb.state), c.kb.conditionals.empty()
                                                      ? Literal::pos(c.kb.atoms.front().name())
                                                      : c.kb.conditionals.front().consequent);
  for (auto _ : state)
    for (const auto& [o, l] : work) benchmark::DoNotOptimize(parallel ? o.query(l) : o.query_serial(l));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(work.size()));
}

void BM_Battery(benchmark::State& state) {
  harness::RunOptions opts;
  opts.parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(harness::run_battery(opts));
}

void BM_BatteryOracle(benchmark::State& state) {
  harness::RunOptions opts;
  opts.parallel = state.range(0) != 0;
  opts.use_oracle = true;
  for (auto _ : state) benchmark::DoNotOptimize(harness::run_battery(opts));
}

void BM_Cohort(benchmark::State& state) {
  const bool parallel = state.range(0) != 0;
  harness::CohortPriors p;
  p.sample_count = 200000;
  const harness::CohortCase c{harness::Group::III, Literal::pos("e"), Literal::pos("l")};
  for (auto _ : state) benchmark::DoNotOptimize(harness::simulate_cohort(p, c, 1, parallel));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(p.sample_count));
}

}  // namespace

BENCHMARK(BM_OracleQuery)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Battery)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BatteryOracle)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Cohort)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
