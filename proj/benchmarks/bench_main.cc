// Copyright 2026 The cvtele Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "benchmark/benchmark.h"
#include "cvtele/fock.h"
#include "cvtele/ideal.h"
#include "cvtele/noise.h"
#include "cvtele/noisy.h"
#include "cvtele/oracle.h"
#include "cvtele/sweep.h"

using namespace cvtele;

static void BM_transfer_profile_qutrit(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(transfer_profile_qutrit(n));
}
BENCHMARK(BM_transfer_profile_qutrit)->Arg(3)->Arg(10)->Arg(64);

static void BM_teleport_pure(benchmark::State &state) {
    const FockVector in = coherent(1.5, 40);
    const TransferProfile profile = transfer_profile_qutrit(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(teleport_pure(in, profile));
}
BENCHMARK(BM_teleport_pure)->Arg(3)->Arg(10);

static void BM_noisy_recombine(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const KrausSet k = kraus_set(NoiseKind::kDepolarizing, 0.2);
    for (auto _ : state) benchmark::DoNotOptimize(recombine(arm_output(arm_input(1.0, n), k), n));
}
BENCHMARK(BM_noisy_recombine)->Arg(2)->Arg(3)->Arg(10);

static void BM_noisy_oracle(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const KrausSet k = kraus_set(NoiseKind::kDepolarizing, 0.2);
    for (auto _ : state) benchmark::DoNotOptimize(oracle::simulate_noisy_exact(1.0, n, k));
}
BENCHMARK(BM_noisy_oracle)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_log_negativity(benchmark::State &state) {
    for (auto _ : state) benchmark::DoNotOptimize(log_negativity(NoiseKind::kPhaseFlip, 0.1));
}
BENCHMARK(BM_log_negativity);

static void BM_noisy_sweep(benchmark::State &state) {
    SweepSpec spec = default_spec(SweepMode::kNoisy);
    spec.jobs = 1;
    spec.param.steps = 11;
    for (auto _ : state) benchmark::DoNotOptimize(run_noisy(spec));
}
BENCHMARK(BM_noisy_sweep)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
