// SPDX-License-Identifier: Apache-2.0
//
// rfvlc - outage and BER analysis of mixed RF-VLC relaying links
// Copyright (C) 2026 The rfvlc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "rfvlc/e2e.hpp"
#include "rfvlc/montecarlo.hpp"
#include "rfvlc/specfun.hpp"

#include <benchmark/benchmark.h>

using namespace rfvlc;

namespace
{

SystemConfig config(int m)
{
    SystemConfig cfg;
    cfg.rf = {3.1622776601683795, m, 10.0};
    cfg.vlc.optical_power = vlc::OpticalPower::total(0.1);
    cfg.outage_threshold = 3.0;
    return cfg;
}

void BM_MarcumQ(benchmark::State &state)
{
    const int m = static_cast<int>(state.range(0));
    double b = 0.5;
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(specfun::marcum_q(m, 2.5, b));
        b = b < 6.0 ? b + 0.01 : 0.5;
    }
}
BENCHMARK(BM_MarcumQ)->Arg(1)->Arg(4)->Arg(16);

void BM_MeijerG(benchmark::State &state)
{
    const double z = static_cast<double>(state.range(0)) / 10.0;
    for (auto _ : state)
        benchmark::DoNotOptimize(specfun::meijer_g_2122(-3.0, z));
}
BENCHMARK(BM_MeijerG)->Arg(1)->Arg(10)->Arg(1000);

void BM_RfAvgBer(benchmark::State &state)
{
    const rf::RfParams p{static_cast<double>(state.range(0)), 4, 10.0};
    for (auto _ : state)
        benchmark::DoNotOptimize(rf::rf_avg_ber(p));
}
BENCHMARK(BM_RfAvgBer)->Arg(0)->Arg(3)->Arg(30);

void BM_VlcAvgBer(benchmark::State &state)
{
    const auto d = vlc::derive(config(1).vlc);
    for (auto _ : state)
        benchmark::DoNotOptimize(vlc::vlc_avg_ber(d));
}
BENCHMARK(BM_VlcAvgBer);

void BM_OutageProbability(benchmark::State &state)
{
    const SystemConfig cfg = config(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(outage_probability(cfg));
}
BENCHMARK(BM_OutageProbability)->Arg(1)->Arg(4);

void BM_SimulateOutage(benchmark::State &state)
{
    const SystemConfig cfg = config(static_cast<int>(state.range(0)));
    std::uint64_t seed = 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(mc::simulate_outage(cfg, 100'000, seed++));
    state.SetItemsProcessed(state.iterations() * 100'000);
}
BENCHMARK(BM_SimulateOutage)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_SimulateBer(benchmark::State &state)
{
    const SystemConfig cfg = config(2);
    std::uint64_t seed = 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(mc::simulate_ber(cfg, 100'000, seed++));
    state.SetItemsProcessed(state.iterations() * 100'000);
}
BENCHMARK(BM_SimulateBer)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
