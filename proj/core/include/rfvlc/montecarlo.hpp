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

#ifndef RFVLC_MONTECARLO_HPP
#define RFVLC_MONTECARLO_HPP

// Seed-deterministic Monte Carlo estimators for outage probability and
// average BER.
//
// Trials are split into fixed-size chunks. Chunk c draws its RF and VLC SNRs
// from two independent substreams derived from (seed, c), and per-chunk
// partial results are merged in chunk order. The worker count therefore only
// changes which thread runs a chunk, never the numbers produced.

#include "rfvlc/e2e.hpp"

#include <cstdint>

namespace rfvlc::mc
{

inline constexpr std::uint64_t chunk_trials = 1u << 16;
inline constexpr std::uint64_t min_trials = 1000;
inline constexpr std::uint64_t default_trials = 1'000'000;

struct EstimateWithError
{
    double estimate = 0.0;
    double std_error = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;

    // Estimates below 100 / trials rest on too few events to be trusted.
    bool reliable() const { return estimate * static_cast<double>(trials) >= 100.0; }
};

// Semi-analytic BER estimate with its per-hop components.
struct BerEstimate
{
    EstimateWithError combined;
    EstimateWithError rf;
    EstimateWithError vlc;
};

// Independent engine for substream `index` of `seed`.
Rng substream(std::uint64_t seed, std::uint64_t index);

// Fraction of trials with min(gamma_rf, gamma_vlc) < gamma_th; binomial standard error.
EstimateWithError simulate_outage(const SystemConfig &cfg, std::uint64_t trials, std::uint64_t seed,
                                  unsigned workers = 1);

// Averages erfc(sqrt(gamma))/2 over channel draws on each hop and combines the
// two hop estimates with combine_df_ber. The standard error is propagated to
// first order.
BerEstimate simulate_ber_detailed(const SystemConfig &cfg, std::uint64_t trials, std::uint64_t seed,
                                  unsigned workers = 1);

EstimateWithError simulate_ber(const SystemConfig &cfg, std::uint64_t trials, std::uint64_t seed,
                               unsigned workers = 1);

} // namespace rfvlc::mc

#endif
