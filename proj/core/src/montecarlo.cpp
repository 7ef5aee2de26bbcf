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

#include "rfvlc/montecarlo.hpp"

#include "rfvlc/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace rfvlc::mc
{

namespace
{

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

void check_trials(const char *fn, std::uint64_t trials)
{
    if (trials < min_trials)
        throw std::invalid_argument(std::string(fn) + ": trials must be >= " + std::to_string(min_trials));
}

std::uint64_t chunk_count(std::uint64_t trials) { return (trials + chunk_trials - 1) / chunk_trials; }

std::uint64_t chunk_size(std::uint64_t trials, std::uint64_t chunk)
{
    return std::min(chunk_trials, trials - chunk * chunk_trials);
}

// Runs body(chunk) for every chunk on up to `workers` threads.
template <class Body>
void for_each_chunk(std::uint64_t chunks, unsigned workers, Body body)
{
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::min<std::uint64_t>(chunks, 1024))));
    if (workers == 1)
    {
        for (std::uint64_t c = 0; c < chunks; ++c)
            body(c);
        return;
    }

    std::atomic<std::uint64_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            try
            {
                for (std::uint64_t c = next++; c < chunks; c = next++)
                    body(c);
            }
            catch (...)
            {
                errors[w] = std::current_exception();
            }
        });
    for (auto &t : pool)
        t.join();
    for (auto &e : errors)
        if (e)
            std::rethrow_exception(e);
}

// Mean and sum of squared deviations, merged pairwise (Chan et al.).
struct Moments
{
    double n = 0.0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x)
    {
        n += 1.0;
        const double delta = x - mean;
        mean += delta / n;
        m2 += delta * (x - mean);
    }

    void merge(const Moments &o)
    {
        if (o.n == 0.0)
            return;
        const double total = n + o.n;
        const double delta = o.mean - mean;
        mean += delta * o.n / total;
        m2 += o.m2 + delta * delta * n * o.n / total;
        n = total;
    }

    double std_error() const { return n > 1.0 ? std::sqrt(m2 / (n - 1.0) / n) : 0.0; }
};

double conditional_ber(double gamma) { return 0.5 * std::erfc(std::sqrt(gamma)); }

} // namespace

Rng substream(std::uint64_t seed, std::uint64_t index)
{
    return Rng(splitmix64(splitmix64(seed) ^ splitmix64(~index)));
}

EstimateWithError simulate_outage(const SystemConfig &cfg, std::uint64_t trials, std::uint64_t seed,
                                  unsigned workers)
{
    check_trials("simulate_outage", trials);
    cfg.validate();
    const vlc::VlcDerived derived = vlc::derive(cfg.vlc);
    const double threshold = cfg.outage_threshold;

    const std::uint64_t chunks = chunk_count(trials);
    std::vector<std::uint64_t> outages(chunks, 0);
    for_each_chunk(chunks, workers, [&](std::uint64_t c) {
        Rng rf_rng = substream(seed, 2 * c);
        Rng vlc_rng = substream(seed, 2 * c + 1);
        std::uint64_t count = 0;
        for (std::uint64_t i = 0, n = chunk_size(trials, c); i < n; ++i)
        {
            const double g_rf = rf::sample_mrc_snr(cfg.rf, rf_rng);
            const double g_vlc = vlc::sample_vlc_snr(derived, vlc_rng);
            if (std::min(g_rf, g_vlc) < threshold)
                ++count;
        }
        outages[c] = count;
    });

    std::uint64_t total = 0;
    for (std::uint64_t count : outages)
        total += count;
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(total) / n;
    return {p, std::sqrt(p * (1.0 - p) / n), trials, seed};
}

BerEstimate simulate_ber_detailed(const SystemConfig &cfg, std::uint64_t trials, std::uint64_t seed,
                                  unsigned workers)
{
    check_trials("simulate_ber", trials);
    cfg.validate();
    const vlc::VlcDerived derived = vlc::derive(cfg.vlc);

    const std::uint64_t chunks = chunk_count(trials);
    std::vector<Moments> rf_parts(chunks), vlc_parts(chunks);
    for_each_chunk(chunks, workers, [&](std::uint64_t c) {
        Rng rf_rng = substream(seed, 2 * c);
        Rng vlc_rng = substream(seed, 2 * c + 1);
        Moments rf_m, vlc_m;
        for (std::uint64_t i = 0, n = chunk_size(trials, c); i < n; ++i)
        {
            rf_m.add(conditional_ber(rf::sample_mrc_snr(cfg.rf, rf_rng)));
            vlc_m.add(conditional_ber(vlc::sample_vlc_snr(derived, vlc_rng)));
        }
        rf_parts[c] = rf_m;
        vlc_parts[c] = vlc_m;
    });

    Moments rf_all, vlc_all;
    for (std::uint64_t c = 0; c < chunks; ++c)
    {
        rf_all.merge(rf_parts[c]);
        vlc_all.merge(vlc_parts[c]);
    }

    const double p_rf = rf_all.mean;
    const double p_vlc = vlc_all.mean;
    const double se_rf = rf_all.std_error();
    const double se_vlc = vlc_all.std_error();
    // d/dp_rf = 1 - 2 p_vlc, d/dp_vlc = 1 - 2 p_rf
    const double se = std::hypot((1.0 - 2.0 * p_vlc) * se_rf, (1.0 - 2.0 * p_rf) * se_vlc);

    BerEstimate out;
    out.combined = {combine_df_ber(p_rf, p_vlc), se, trials, seed};
    out.rf = {p_rf, se_rf, trials, seed};
    out.vlc = {p_vlc, se_vlc, trials, seed};
    return out;
}

EstimateWithError simulate_ber(const SystemConfig &cfg, std::uint64_t trials, std::uint64_t seed, unsigned workers)
{
    return simulate_ber_detailed(cfg, trials, seed, workers).combined;
}

} // namespace rfvlc::mc
