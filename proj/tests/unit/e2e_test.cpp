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

#include "oracles.hpp"

#include "rfvlc/e2e.hpp"
#include "rfvlc/errors.hpp"
#include "rfvlc/montecarlo.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

using namespace rfvlc;

namespace
{

SystemConfig make(double k, int m, double mu, double power, double threshold)
{
    SystemConfig cfg;
    cfg.rf = {k, m, mu};
    cfg.vlc.optical_power = vlc::OpticalPower::total(power);
    cfg.outage_threshold = threshold;
    return cfg;
}

constexpr double k5db = 3.1622776601683795;

} // namespace

TEST(SystemConfig, Validate)
{
    EXPECT_NO_THROW(make(1.0, 1, 1.0, 1.0, 1.0).validate());
    EXPECT_THROW(make(1.0, 1, 1.0, 1.0, 0.0).validate(), DomainError);
    EXPECT_THROW(make(1.0, 0, 1.0, 1.0, 1.0).validate(), DomainError);
    EXPECT_THROW(make(1.0, 1, 1.0, 1.0, NAN).validate(), DomainError);
}

TEST(E2eCdf, CollapsesOutsideVlcSupport)
{
    const SystemConfig cfg = make(k5db, 2, 1.0, 0.1, 1.0);
    const auto d = vlc::derive(cfg.vlc);
    const double g = 0.5 * d.snr_min;
    EXPECT_DOUBLE_EQ(e2e_cdf(g, cfg), rf::mrc_snr_cdf(g, cfg.rf));
    EXPECT_EQ(e2e_cdf(d.snr_max, cfg), 1.0);
    EXPECT_EQ(e2e_cdf(2.0 * d.snr_max, cfg), 1.0);
    EXPECT_THROW(e2e_cdf(-1.0, cfg), DomainError);
}

TEST(E2eCdf, SurvivalFactorizesAndBounds)
{
    for (int m : {1, 2, 4})
    {
        const SystemConfig cfg = make(k5db, m, 3.0, 0.1, 1.0);
        const auto d = vlc::derive(cfg.vlc);
        double prev = 0.0;
        for (double g = 0.0; g < 1.2 * d.snr_max; g += d.snr_max / 97.0)
        {
            const double f_rf = rf::mrc_snr_cdf(g, cfg.rf);
            const double f_vlc = vlc::vlc_snr_cdf(g, d);
            const double f = e2e_cdf(g, cfg);
            EXPECT_NEAR(1.0 - f, (1.0 - f_rf) * (1.0 - f_vlc), 1e-12);
            EXPECT_GE(f, std::max(f_rf, f_vlc) - 1e-15);
            EXPECT_LE(f, 1.0);
            EXPECT_GE(f, prev);
            prev = f;
        }
    }
}

TEST(E2eCdf, MatchesEmpiricalMinimum)
{
    const SystemConfig cfg = make(k5db, 2, 5.0, 0.1, 1.0);
    const auto d = vlc::derive(cfg.vlc);
    Rng rf_rng(21), vlc_rng(22);
    std::vector<double> xs(1'000'000);
    for (double &x : xs)
        x = std::min(rf::sample_mrc_snr(cfg.rf, rf_rng), vlc::sample_vlc_snr(d, vlc_rng));
    const double ks = oracle::ks_distance(xs, [&](double g) {
        const double a = rf::mrc_snr_cdf(g, cfg.rf);
        const double b = vlc::vlc_snr_cdf(g, d);
        return a + b - a * b;
    });
    EXPECT_LE(ks, oracle::ks_critical(xs.size(), 0.01));
}

TEST(Outage, Limits)
{
    const SystemConfig cfg = make(k5db, 2, 10.0, 0.1, 1e-9);
    EXPECT_LT(outage_probability(cfg), 1e-9);
    EXPECT_EQ(outage_floor(cfg), 0.0);
}

TEST(Outage, NonIncreasingInRfSnrAndPower)
{
    double prev = 1.0;
    for (double db = -10.0; db <= 50.0; db += 2.0)
    {
        const double p = outage_probability(make(k5db, 2, std::pow(10.0, db / 10.0), 0.1, 3.0));
        EXPECT_LE(p, prev) << "db=" << db;
        prev = p;
    }
    prev = 1.0;
    for (double power = 0.01; power < 2.0; power *= 1.2)
    {
        const double p = outage_probability(make(k5db, 2, 10.0, power, 3.0));
        EXPECT_LE(p, prev) << "P=" << power;
        prev = p;
    }
}

// P_out - F_vlc = F_rf (1 - F_vlc). With mu_rf = 1e6 gamma_th, F_rf is about
// (K+1) e^-K 1e-6 for one branch and O(1e-12) or less with diversity, so the
// relative gap is below 1e-6 whenever F_vlc is not small.
TEST(Outage, FloorAtHighRfSnr)
{
    for (int m : {1, 2, 4})
        for (double k : {k5db, 10.0})
            for (double power : {0.05, 0.1})
            {
                const double th = 3.0;
                const SystemConfig cfg = make(k, m, 1e6 * th, power, th);
                const double floor = outage_floor(cfg);
                EXPECT_EQ(floor, vlc::vlc_snr_cdf(th, vlc::derive(cfg.vlc)));
                EXPECT_LE(std::abs(outage_probability(cfg) - floor), 1e-6 * floor + 1e-12)
                    << "m=" << m << " K=" << k << " P=" << power;
            }
    for (int m : {2, 4})
    {
        const SystemConfig cfg = make(0.0, m, 1e6, 0.01, 1.0);
        const double floor = outage_floor(cfg);
        EXPECT_LE(std::abs(outage_probability(cfg) - floor), 1e-6 * floor + 1e-12) << "m=" << m;
    }
}

TEST(Outage, MonteCarloAgreement)
{
    const SystemConfig cfg = make(k5db, 1, 10.0, 0.1, 3.0);
    const double analytic = outage_probability(cfg);
    EXPECT_GT(analytic, 0.05);
    EXPECT_LT(analytic, 0.95);
    const auto est = mc::simulate_outage(cfg, 1'000'000, 99);
    EXPECT_LE(std::abs(est.estimate - analytic), 3.0 * est.std_error);
}

TEST(CombineDfBer, Algebra)
{
    EXPECT_EQ(combine_df_ber(0.5, 0.5), 0.5);
    EXPECT_EQ(combine_df_ber(0.0, 0.2), 0.2);
    EXPECT_EQ(combine_df_ber(0.3, 0.0), 0.3);
    for (double a : {0.0, 1e-6, 0.01, 0.2, 0.5})
        for (double b : {0.0, 1e-9, 0.05, 0.3, 0.5})
        {
            const double v = combine_df_ber(a, b);
            EXPECT_EQ(v, combine_df_ber(b, a));
            EXPECT_GE(v, std::max(a, b) * (1.0 - std::min(a, b)) - 1e-16);
            EXPECT_LE(v, 0.5);
        }
    EXPECT_THROW(combine_df_ber(-0.1, 0.1), DomainError);
    EXPECT_THROW(combine_df_ber(0.1, 1.5), DomainError);
    EXPECT_THROW(combine_df_ber(NAN, 0.1), DomainError);
}

TEST(E2eBer, CollapsesToRfAtHighPower)
{
    for (int m : {1, 2, 4})
    {
        const SystemConfig base = make(k5db, m, 10.0, 0.05, 1.0);
        const double rf_ber = rf::rf_avg_ber(base.rf);
        EXPECT_EQ(ber_floor(base), rf_ber);
        double prev = e2e_avg_ber(base);
        double power = 0.05;
        for (int i = 0; i < 4; ++i)
        {
            power *= 10.0;
            const double v = e2e_avg_ber(make(k5db, m, 10.0, power, 1.0));
            EXPECT_LE(v, prev);
            EXPECT_GE(v, rf_ber);
            prev = v;
        }
        EXPECT_LE(std::abs(prev - rf_ber), 1e-9) << "m=" << m;
    }
}

TEST(E2eBer, Range)
{
    for (double mu : {1e-3, 1.0, 100.0})
        for (double power : {1e-4, 0.01, 1.0})
        {
            const double v = e2e_avg_ber(make(k5db, 2, mu, power, 1.0));
            EXPECT_GE(v, 0.0);
            EXPECT_LE(v, 0.5);
        }
}

TEST(E2eBer, MonteCarloAgreement)
{
    for (int m : {1, 2, 4})
    {
        const SystemConfig cfg = make(k5db, m, 3.0, 0.1, 1.0);
        const double analytic = e2e_avg_ber(cfg);
        const auto est = mc::simulate_ber(cfg, 1'000'000, 5 + m);
        EXPECT_LE(std::abs(est.estimate - analytic), 3.0 * est.std_error) << "m=" << m;
    }
}

TEST(E2eBer, PropagatesConvergenceFailure)
{
    const SystemConfig cfg = make(100.0, 4, 1.0, 1.0, 1.0);
    EXPECT_THROW(e2e_avg_ber(cfg, {1e-10, 16}), ConvergenceError);
}
