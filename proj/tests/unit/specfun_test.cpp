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

#include "rfvlc/errors.hpp"
#include "rfvlc/specfun.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>

namespace sf = rfvlc::specfun;
namespace oracle = rfvlc::oracle;
using rfvlc::DomainError;

TEST(Accuracy, Validate)
{
    EXPECT_NO_THROW(sf::Accuracy{}.validate());
    EXPECT_THROW((sf::Accuracy{0.0, 512}.validate()), DomainError);
    EXPECT_THROW((sf::Accuracy{1e-2, 512}.validate()), DomainError);
    EXPECT_THROW((sf::Accuracy{1e-10, 15}.validate()), DomainError);
    EXPECT_NO_THROW((sf::Accuracy{1e-3, 16}.validate()));
}

TEST(BesselI, TrivialValues)
{
    EXPECT_EQ(sf::bessel_i_int(0, 0.0), 1.0);
    EXPECT_EQ(sf::bessel_i_int(1, 0.0), 0.0);
    EXPECT_EQ(sf::bessel_i_int(5, 0.0), 0.0);
}

TEST(BesselI, MatchesPowerSeries)
{
    for (int n = 0; n <= 8; ++n)
        for (double x : {1e-3, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 17.3, 25.0, 30.0})
        {
            const double ref = oracle::bessel_i_series(n, x, 80);
            EXPECT_LE(oracle::relative_error(sf::bessel_i_int(n, x), ref), 1e-10) << "n=" << n << " x=" << x;
        }
}

TEST(BesselI, KnownValues)
{
    // mpmath, 30 digits
    EXPECT_NEAR(sf::bessel_i_int(0, 1.0), 1.26606587775200833559824462521, 1e-15);
    EXPECT_NEAR(sf::bessel_i_int(1, 5.0) / 24.3356421424505271936, 1.0, 1e-14);
    EXPECT_NEAR(sf::bessel_i_int_scaled(0, 700.0) / 0.0150812956515313575, 1.0, 1e-12);
}

TEST(BesselI, ScaledAgreesWithLongDoubleForLargeArguments)
{
    for (int n : {0, 1, 3, 10})
        for (double x : {50.0, 400.0, 800.0, 999.0, 1001.0, 3000.0, 10000.0})
        {
            const long double ref =
                std::cyl_bessel_il(static_cast<long double>(n), static_cast<long double>(x)) * std::exp(-static_cast<long double>(x));
            EXPECT_LE(oracle::relative_error(sf::bessel_i_int_scaled(n, x), static_cast<double>(ref)), 1e-11)
                << "n=" << n << " x=" << x;
        }
}

TEST(BesselI, Errors)
{
    EXPECT_THROW(sf::bessel_i_int(0, -1.0), DomainError);
    EXPECT_THROW(sf::bessel_i_int(-1, 1.0), DomainError);
    EXPECT_THROW(sf::bessel_i_int(0, std::nan("")), DomainError);
    EXPECT_THROW(sf::bessel_i_int(0, 800.0), std::overflow_error);
    EXPECT_NO_THROW(sf::bessel_i_int_scaled(0, 800.0));
}

TEST(MarcumQ, ZeroThresholdIsOne)
{
    for (int m : {1, 2, 3, 5, 10})
        for (double a : {0.0, 0.1, 1.0, 5.0, 30.0})
            EXPECT_NEAR(sf::marcum_q(m, a, 0.0), 1.0, 1e-12) << "m=" << m << " a=" << a;
}

TEST(MarcumQ, CentralCase)
{
    EXPECT_NEAR(sf::marcum_q(1, 0.0, 1.0), std::exp(-0.5), 1e-14);
    // Q_M(0, b) = Gamma(M, b^2/2) / Gamma(M)
    EXPECT_NEAR(sf::marcum_q(3, 0.0, 2.0), std::exp(-2.0) * (1.0 + 2.0 + 2.0), 1e-14);
}

TEST(MarcumQ, MatchesDefiningIntegral)
{
    EXPECT_LE(oracle::relative_error(sf::marcum_q(2, 1.0, 1.0), oracle::marcum_q_quadrature(2, 1.0, 1.0)), 1e-10);
    EXPECT_NEAR(sf::marcum_q(2, 1.0, 1.0), 0.940790219146528667, 1e-14);
    for (int m : {1, 2, 4})
        for (double a : {0.3, 1.0, 2.5, 6.0})
            for (double b : {0.2, 1.0, 3.0, 7.0})
            {
                const double ref = oracle::marcum_q_quadrature(m, a, b);
                EXPECT_LE(oracle::relative_error(sf::marcum_q(m, a, b), ref), 1e-9)
                    << "m=" << m << " a=" << a << " b=" << b;
            }
}

TEST(MarcumQ, ComplementIsAccurateNearZero)
{
    // 1 - Q_4(1, 0.05) ~ 1e-9: the direct difference would lose every digit.
    const double lower = 1.0 - oracle::marcum_q_quadrature(4, 1.0, 0.05);
    auto density = [](double x) {
        return x * std::pow(x, 3) * std::exp(-0.5 * (x * x + 1.0)) * std::cyl_bessel_i(3.0, x);
    };
    const double ref = oracle::integrate(density, 0.0, 0.05);
    EXPECT_LE(oracle::relative_error(sf::marcum_q_complement(4, 1.0, 0.05), ref), 1e-9);
    EXPECT_NEAR(sf::marcum_q_complement(4, 1.0, 0.05), lower, 1e-12);
}

TEST(MarcumQ, ComplementSumsToOne)
{
    for (int m : {1, 3})
        for (double a : {0.0, 1.0, 4.0})
            for (double b : {0.5, 2.0, 5.0})
                EXPECT_NEAR(sf::marcum_q(m, a, b) + sf::marcum_q_complement(m, a, b), 1.0, 1e-13);
}

TEST(MarcumQ, MonotoneInB)
{
    for (int m : {1, 2, 4, 8})
        for (double a : {0.0, 0.7, 3.0, 12.0})
        {
            double prev = 1.0;
            for (int i = 0; i <= 400; ++i)
            {
                const double q = sf::marcum_q(m, a, 0.05 * i);
                EXPECT_LE(q, prev) << "m=" << m << " a=" << a << " b=" << 0.05 * i;
                EXPECT_GE(q, 0.0);
                prev = q;
            }
        }
}

TEST(MarcumQ, Errors)
{
    EXPECT_THROW(sf::marcum_q(0, 1.0, 1.0), DomainError);
    EXPECT_THROW(sf::marcum_q(1, -1.0, 1.0), DomainError);
    EXPECT_THROW(sf::marcum_q(1, 1.0, -1.0), DomainError);
    EXPECT_THROW(sf::marcum_q(1, std::nan(""), 1.0), DomainError);
    EXPECT_THROW(sf::marcum_q_complement(1, 1.0, -0.1), DomainError);
}

TEST(Erfc, Values)
{
    EXPECT_EQ(sf::erfc(0.0), 1.0);
    for (double x : {0.1, 0.5, 1.0, 2.0, 4.0})
        EXPECT_NEAR(sf::erfc(x) + sf::erfc(-x), 2.0, 1e-15);
    EXPECT_LE(oracle::relative_error(sf::erfc(1.0), oracle::erfc_quadrature(1.0)), 1e-12);
    EXPECT_LE(oracle::relative_error(sf::erfc(3.5), oracle::erfc_quadrature(3.5)), 1e-11);
    double prev = 2.0;
    for (double x = -5.0; x <= 5.0; x += 0.125)
    {
        EXPECT_LT(sf::erfc(x), prev);
        prev = sf::erfc(x);
    }
    EXPECT_THROW(sf::erfc(std::nan("")), DomainError);
}

TEST(UpperIncGamma, Values)
{
    for (double x : {0.0, 0.3, 1.0, 7.0, 40.0})
        EXPECT_LE(oracle::relative_error(sf::upper_inc_gamma(1.0, x), std::exp(-x)), 1e-13);
    for (double s : {0.25, 0.5, 1.5, 4.0, 10.5})
        EXPECT_LE(oracle::relative_error(sf::upper_inc_gamma(s, 0.0), std::tgamma(s)), 1e-13);
    EXPECT_LE(oracle::relative_error(sf::upper_inc_gamma(0.5, 1.0), oracle::upper_inc_gamma_quadrature(0.5, 1.0)),
              1e-11);
    EXPECT_NEAR(sf::upper_inc_gamma(0.5, 1.0), std::sqrt(std::numbers::pi) * std::erfc(1.0), 1e-14);
    for (double s : {0.2, 0.5, 0.9, 2.3})
        for (double x : {0.01, 0.5, 2.0, 10.0, 100.0})
            EXPECT_LE(oracle::relative_error(sf::upper_inc_gamma(s, x), oracle::upper_inc_gamma_quadrature(s, x)),
                      1e-10)
                << "s=" << s << " x=" << x;
}

TEST(UpperIncGamma, NonIncreasingAndErrors)
{
    double prev = sf::upper_inc_gamma(0.4, 0.0);
    for (double x = 0.05; x < 60.0; x *= 1.3)
    {
        const double v = sf::upper_inc_gamma(0.4, x);
        EXPECT_LE(v, prev);
        EXPECT_GE(v, 0.0);
        prev = v;
    }
    EXPECT_THROW(sf::upper_inc_gamma(0.0, 1.0), DomainError);
    EXPECT_THROW(sf::upper_inc_gamma(-1.0, 1.0), DomainError);
    EXPECT_THROW(sf::upper_inc_gamma(1.0, -1.0), DomainError);
}

TEST(ErfcMoment, ClosedForm)
{
    EXPECT_NEAR(sf::erfc_moment(1.0, 3.0), 1.0 / 6.0, 1e-15);
    EXPECT_LE(oracle::relative_error(oracle::erfc_moment_quadrature(1.0, 3.0), 1.0 / 6.0), 1e-12);
    for (double a : {0.01, 0.5, 2.0, 1e3, 1e8})
        EXPECT_LE(oracle::relative_error(sf::erfc_moment(1.0, a), (1.0 - 1.0 / std::sqrt(1.0 + a)) / a), 1e-12);
    EXPECT_LT(sf::erfc_moment(1.0, 1e12), 1e-11);
}

TEST(ErfcMoment, MatchesQuadrature)
{
    EXPECT_LE(oracle::relative_error(sf::erfc_moment(2.0, 1.0), oracle::erfc_moment_quadrature(2.0, 1.0)), 1e-10);
    for (double n : {0.5, 1.0, 1.5, 2.0, 3.0, 4.0, 5.0, 6.0, 9.5})
        for (double a : {0.5, 1.0, 3.0, 10.0})
            EXPECT_LE(oracle::relative_error(sf::erfc_moment(n, a), oracle::erfc_moment_quadrature(n, a)), 1e-8)
                << "n=" << n << " a=" << a;
}

TEST(ErfcMoment, DecreasingInAAndErrors)
{
    double prev = std::numeric_limits<double>::infinity();
    for (double a = 0.01; a < 1e4; a *= 1.7)
    {
        const double v = sf::erfc_moment(3.0, a);
        EXPECT_GT(v, 0.0);
        EXPECT_LT(v, prev);
        prev = v;
    }
    EXPECT_THROW(sf::erfc_moment(0.0, 1.0), DomainError);
    EXPECT_THROW(sf::erfc_moment(1.0, 0.0), DomainError);
    EXPECT_THROW(sf::erfc_moment(-2.0, 1.0), DomainError);
}

TEST(MeijerG, SpotValues)
{
    const double rp = std::sqrt(std::numbers::pi);
    EXPECT_NEAR(sf::meijer_g_2122(0.0, 1.0 / 3.0), rp / 2.0, 1e-14);
    EXPECT_NEAR(sf::meijer_g_2122(0.0, 1.0), rp * (1.0 - 1.0 / std::sqrt(2.0)), 1e-14);
    // n = 1 closes to sqrt(pi) (1 - sqrt(z / (1 + z))), so the approach to sqrt(pi) is like sqrt(z)
    for (double z : {1e-14, 1e-8, 0.01, 5.0, 1e6})
        EXPECT_NEAR(sf::meijer_g_2122(0.0, z), rp * (1.0 - std::sqrt(z / (1.0 + z))), 1e-14 * rp) << "z=" << z;
    EXPECT_NEAR(sf::meijer_g_2122(0.0, 1e-14), rp, 1e-6);
}

TEST(MeijerG, KnownValues)
{
    // mpmath meijerg([[1-n],[]],[[0,0.5],[]],z)
    struct Case
    {
        int n;
        double z;
        double value;
    };
    for (const Case &c : {Case{1, 2.0, 0.32525134178898071}, Case{1, 0.1, 1.238038907116959},
                          Case{3, 2.0, 0.047501638112738368}, Case{3, 0.1, 1.658997115053066},
                          Case{6, 2.0, 0.077968480528346097}, Case{6, 0.1, 62.706737533648946}})
        EXPECT_LE(oracle::relative_error(sf::meijer_g_2122(1.0 - c.n, c.z), c.value), 1e-13) << "n=" << c.n;
}

TEST(MeijerG, ErfcMomentIdentity)
{
    const double rp = std::sqrt(std::numbers::pi);
    for (int n = 1; n <= 6; ++n)
        for (double a : {0.5, 1.0, 3.0, 10.0})
        {
            const double g = sf::meijer_g_2122(1.0 - n, 1.0 / a);
            const double rhs = rp * std::pow(a, n) * oracle::erfc_moment_quadrature(n, a);
            EXPECT_LE(oracle::relative_error(g, rhs), 1e-8) << "n=" << n << " a=" << a;
        }
}

TEST(MeijerG, Errors)
{
    EXPECT_THROW(sf::meijer_g_2122(0.0, 0.0), DomainError);
    EXPECT_THROW(sf::meijer_g_2122(0.0, -1.0), DomainError);
    EXPECT_THROW(sf::meijer_g_2122(0.5, 1.0), DomainError);
    EXPECT_THROW(sf::meijer_g_2122(1.0, 1.0), DomainError);
}

TEST(MeanErfcGamma, BothRoutesMatchQuadrature)
{
    // Route switch sits at n z = 4; cover both sides of it.
    for (double n : {1.0, 2.0, 5.0, 20.0, 100.0})
        for (double nz : {0.01, 0.5, 3.9, 4.1, 10.0, 100.0})
        {
            const double z = nz / n;
            // E[erfc(sqrt(z U))], U ~ Gamma(n, 1), with the density in the log domain
            auto f = [n, z](double u) {
                if (u == 0.0)
                    return n == 1.0 ? 1.0 : 0.0;
                return std::exp((n - 1.0) * std::log(u) - u - std::lgamma(n)) * std::erfc(std::sqrt(z * u));
            };
            const double ref = oracle::integrate_to_inf(f, 0.0, n);
            EXPECT_LE(oracle::relative_error(sf::mean_erfc_gamma(n, z), ref), 1e-9) << "n=" << n << " z=" << z;
        }
}

TEST(MeanErfcGamma, Limits)
{
    EXPECT_EQ(sf::mean_erfc_gamma(3.0, 0.0), 1.0);
    const double v = sf::mean_erfc_gamma(40.0, 50.0);
    EXPECT_GT(v, 0.0);
    EXPECT_LT(v, 1e-60);
    EXPECT_THROW(sf::mean_erfc_gamma(0.0, 1.0), DomainError);
    EXPECT_THROW(sf::mean_erfc_gamma(1.0, -1.0), DomainError);
}

TEST(Poisson, PmfAndTail)
{
    EXPECT_EQ(sf::poisson_pmf(0, 0.0), 1.0);
    EXPECT_EQ(sf::poisson_pmf(3, 0.0), 0.0);
    EXPECT_NEAR(sf::poisson_pmf(2, 1.5), 1.125 * std::exp(-1.5), 1e-16);
    double cumulative = 0.0;
    for (int k = 0; k < 40; ++k)
    {
        const double pmf = sf::poisson_pmf(k, 6.0);
        cumulative += pmf;
        double exact_tail = 0.0;
        for (int j = k + 1; j < 200; ++j)
            exact_tail += sf::poisson_pmf(j, 6.0);
        EXPECT_GE(sf::poisson_tail_bound(k, 6.0, pmf, cumulative), exact_tail * (1.0 - 1e-12)) << "k=" << k;
    }
}
