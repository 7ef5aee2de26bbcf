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

#include "rfvlc/rf_channel.hpp"

#include "rfvlc/errors.hpp"

#include <charconv>
#include <cmath>
#include <string>

namespace rfvlc::rf
{

namespace
{

// Short locale-independent rendering of a double for error messages.
std::string num(double v)
{
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 6);
    return std::string(buf, res.ptr);
}

void check_gamma(const char *fn, double gamma)
{
    if (!(gamma >= 0.0))
        throw DomainError(std::string(fn) + ": gamma must be >= 0");
}

// log of x^((M-1)/2) lambda^(-(M-1)/2) e^(-lambda-x) I_{M-1}(2 sqrt(lambda x)), lambda > 0, x > 0.
double log_bessel_kernel(int m, double lambda, double x)
{
    const double z = 2.0 * std::sqrt(lambda * x);
    const double scaled = specfun::bessel_i_int_scaled(m - 1, z);
    const double diff = std::sqrt(x) - std::sqrt(lambda); // -lambda - x + z = -(sqrt x - sqrt lambda)^2
    return 0.5 * (m - 1) * (std::log(x) - std::log(lambda)) - diff * diff + std::log(scaled);
}

} // namespace

void RfParams::validate() const
{
    if (!(k_factor >= 0.0) || !std::isfinite(k_factor))
        throw DomainError("RfParams: k_factor must be finite and >= 0");
    if (branches < 1)
        throw DomainError("RfParams: branches must be >= 1");
    if (!(avg_snr > 0.0) || !std::isfinite(avg_snr))
        throw DomainError("RfParams: avg_snr must be finite and > 0");
}

double rician_snr_pdf(double gamma, const RfParams &params)
{
    params.validate();
    check_gamma("rician_snr_pdf", gamma);
    const double k = params.k_factor;
    const double mu = params.avg_snr;
    const double x = (k + 1.0) * gamma / mu;
    if (std::isinf(x))
        return 0.0;
    if (k == 0.0)
        return std::exp(-x) / mu;
    // (K+1) e^-K / mu * e^-x * I_0(2 sqrt(K x))
    const double z = 2.0 * std::sqrt(k * x);
    const double diff = std::sqrt(x) - std::sqrt(k);
    return (k + 1.0) / mu * std::exp(-diff * diff) * specfun::bessel_i_int_scaled(0, z);
}

double mrc_snr_pdf(double gamma, const RfParams &params)
{
    params.validate();
    check_gamma("mrc_snr_pdf", gamma);
    const int m = params.branches;
    const double k = params.k_factor;
    const double mu = params.avg_snr;
    const double lambda = k * m;
    const double x = (k + 1.0) * gamma / mu;
    const double scale = (k + 1.0) / mu;

    if (std::isinf(x))
        return 0.0;
    if (x == 0.0)
        return m == 1 ? scale * std::exp(-lambda) : 0.0;
    if (k == 0.0)
        // Rayleigh limit: gamma density x^(M-1) e^-x / (M-1)!
        return scale * std::exp((m - 1) * std::log(x) - x - std::lgamma(static_cast<double>(m)));
    return scale * std::exp(log_bessel_kernel(m, lambda, x));
}

double mrc_snr_cdf(double gamma, const RfParams &params, const specfun::Accuracy &acc)
{
    params.validate();
    check_gamma("mrc_snr_cdf", gamma);
    const int m = params.branches;
    const double k = params.k_factor;
    // Standard Marcum-Q form; there is no (K M)^(1-M) prefactor here, which
    // would make F(0) = 1 - (K M)^(1-M) != 0 for M > 1.
    const double a = std::sqrt(2.0 * k * m);
    const double b = std::sqrt(2.0 * (k + 1.0) * gamma / params.avg_snr);
    return specfun::marcum_q_complement(m, a, b, acc);
}

double sample_mrc_snr(const RfParams &params, Rng &rng)
{
    const double k = params.k_factor;
    const double los = std::sqrt(k / (k + 1.0));
    std::normal_distribution<double> scatter(0.0, std::sqrt(0.5 / (k + 1.0)));
    double sum = 0.0;
    for (int i = 0; i < params.branches; ++i)
    {
        const double re = los + scatter(rng);
        const double im = scatter(rng);
        sum += re * re + im * im;
    }
    return params.avg_snr * sum;
}

double rf_avg_ber(const RfParams &params, const specfun::Accuracy &acc)
{
    params.validate();
    acc.validate();
    const int m = params.branches;
    const double lambda = params.k_factor * m;
    const double z = params.avg_snr / (params.k_factor + 1.0);

    // P = e^{-KM} / (2 sqrt(pi)) sum_k (KM)^k / (k! Gamma(M+k)) G^{2,1}_{2,2}[z | (1-k-M, 1); (0, 1/2)]
    //   = 1/2 sum_k Pois(k; KM) G_k / (sqrt(pi) Gamma(M+k)),
    // and G_k / (sqrt(pi) Gamma(M+k)) = mean_erfc_gamma(M+k, z) stays in (0, 1].
    // It decreases in k, so the tail is bounded by the current kernel value
    // times the remaining Poisson mass.
    double sum = 0.0;
    double cumulative = 0.0;
    for (int k = 0; k < acc.max_terms; ++k)
    {
        const double weight = specfun::poisson_pmf(k, lambda);
        const double kernel = specfun::mean_erfc_gamma(m + k, z);
        sum += weight * kernel;
        cumulative += weight;
        const double tail = specfun::poisson_tail_bound(k, lambda, weight, cumulative) * kernel;
        if (tail <= acc.rel_tol * sum)
            return 0.5 * sum;
    }
    throw ConvergenceError("rf_avg_ber: series did not reach rel_tol=" + num(acc.rel_tol) + " within " +
                           std::to_string(acc.max_terms) + " terms (K=" + num(params.k_factor) +
                           ", M=" + std::to_string(m) + ")");
}

} // namespace rfvlc::rf
