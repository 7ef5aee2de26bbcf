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

#include "rfvlc/specfun.hpp"

#include "rfvlc/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace rfvlc::specfun
{

namespace
{

constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr double log_sqrt_pi = 0.5723649429247000870717136756012478; // log(sqrt(pi))
constexpr double tiny = 1e-300;

// Hard cap for inner series whose length grows with the argument rather than
// with the requested tolerance (Bessel power series, 2F1 near w = 1).
constexpr long inner_cap = 2'000'000;

// Short locale-independent rendering of a double for error messages.
std::string num(double v)
{
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 6);
    return std::string(buf, res.ptr);
}

void require(bool ok, const char *fn, const std::string &what)
{
    if (!ok)
        throw DomainError(std::string(fn) + ": " + what);
}

struct GammaTails
{
    double lower; // P(n, y)
    double upper; // Q(n, y)
};

// Regularized incomplete gamma functions for integer order n >= 1. The tail
// that is small is summed directly; the other one is its complement.
GammaTails gamma_tails_int(int n, double y)
{
    if (y == 0.0)
        return {0.0, 1.0};

    if (y < n)
    {
        // P(n, y) = exp(-y) y^n / n! * sum_j y^j / ((n+1)...(n+j))
        double term = 1.0, sum = 1.0;
        for (long j = 1; j < inner_cap; ++j)
        {
            term *= y / (n + j);
            sum += term;
            if (term < eps * sum)
                break;
        }
        const double p = std::exp(n * std::log(y) - y - std::lgamma(n + 1.0)) * sum;
        return {p, 1.0 - p};
    }

    // Q(n, y) = exp(-y) sum_{j<n} y^j / j!; the j = n-1 term is the largest.
    double term = 1.0, sum = 1.0;
    for (int j = n - 1; j > 0; --j)
    {
        term *= j / y;
        sum += term;
        if (term < eps * sum)
            break;
    }
    const double q = std::exp((n - 1) * std::log(y) - y - std::lgamma(static_cast<double>(n))) * sum;
    return {1.0 - q, q};
}

enum class MarcumTail
{
    upper, // Q_M
    lower  // 1 - Q_M
};

// Q_M(a, b) = sum_k Pois(k; a^2/2) Q(M + k, b^2/2), and the matching lower
// tail with P in place of Q. Truncation uses a rigorous bound on the tail:
// Q(M+k, y) increases towards 1 with k while P(M+k, y) decreases.
double marcum_series(int m, double a, double b, MarcumTail tail, const Accuracy &acc)
{
    const double lambda = 0.5 * a * a;
    const double y = 0.5 * b * b;
    const double tol = std::min(acc.rel_tol, 1e-14);

    double sum = 0.0;
    double cumulative = 0.0;
    for (int k = 0; k < acc.max_terms; ++k)
    {
        const double weight = poisson_pmf(k, lambda);
        const GammaTails g = gamma_tails_int(m + k, y);
        const double factor = tail == MarcumTail::upper ? g.upper : g.lower;
        sum += weight * factor;
        cumulative += weight;

        const double remaining = poisson_tail_bound(k, lambda, weight, cumulative);
        const double tail_bound = tail == MarcumTail::upper ? remaining : remaining * factor;
        if (tail_bound <= tol * sum)
            return std::clamp(sum, 0.0, 1.0);
    }
    throw ConvergenceError("marcum_q: no convergence within " + std::to_string(acc.max_terms) +
                           " terms (M=" + std::to_string(m) + ", a=" + num(a) +
                           ", b=" + num(b) + ")");
}

void check_marcum_args(const char *fn, int m, double a, double b, const Accuracy &acc)
{
    require(m >= 1, fn, "order M must be >= 1");
    require(a >= 0.0 && std::isfinite(a), fn, "a must be finite and >= 0");
    require(b >= 0.0 && !std::isnan(b), fn, "b must be >= 0");
    acc.validate();
}

// Route for small n z: the two-residue form 1 - c * 2F1(n+1/2, 1; 3/2; x)
// after a Pfaff transformation of the -z argument, x = z / (1 + z).
double mean_erfc_gamma_small(double n, double z)
{
    const double x = z / (1.0 + z);
    double term = 1.0, sum = 1.0;
    for (long k = 0; k < inner_cap; ++k)
    {
        const double ratio = (n + 0.5 + k) * x / (1.5 + k);
        term *= ratio;
        sum += term;
        if (ratio < 1.0 && term * ratio / (1.0 - ratio) < eps * sum)
            return 1.0 - std::exp(std::log(2.0) + std::lgamma(n + 0.5) - std::lgamma(n) - log_sqrt_pi -
                                  n * std::log1p(z) + 0.5 * std::log(x)) *
                             sum;
    }
    throw ConvergenceError("mean_erfc_gamma: 2F1(n+1/2, 1; 3/2; x) did not converge");
}

// Route for large n z: Gamma(n+1/2)/(sqrt(pi) Gamma(n+1)) w^n 2F1(1/2, n; n+1; w), w = 1/(1+z).
// All terms are positive.
double mean_erfc_gamma_large(double n, double z)
{
    const double w = 1.0 / (1.0 + z);
    double pochhammer = 1.0; // (1/2)_k w^k / k!
    double sum = 1.0;
    for (long k = 1; k < inner_cap; ++k)
    {
        pochhammer *= (k - 0.5) / k * w;
        const double term = pochhammer * n / (n + k);
        sum += term;
        if (term * w / (1.0 - w) < eps * sum)
            return std::exp(std::lgamma(n + 0.5) - std::lgamma(n + 1.0) - log_sqrt_pi - n * std::log1p(z)) * sum;
    }
    throw ConvergenceError("mean_erfc_gamma: 2F1(1/2, n; n+1; w) did not converge");
}

} // namespace

void Accuracy::validate() const
{
    if (!(rel_tol > 0.0 && rel_tol <= 1e-3))
        throw DomainError("Accuracy: rel_tol must lie in (0, 1e-3]");
    if (max_terms < 16)
        throw DomainError("Accuracy: max_terms must be >= 16");
}

double poisson_pmf(int k, double lambda)
{
    if (lambda == 0.0)
        return k == 0 ? 1.0 : 0.0;
    return std::exp(k * std::log(lambda) - lambda - std::lgamma(k + 1.0));
}

double poisson_tail_bound(int k, double lambda, double pmf_k, double cumulative)
{
    double remaining = std::max(1.0 - cumulative, 0.0);
    if (k + 2 > lambda)
    {
        // Pois(j) for j > k is dominated by a geometric series with ratio lambda/(k+2).
        const double next = pmf_k * lambda / (k + 1);
        remaining = std::min(remaining, next / (1.0 - lambda / (k + 2)));
    }
    return remaining;
}

double bessel_i_int_scaled(int order, double x)
{
    require(order >= 0, "bessel_i_int", "order must be >= 0");
    require(x >= 0.0 && !std::isnan(x), "bessel_i_int", "x must be >= 0");
    if (x == 0.0)
        return order == 0 ? 1.0 : 0.0;
    if (std::isinf(x))
        return 0.0;

    const double n = order;

    if (x > 1000.0 && 4.0 * n * n < x)
    {
        // Hankel expansion: e^-x I_n(x) ~ (2 pi x)^-1/2 sum_k (-1)^k a_k(n) / x^k.
        const double mu = 4.0 * n * n;
        double term = 1.0, sum = 1.0;
        for (int k = 1; k < 60; ++k)
        {
            const double next = -term * (mu - (2.0 * k - 1) * (2.0 * k - 1)) / (8.0 * k * x);
            if (std::abs(next) > std::abs(term))
                break;
            term = next;
            sum += term;
            if (std::abs(term) < eps * std::abs(sum))
                break;
        }
        return sum / std::sqrt(2.0 * std::numbers::pi * x);
    }

    // Power series sum_k (x/2)^(2k+n) / (k! (k+n)!). All terms are positive;
    // the running sum is rescaled to stay finite for large x.
    const double q = 0.25 * x * x;
    double log_scale = n * std::log(0.5 * x) - std::lgamma(n + 1.0) - x;
    double term = 1.0, sum = 1.0;
    for (long k = 0; k < inner_cap; ++k)
    {
        const double ratio = q / ((k + 1.0) * (k + 1.0 + n));
        term *= ratio;
        sum += term;
        if (ratio < 0.5 && term < 0.5 * eps * sum)
            return std::exp(log_scale + std::log(sum));
        if (sum > 1e280)
        {
            sum *= 1e-280;
            term *= 1e-280;
            log_scale += 280.0 * std::numbers::ln10;
        }
    }
    throw ConvergenceError("bessel_i_int: power series did not converge");
}

double bessel_i_int(int order, double x)
{
    const double scaled = bessel_i_int_scaled(order, x);
    if (scaled == 0.0)
        return 0.0;
    const double log_value = std::log(scaled) + x;
    if (log_value > std::log(std::numeric_limits<double>::max()))
        throw std::overflow_error("bessel_i_int: result overflows double (x=" + num(x) + ")");
    return std::exp(log_value);
}

double marcum_q(int m, double a, double b, const Accuracy &acc)
{
    check_marcum_args("marcum_q", m, a, b, acc);
    if (b == 0.0)
        return 1.0;
    if (std::isinf(b))
        return 0.0;
    // Sum whichever tail is the smaller one so that neither loses relative accuracy.
    if (0.5 * b * b < 0.5 * a * a + m)
        return 1.0 - marcum_series(m, a, b, MarcumTail::lower, acc);
    return marcum_series(m, a, b, MarcumTail::upper, acc);
}

double marcum_q_complement(int m, double a, double b, const Accuracy &acc)
{
    check_marcum_args("marcum_q_complement", m, a, b, acc);
    if (b == 0.0)
        return 0.0;
    if (std::isinf(b))
        return 1.0;
    if (0.5 * b * b < 0.5 * a * a + m)
        return marcum_series(m, a, b, MarcumTail::lower, acc);
    return 1.0 - marcum_series(m, a, b, MarcumTail::upper, acc);
}

double erfc(double x)
{
    require(!std::isnan(x), "erfc", "argument is NaN");
    return std::erfc(x);
}

double upper_inc_gamma(double s, double x)
{
    require(s > 0.0 && std::isfinite(s), "upper_inc_gamma", "s must be finite and > 0");
    require(x >= 0.0 && !std::isnan(x), "upper_inc_gamma", "x must be >= 0");
    if (x == 0.0)
        return std::tgamma(s);
    if (std::isinf(x))
        return 0.0;

    if (x < s + 1.0)
    {
        // Lower gamma by its series, then Gamma(s) - gamma(s, x).
        double term = 1.0 / s, sum = term;
        for (long k = 1; k < inner_cap; ++k)
        {
            term *= x / (s + k);
            sum += term;
            if (term < eps * sum)
                return std::tgamma(s) - std::exp(s * std::log(x) - x) * sum;
        }
        throw ConvergenceError("upper_inc_gamma: series did not converge");
    }

    // Continued fraction (modified Lentz).
    double b = x + 1.0 - s;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 100000; ++i)
    {
        const double an = -i * (i - s);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny)
            d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny)
            c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < eps)
            return std::exp(s * std::log(x) - x) * h;
    }
    throw ConvergenceError("upper_inc_gamma: continued fraction did not converge");
}

double mean_erfc_gamma(double n, double z)
{
    require(n > 0.0 && std::isfinite(n), "mean_erfc_gamma", "n must be finite and > 0");
    require(z >= 0.0 && !std::isnan(z), "mean_erfc_gamma", "z must be >= 0");
    if (z == 0.0)
        return 1.0;
    if (std::isinf(z))
        return 0.0;
    // Past n z ~ 4 the subtraction in the small-argument form loses more than
    // two digits; the positive series takes over there.
    if (n * z <= 4.0)
        return mean_erfc_gamma_small(n, z);
    return mean_erfc_gamma_large(n, z);
}

double erfc_moment(double n, double a)
{
    require(n > 0.0 && std::isfinite(n), "erfc_moment", "n must be finite and > 0");
    require(a > 0.0 && !std::isnan(a), "erfc_moment", "a must be > 0");
    if (std::isinf(a))
        return 0.0;
    const double h = mean_erfc_gamma(n, 1.0 / a);
    return std::exp(std::lgamma(n) - n * std::log(a)) * h;
}

double meijer_g_2122(double shift, double z)
{
    require(shift <= 0.0 && shift == std::floor(shift), "meijer_g_2122", "shift must be 1 - n for an integer n >= 1");
    require(z > 0.0 && !std::isnan(z), "meijer_g_2122", "z must be > 0");
    const double n = 1.0 - shift;
    const double h = mean_erfc_gamma(n, z);
    if (h == 0.0)
        return 0.0;
    const double log_value = log_sqrt_pi + std::lgamma(n) + std::log(h);
    if (log_value > std::log(std::numeric_limits<double>::max()))
        throw std::overflow_error("meijer_g_2122: result overflows double (n=" + std::to_string(n) + ")");
    return std::exp(log_value);
}

} // namespace rfvlc::specfun
