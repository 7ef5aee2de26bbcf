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

#ifndef RFVLC_SPECFUN_HPP
#define RFVLC_SPECFUN_HPP

// Special functions needed by the closed-form outage and BER expressions.
//
// Every function validates its arguments and throws rfvlc::DomainError
// instead of returning NaN. Series are summed with positive terms wherever
// possible; see meijer_g_2122 for how the Meijer-G reduction avoids the
// cancellation that a literal evaluation suffers at high SNR.

namespace rfvlc::specfun
{

inline constexpr double sqrt_pi = 1.772453850905516027298167483341145; // sqrt(pi)

// Truncation control for the infinite series.
struct Accuracy
{
    double rel_tol = 1e-10; // in (0, 1e-3]
    int max_terms = 512;    // >= 16

    // Throws DomainError when the invariants above are violated.
    void validate() const;
};

// Modified Bessel function of the first kind I_n(x), integer order n >= 0, x >= 0.
// Throws std::overflow_error when the result is not representable (x > ~709).
double bessel_i_int(int order, double x);

// Exponentially scaled form exp(-x) * I_n(x); finite for every x >= 0.
double bessel_i_int_scaled(int order, double x);

// Generalized Marcum Q-function Q_M(a, b) for integer M >= 1.
double marcum_q(int m, double a, double b, const Accuracy &acc = {});

// 1 - Q_M(a, b), computed without cancellation when Q_M is close to one.
double marcum_q_complement(int m, double a, double b, const Accuracy &acc = {});

// Poisson(lambda) probability mass at k, evaluated in the log domain; 0^0 = 1.
double poisson_pmf(int k, double lambda);

// Upper bound on sum_{j > k} Pois(j; lambda) given the pmf at k and the
// cumulative mass through k. Uses a geometric majorant once k + 2 > lambda,
// so the bound keeps shrinking below the rounding floor of 1 - cumulative.
double poisson_tail_bound(int k, double lambda, double pmf_k, double cumulative);

// Complementary error function; rejects NaN input.
double erfc(double x);

// Upper incomplete gamma function Gamma(s, x) (not regularized), s > 0, x >= 0.
double upper_inc_gamma(double s, double x);

// E[erfc(sqrt(z U))] with U ~ Gamma(n, 1), n > 0, z >= 0.
//
// This is the normalized kernel shared by erfc_moment and meijer_g_2122:
//   erfc_moment(n, a)        = Gamma(n) a^-n * mean_erfc_gamma(n, 1/a)
//   meijer_g_2122(1 - n, z)  = sqrt(pi) Gamma(n) * mean_erfc_gamma(n, z)
// The value lies in (0, 1] and never overflows, which is what the RF BER
// series needs for large n.
double mean_erfc_gamma(double n, double z);

// Integral over (0, inf) of t^(n-1) exp(-a t) erfc(sqrt(t)) dt, n > 0, a > 0.
double erfc_moment(double n, double a);

// Meijer G^{2,1}_{2,2}[ z | (shift, 1) ; (0, 1/2) ] for shift = 1 - n, integer n >= 1.
//
// Closing the Mellin-Barnes contour gives two residue series, one of which
// terminates after its first term:
//   G = sqrt(pi) Gamma(n) - 2 sqrt(z) Gamma(n + 1/2) 2F1(1/2, n + 1/2; 3/2; -z).
// The subtraction is evaluated as written while n z is small. Otherwise the
// 1 - w connection formula for 2F1 (w = 1/(1+z), c - a - b = 1/2) turns it
// into the single positive series
//   G = Gamma(n + 1/2)/n * w^n 2F1(1/2, n; n + 1; w).
double meijer_g_2122(double shift, double z);

} // namespace rfvlc::specfun

#endif
