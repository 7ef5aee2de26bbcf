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

#ifndef RFVLC_RF_CHANNEL_HPP
#define RFVLC_RF_CHANNEL_HPP

#include "rfvlc/specfun.hpp"

#include <random>

namespace rfvlc
{

// Random engine used for every sampler in the library.
using Rng = std::mt19937_64;

namespace rf
{

// M i.i.d. Rician branches combined by MRC at the relay. All values are linear.
struct RfParams
{
    double k_factor = 0.0; // Rician K >= 0; K = 0 is Rayleigh
    int branches = 1;      // M >= 1
    double avg_snr = 1.0;  // per-branch mean SNR mu_rf > 0

    void validate() const;
};

// Single-branch Rician SNR density. params.branches is ignored.
double rician_snr_pdf(double gamma, const RfParams &params);

// Density of the MRC output SNR (sum of M branch SNRs).
double mrc_snr_pdf(double gamma, const RfParams &params);

// CDF of the MRC output SNR: 1 - Q_M(sqrt(2 K M), sqrt(2 (K+1) gamma / mu_rf)).
double mrc_snr_cdf(double gamma, const RfParams &params, const specfun::Accuracy &acc = {});

// One draw of the MRC output SNR. Each branch contributes mu_rf |sqrt(K/(K+1)) + z|^2
// with z ~ CN(0, 1/(K+1)).
double sample_mrc_snr(const RfParams &params, Rng &rng);

// Average BPSK BER of the RF hop, E[erfc(sqrt(gamma_rf))] / 2, by the Meijer-G series.
// Throws ConvergenceError if acc.max_terms is reached first.
double rf_avg_ber(const RfParams &params, const specfun::Accuracy &acc = {});

} // namespace rf
} // namespace rfvlc

#endif
