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

#ifndef RFVLC_E2E_HPP
#define RFVLC_E2E_HPP

#include "rfvlc/rf_channel.hpp"
#include "rfvlc/specfun.hpp"
#include "rfvlc/vlc_channel.hpp"

namespace rfvlc
{

// Full RF-VLC decode-and-forward scenario.
struct SystemConfig
{
    rf::RfParams rf;
    vlc::VlcParams vlc;
    double outage_threshold = 1.0; // gamma_th, linear, > 0

    void validate() const;
};

// CDF of min(gamma_rf, gamma_vlc): F_rf + F_vlc - F_rf F_vlc.
double e2e_cdf(double gamma, const SystemConfig &cfg, const specfun::Accuracy &acc = {});

// P_out = e2e_cdf(gamma_th).
double outage_probability(const SystemConfig &cfg, const specfun::Accuracy &acc = {});

// Decode-and-forward combining of per-hop bit error rates.
double combine_df_ber(double p_rf, double p_vlc);

// Average BER of the two-hop link.
double e2e_avg_ber(const SystemConfig &cfg, const specfun::Accuracy &acc = {});

// Limit of the outage probability as the RF SNR grows: F_vlc(gamma_th).
double outage_floor(const SystemConfig &cfg);

// Limit of the average BER as the optical power grows: the RF hop BER.
double ber_floor(const SystemConfig &cfg, const specfun::Accuracy &acc = {});

} // namespace rfvlc

#endif
