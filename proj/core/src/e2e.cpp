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

#include "rfvlc/errors.hpp"

#include <algorithm>
#include <cmath>

namespace rfvlc
{

void SystemConfig::validate() const
{
    rf.validate();
    vlc.validate();
    if (!(outage_threshold > 0.0) || !std::isfinite(outage_threshold))
        throw DomainError("SystemConfig: outage_threshold must be finite and > 0");
}

double e2e_cdf(double gamma, const SystemConfig &cfg, const specfun::Accuracy &acc)
{
    cfg.validate();
    if (!(gamma >= 0.0))
        throw DomainError("e2e_cdf: gamma must be >= 0");
    const double f_rf = rf::mrc_snr_cdf(gamma, cfg.rf, acc);
    const double f_vlc = vlc::vlc_snr_cdf(gamma, vlc::derive(cfg.vlc));
    if (f_rf >= 1.0 || f_vlc >= 1.0)
        return 1.0;
    return std::clamp(f_rf + f_vlc - f_rf * f_vlc, 0.0, 1.0);
}

double outage_probability(const SystemConfig &cfg, const specfun::Accuracy &acc)
{
    return e2e_cdf(cfg.outage_threshold, cfg, acc);
}

double combine_df_ber(double p_rf, double p_vlc)
{
    if (!(p_rf >= 0.0 && p_rf <= 1.0) || !(p_vlc >= 0.0 && p_vlc <= 1.0))
        throw DomainError("combine_df_ber: hop error rates must lie in [0, 1]");
    return p_rf * (1.0 - p_vlc) + p_vlc * (1.0 - p_rf);
}

double e2e_avg_ber(const SystemConfig &cfg, const specfun::Accuracy &acc)
{
    cfg.validate();
    return combine_df_ber(rf::rf_avg_ber(cfg.rf, acc), vlc::vlc_avg_ber(vlc::derive(cfg.vlc)));
}

double outage_floor(const SystemConfig &cfg)
{
    cfg.validate();
    return vlc::vlc_snr_cdf(cfg.outage_threshold, vlc::derive(cfg.vlc));
}

double ber_floor(const SystemConfig &cfg, const specfun::Accuracy &acc)
{
    cfg.validate();
    return rf::rf_avg_ber(cfg.rf, acc);
}

} // namespace rfvlc
