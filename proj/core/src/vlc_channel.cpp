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

#include "rfvlc/vlc_channel.hpp"

#include "rfvlc/errors.hpp"
#include "rfvlc/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace rfvlc::vlc
{

namespace
{

constexpr double deg = std::numbers::pi / 180.0;

void require(bool ok, const std::string &what)
{
    if (!ok)
        throw DomainError("VlcParams: " + what);
}

bool positive(double v) { return v > 0.0 && std::isfinite(v); }

} // namespace

OpticalPower OpticalPower::total(double watts)
{
    if (!positive(watts))
        throw DomainError("OpticalPower: total power must be finite and > 0");
    OpticalPower p;
    p.total_watts_ = watts;
    return p;
}

OpticalPower OpticalPower::led_array(int count, double per_led_watts)
{
    if (count < 1)
        throw DomainError("OpticalPower: led_count must be >= 1");
    if (!positive(per_led_watts))
        throw DomainError("OpticalPower: per-LED power must be finite and > 0");
    OpticalPower p;
    p.led_count_ = count;
    p.per_led_watts_ = per_led_watts;
    return p;
}

void VlcParams::validate() const
{
    require(semi_angle_deg > 0.0 && semi_angle_deg < 90.0, "semi_angle_deg must lie in (0, 90)");
    require(positive(height_m), "height_m must be > 0");
    require(positive(area_m2), "area_m2 must be > 0");
    require(fov_deg > 0.0 && fov_deg <= 90.0, "fov_deg must lie in (0, 90]");
    require(refractive_index >= 1.0 && std::isfinite(refractive_index), "refractive_index must be >= 1");
    require(positive(filter_gain), "filter_gain must be > 0");
    require(positive(responsivity), "responsivity must be > 0");
    require(conv_efficiency > 0.0 && conv_efficiency <= 1.0, "conv_efficiency must lie in (0, 1]");
    require(positive(noise_psd), "noise_psd must be > 0");
    require(positive(bandwidth_hz), "bandwidth_hz must be > 0");
    require(positive(optical_power.watts()), "optical power must be > 0");
}

double lambertian_order(double semi_angle_deg)
{
    if (!(semi_angle_deg > 0.0 && semi_angle_deg < 90.0))
        throw DomainError("lambertian_order: semi-angle must lie in (0, 90) degrees");
    return -std::numbers::ln2 / std::log(std::cos(semi_angle_deg * deg));
}

VlcDerived derive(const VlcParams &params)
{
    params.validate();
    const double phi = params.semi_angle_deg * deg;
    const double fov = params.fov_deg * deg;
    const double height = params.height_m;

    VlcDerived d;
    d.lambert_order = lambertian_order(params.semi_angle_deg);
    const double m = d.lambert_order;
    d.height_m = height;
    d.cell_radius = height * std::tan(phi);
    d.concentrator = params.refractive_index * params.refractive_index / (std::sin(fov) * std::sin(fov));

    // Powers of L are taken in the log domain; m grows without bound as the semi-angle shrinks.
    const double log_front = std::log(params.area_m2 * (m + 1.0) * params.responsivity / (2.0 * std::numbers::pi) *
                                      params.filter_gain * d.concentrator);
    const double log_upsilon = log_front + (m + 1.0) * std::log(height);
    const double log_edge = std::log(d.cell_radius * d.cell_radius + height * height);
    d.upsilon = std::exp(log_upsilon);
    d.gain_max = std::exp(log_upsilon - (m + 3.0) * std::log(height));
    d.gain_min = std::exp(log_upsilon - 0.5 * (m + 3.0) * log_edge);

    const double power = params.optical_power.watts();
    d.noise_var = params.noise_psd * params.bandwidth_hz;
    d.mu_vlc = power * power * params.conv_efficiency * params.conv_efficiency / d.noise_var;
    d.snr_max = d.mu_vlc * d.gain_max * d.gain_max;
    d.snr_min = d.mu_vlc * d.gain_min * d.gain_min;
    return d;
}

double channel_gain(double r, const VlcDerived &d)
{
    if (!(r >= 0.0 && r <= d.cell_radius))
        throw DomainError("channel_gain: r must lie in [0, r_f]");
    const double l2 = d.height_m * d.height_m;
    // upsilon / (r^2 + L^2)^((m+3)/2), written relative to the on-axis gain
    return d.gain_max * std::pow(l2 / (r * r + l2), 0.5 * (d.lambert_order + 3.0));
}

// In terms of the stored bounds, upsilon^(2/(m+3)) mu_vlc^(1/(m+3)) = L^2 snr_max^(1/(m+3)),
// which keeps the endpoint identities F(snr_min) = 0 and F(snr_max) = 1 free of large powers.

double vlc_snr_pdf(double gamma, const VlcDerived &d)
{
    if (!(gamma >= d.snr_min && gamma <= d.snr_max))
        return 0.0;
    const double p = 1.0 / (d.lambert_order + 3.0);
    const double ratio = d.height_m * d.height_m / (d.cell_radius * d.cell_radius);
    return p * ratio * std::pow(d.snr_max / gamma, p) / gamma;
}

double vlc_snr_cdf(double gamma, const VlcDerived &d)
{
    if (std::isnan(gamma))
        throw DomainError("vlc_snr_cdf: gamma is NaN");
    if (gamma < d.snr_min)
        return 0.0;
    if (gamma > d.snr_max)
        return 1.0;
    // 1 + L^2/r_f^2 - upsilon^(2/(m+3)) (gamma/mu_vlc)^(-1/(m+3)) / r_f^2
    const double p = 1.0 / (d.lambert_order + 3.0);
    const double ratio = d.height_m * d.height_m / (d.cell_radius * d.cell_radius);
    return std::clamp(1.0 - ratio * std::expm1(p * std::log(d.snr_max / gamma)), 0.0, 1.0);
}

double sample_vlc_snr(const VlcDerived &d, Rng &rng)
{
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    const double r2 = d.cell_radius * d.cell_radius * uniform(rng);
    const double l2 = d.height_m * d.height_m;
    const double gamma = d.snr_max * std::pow(l2 / (r2 + l2), d.lambert_order + 3.0);
    return std::clamp(gamma, d.snr_min, d.snr_max);
}

double vlc_avg_ber(const VlcDerived &d)
{
    const double m = d.lambert_order;
    const double p = 1.0 / (m + 3.0);
    const double s = (m + 1.0) / (2.0 * m + 6.0);
    const double r2 = d.cell_radius * d.cell_radius;
    // mu_vlc^p upsilon^(2p) / (2 r_f^2)
    const double front = d.height_m * d.height_m * std::pow(d.snr_max, p) / (2.0 * r2);

    auto edge = [&](double g) {
        return std::pow(g, -p) * specfun::erfc(std::sqrt(g)) - specfun::upper_inc_gamma(s, g) / specfun::sqrt_pi;
    };
    const double value = front * (edge(d.snr_min) - edge(d.snr_max));
    return std::clamp(value, 0.0, 0.5);
}

} // namespace rfvlc::vlc
