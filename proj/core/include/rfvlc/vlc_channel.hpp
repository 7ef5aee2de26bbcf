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

#ifndef RFVLC_VLC_CHANNEL_HPP
#define RFVLC_VLC_CHANNEL_HPP

// Line-of-sight VLC downlink from a ceiling LED lamp to a user placed
// uniformly over the lamp's circular footprint. The photodetector faces the
// ceiling, so the irradiance and incidence angles coincide. Reflections are
// not modelled.

#include "rfvlc/rf_channel.hpp"

namespace rfvlc::vlc
{

// Transmitted optical power, given either as a total or as N identical LEDs.
class OpticalPower
{
public:
    static OpticalPower total(double watts);
    static OpticalPower led_array(int count, double per_led_watts);

    double watts() const { return is_led_array() ? led_count_ * per_led_watts_ : total_watts_; }
    bool is_led_array() const { return led_count_ > 0; }
    int led_count() const { return led_count_; }
    double per_led_watts() const { return per_led_watts_; }

    bool operator==(const OpticalPower &) const = default;

private:
    OpticalPower() = default;

    double total_watts_ = 0.0;
    int led_count_ = 0;
    double per_led_watts_ = 0.0;
};

// Angles are in degrees; everything else is SI. The receiver defaults are a
// typical indoor PIN photodetector front end.
struct VlcParams
{
    double semi_angle_deg = 60.0;         // LED semi-angle at half power, (0, 90)
    double height_m = 2.0;                // LED height above the receiver plane
    double area_m2 = 1e-4;                // photodetector area
    double fov_deg = 60.0;                // receiver field of view, (0, 90]
    double refractive_index = 1.5;        // concentrator lens, >= 1
    double filter_gain = 1.0;             // optical filter gain
    double responsivity = 0.4;            // A/W
    double conv_efficiency = 0.8;         // electrical-to-optical efficiency, (0, 1]
    double noise_psd = 1e-21;             // W/Hz
    double bandwidth_hz = 20e6;           // baseband modulation bandwidth
    OpticalPower optical_power = OpticalPower::total(1.0);

    void validate() const;
};

// Quantities derived once from VlcParams.
struct VlcDerived
{
    double lambert_order = 0.0; // m
    double height_m = 0.0;      // L
    double cell_radius = 0.0;   // r_f = L tan(semi-angle)
    double concentrator = 0.0;  // g = n^2 / sin^2(FOV)
    double upsilon = 0.0;       // gain constant, I = upsilon / (r^2 + L^2)^((m+3)/2)
    double gain_min = 0.0;      // at the cell edge
    double gain_max = 0.0;      // directly below the lamp
    double snr_min = 0.0;
    double snr_max = 0.0;
    double mu_vlc = 0.0;        // P_t^2 eta^2 / noise_var
    double noise_var = 0.0;     // N0 B
};

// m = -ln 2 / ln cos(semi-angle).
double lambertian_order(double semi_angle_deg);

VlcDerived derive(const VlcParams &params);

// DC gain at horizontal distance r in [0, r_f] from the lamp axis.
double channel_gain(double r, const VlcDerived &d);

// SNR density; zero outside [snr_min, snr_max].
double vlc_snr_pdf(double gamma, const VlcDerived &d);

// SNR CDF; 0 below snr_min and 1 above snr_max.
double vlc_snr_cdf(double gamma, const VlcDerived &d);

// Draws r = r_f sqrt(U) and maps it to the SNR.
double sample_vlc_snr(const VlcDerived &d, Rng &rng);

// Average BPSK BER of the VLC hop in closed form (incomplete gamma and erfc).
double vlc_avg_ber(const VlcDerived &d);

} // namespace rfvlc::vlc

#endif
