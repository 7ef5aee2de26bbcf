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

#ifndef RFVLC_SWEEP_HPP
#define RFVLC_SWEEP_HPP

#include "rfvlc/e2e.hpp"
#include "rfvlc/montecarlo.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rfvlc
{

enum class SweepAxis
{
    rf_avg_snr_db,
    optical_power_w,
    semi_angle_deg,
    branches
};

enum class SweepScale
{
    linear,
    log
};

enum class Quantity
{
    outage,
    ber
};

// 10^(db/10) and its inverse.
double db_to_linear(double db);
double linear_to_db(double linear);

std::string_view to_string(SweepAxis axis);
std::string_view to_string(SweepScale scale);
std::string_view to_string(Quantity quantity);

// One swept axis over [start, stop] in the axis' own units.
struct SweepSpec
{
    SweepAxis axis = SweepAxis::rf_avg_snr_db;
    double start = 0.0;
    double stop = 1.0;
    int points = 2;
    SweepScale scale = SweepScale::linear;
    Quantity quantity = Quantity::outage;

    void validate() const;

    // Grid values in axis order. The branches axis is rounded to integers.
    std::vector<double> grid() const;

    // Copy of cfg with the axis set to value (dB values are converted here).
    SystemConfig apply(const SystemConfig &cfg, double value) const;
};

struct McSettings
{
    bool enabled = true;
    std::uint64_t trials = mc::default_trials;
    std::uint64_t seed = 1;
    unsigned workers = 1;
};

// One CSV row.
struct ResultRecord
{
    double axis_value = 0.0;
    double analytic = 0.0;
    std::optional<double> mc_estimate;
    std::optional<double> mc_std_error;
    double floor = 0.0;
};

// Seed used for grid point `index`; points get independent streams.
std::uint64_t point_seed(std::uint64_t seed, std::size_t index);

// Analytic value of the quantity for one configuration.
double evaluate(Quantity quantity, const SystemConfig &cfg, const specfun::Accuracy &acc = {});

// Floor of the quantity: outage_floor or ber_floor.
double floor_of(Quantity quantity, const SystemConfig &cfg, const specfun::Accuracy &acc = {});

// Monte Carlo estimate of the quantity.
mc::EstimateWithError simulate(Quantity quantity, const SystemConfig &cfg, std::uint64_t trials,
                               std::uint64_t seed, unsigned workers = 1);

// One record per grid point, in axis order. Evaluation errors are rethrown
// with the offending axis value in the message.
std::vector<ResultRecord> run_sweep(const SystemConfig &cfg, const SweepSpec &spec, const McSettings &mc,
                                    const specfun::Accuracy &acc = {});

inline constexpr std::string_view csv_header = "axis,analytic,mc_estimate,mc_std_error,floor";

// Header line plus one LF-terminated row per record. Numbers are written as
// the shortest locale-independent decimal text that parses back to the same
// double. Missing Monte Carlo values are empty cells.
std::string emit_csv(std::span<const ResultRecord> records);

// Inverse of emit_csv. Throws ConfigError on malformed input.
std::vector<ResultRecord> parse_csv(std::string_view text);

// Shortest locale-independent text for v with the given significant digits.
std::string format_number(double v, int significant = 12);

} // namespace rfvlc

#endif
