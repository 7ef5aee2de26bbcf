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

#ifndef RFVLC_CONFIG_HPP
#define RFVLC_CONFIG_HPP

// Text configuration: UTF-8 "key = value" lines, '#' starts a comment.
// Keys before the first section header are global; the sections are
// [rf], [vlc], [sweep] and [mc]. SNR-like inputs may be given in dB
// (suffix _db) or linear, never both. This is the only place where dB
// values are converted.
//
//   outage_threshold_db = 5
//
//   [rf]
//   k_factor_db = 5          # or k_factor = 3.162
//   branches = 2
//   avg_snr_db = 20          # or avg_snr = 100
//
//   [vlc]
//   semi_angle_deg = 60
//   height_m = 2
//   optical_power_w = 1      # or led_count + per_led_power_w
//   ...
//
//   [sweep]
//   axis = rf_avg_snr_db
//   start = 0
//   stop = 40
//   points = 21
//   scale = linear
//   quantity = outage
//
//   [mc]
//   enabled = true
//   trials = 1000000
//   seed = 1
//   workers = 1

#include "rfvlc/sweep.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace rfvlc
{

struct RunConfig
{
    SystemConfig system;
    std::optional<SweepSpec> sweep;
    McSettings mc;
};

// Parses and validates a configuration document. Throws ConfigError naming
// the line and key for syntax errors, unknown or duplicate keys, and
// violated invariants.
RunConfig parse_config(std::string_view text);

// Reads a file and parses it.
RunConfig load_config(const std::string &path);

// Canonical document (linear units, full precision) that parses back to an
// identical RunConfig.
std::string emit_config(const RunConfig &cfg);

} // namespace rfvlc

#endif
