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

#include "rfvlc/config.hpp"

#include "rfvlc/errors.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace rfvlc
{

namespace
{

struct Entry
{
    std::string value;
    std::size_t line = 0;
    bool used = false;
};

using Section = std::map<std::string, Entry>;

const std::set<std::string> known_sections = {"", "rf", "vlc", "sweep", "mc"};

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::map<std::string, Section> tokenize(std::string_view text)
{
    std::map<std::string, Section> sections;
    sections[""];
    std::string current;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size())
    {
        const std::size_t end = text.find('\n', pos);
        std::string_view line = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
        pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;

        if (line.front() == '[')
        {
            if (line.back() != ']')
                throw ConfigError("malformed section header", line_no);
            current = std::string(trim(line.substr(1, line.size() - 2)));
            if (!known_sections.contains(current) || current.empty())
                throw ConfigError("unknown section [" + current + "]", line_no);
            if (sections.contains(current))
                throw ConfigError("duplicate section [" + current + "]", line_no);
            sections[current];
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("expected 'key = value'", line_no);
        const std::string key(trim(line.substr(0, eq)));
        const std::string value(trim(line.substr(eq + 1)));
        if (key.empty())
            throw ConfigError("missing key before '='", line_no);
        if (value.empty())
            throw ConfigError("missing value", line_no, key);
        Section &section = sections[current];
        if (section.contains(key))
            throw ConfigError("duplicate key", line_no, key);
        section[key] = Entry{value, line_no, false};
    }
    return sections;
}

// Typed access to one section; every lookup marks the key as consumed.
class Reader
{
public:
    Reader(Section &section, std::string name) : section_(section), name_(std::move(name)) {}

    bool has(const std::string &key) const { return section_.contains(key); }

    std::optional<double> number(const std::string &key)
    {
        Entry *e = find(key);
        if (!e)
            return std::nullopt;
        double v = 0.0;
        const char *first = e->value.data();
        const char *last = first + e->value.size();
        const auto res = std::from_chars(first, last, v);
        if (res.ec != std::errc() || res.ptr != last || !std::isfinite(v))
            throw ConfigError("expected a finite number, got '" + e->value + "'", e->line, qualified(key));
        return v;
    }

    std::optional<long long> integer(const std::string &key)
    {
        const Entry *e = section_.contains(key) ? &section_.at(key) : nullptr;
        const auto v = number(key);
        if (!v)
            return std::nullopt;
        if (*v != std::floor(*v) || std::abs(*v) > 9.0e15)
            throw ConfigError("expected an integer, got '" + e->value + "'", e->line, qualified(key));
        return static_cast<long long>(*v);
    }

    std::optional<bool> boolean(const std::string &key)
    {
        Entry *e = find(key);
        if (!e)
            return std::nullopt;
        const std::string &v = e->value;
        if (v == "true" || v == "yes" || v == "on" || v == "1")
            return true;
        if (v == "false" || v == "no" || v == "off" || v == "0")
            return false;
        throw ConfigError("expected true or false, got '" + v + "'", e->line, qualified(key));
    }

    std::optional<std::string> word(const std::string &key)
    {
        Entry *e = find(key);
        if (!e)
            return std::nullopt;
        return e->value;
    }

    std::size_t line_of(const std::string &key) const { return has(key) ? section_.at(key).line : 0; }

    std::string qualified(const std::string &key) const { return name_.empty() ? key : name_ + "." + key; }

    // dB or linear variant of the same quantity; at most one may be present.
    std::optional<double> linear_or_db(const std::string &key)
    {
        const std::string db_key = key + "_db";
        if (has(key) && has(db_key))
            throw ConfigError("give either " + key + " or " + db_key + ", not both", line_of(db_key),
                              qualified(db_key));
        if (auto v = number(key))
            return v;
        if (auto v = number(db_key))
            return db_to_linear(*v);
        return std::nullopt;
    }

    void reject_unused() const
    {
        for (const auto &[key, entry] : section_)
            if (!entry.used)
                throw ConfigError("unknown key", entry.line, qualified(key));
    }

private:
    Entry *find(const std::string &key)
    {
        auto it = section_.find(key);
        if (it == section_.end())
            return nullptr;
        it->second.used = true;
        return &it->second;
    }

    Section &section_;
    std::string name_;
};

[[noreturn]] void missing(const std::string &key) { throw ConfigError("required key is missing", 0, key); }

template <class T>
T require_value(std::optional<T> v, const std::string &key)
{
    if (!v)
        missing(key);
    return *v;
}

SweepAxis parse_axis(const std::string &v, std::size_t line)
{
    for (SweepAxis a : {SweepAxis::rf_avg_snr_db, SweepAxis::optical_power_w, SweepAxis::semi_angle_deg,
                        SweepAxis::branches})
        if (v == to_string(a))
            return a;
    throw ConfigError("unknown axis '" + v + "'", line, "sweep.axis");
}

} // namespace

RunConfig parse_config(std::string_view text)
{
    auto sections = tokenize(text);
    RunConfig out;

    // Sweep first: its axis may stand in for a baseline value.
    std::optional<SweepAxis> axis;
    if (sections.contains("sweep"))
    {
        Reader r(sections["sweep"], "sweep");
        SweepSpec spec;
        const std::string axis_name = require_value(r.word("axis"), "sweep.axis");
        spec.axis = parse_axis(axis_name, r.line_of("axis"));
        spec.start = require_value(r.number("start"), "sweep.start");
        spec.stop = require_value(r.number("stop"), "sweep.stop");
        const long long points = require_value(r.integer("points"), "sweep.points");
        if (points < 2 || points > 1'000'000)
            throw ConfigError("points must lie in [2, 1000000]", r.line_of("points"), "sweep.points");
        spec.points = static_cast<int>(points);
        if (auto scale = r.word("scale"))
        {
            if (*scale == "linear")
                spec.scale = SweepScale::linear;
            else if (*scale == "log")
                spec.scale = SweepScale::log;
            else
                throw ConfigError("scale must be linear or log", r.line_of("scale"), "sweep.scale");
        }
        const std::string quantity = require_value(r.word("quantity"), "sweep.quantity");
        if (quantity == "outage")
            spec.quantity = Quantity::outage;
        else if (quantity == "ber")
            spec.quantity = Quantity::ber;
        else
            throw ConfigError("quantity must be outage or ber", r.line_of("quantity"), "sweep.quantity");
        r.reject_unused();
        try
        {
            spec.validate();
        }
        catch (const DomainError &e)
        {
            throw ConfigError(e.what(), 0, "sweep");
        }
        axis = spec.axis;
        out.sweep = spec;
    }
    auto swept = [&](SweepAxis a) { return axis && *axis == a; };

    {
        Reader r(sections[""], "");
        out.system.outage_threshold = require_value(r.linear_or_db("outage_threshold"), "outage_threshold");
        r.reject_unused();
    }

    {
        Reader r(sections["rf"], "rf");
        out.system.rf.k_factor = require_value(r.linear_or_db("k_factor"), "rf.k_factor");
        if (auto m = r.integer("branches"))
        {
            if (*m < 1 || *m > 4096)
                throw ConfigError("branches must lie in [1, 4096]", r.line_of("branches"), "rf.branches");
            out.system.rf.branches = static_cast<int>(*m);
        }
        else if (!swept(SweepAxis::branches))
            missing("rf.branches");
        if (auto snr = r.linear_or_db("avg_snr"))
            out.system.rf.avg_snr = *snr;
        else if (!swept(SweepAxis::rf_avg_snr_db))
            missing("rf.avg_snr");
        r.reject_unused();
    }

    {
        Reader r(sections["vlc"], "vlc");
        vlc::VlcParams &v = out.system.vlc;
        if (auto x = r.number("semi_angle_deg"))
            v.semi_angle_deg = *x;
        else if (!swept(SweepAxis::semi_angle_deg))
            missing("vlc.semi_angle_deg");
        v.height_m = require_value(r.number("height_m"), "vlc.height_m");
        v.area_m2 = r.number("area_m2").value_or(v.area_m2);
        v.fov_deg = r.number("fov_deg").value_or(v.fov_deg);
        v.refractive_index = r.number("refractive_index").value_or(v.refractive_index);
        v.filter_gain = r.number("filter_gain").value_or(v.filter_gain);
        v.responsivity = r.number("responsivity_a_per_w").value_or(v.responsivity);
        v.conv_efficiency = r.number("conv_efficiency").value_or(v.conv_efficiency);
        v.noise_psd = r.number("noise_psd_w_per_hz").value_or(v.noise_psd);
        v.bandwidth_hz = r.number("bandwidth_hz").value_or(v.bandwidth_hz);

        const bool total = r.has("optical_power_w");
        const bool array = r.has("led_count") || r.has("per_led_power_w");
        if (total && array)
            throw ConfigError("give either optical_power_w or led_count with per_led_power_w, not both",
                              r.line_of("optical_power_w"), "vlc.optical_power_w");
        try
        {
            if (total)
                v.optical_power = vlc::OpticalPower::total(*r.number("optical_power_w"));
            else if (array)
            {
                const long long n = require_value(r.integer("led_count"), "vlc.led_count");
                const double p = require_value(r.number("per_led_power_w"), "vlc.per_led_power_w");
                if (n < 1 || n > 1'000'000)
                    throw ConfigError("led_count must lie in [1, 1000000]", r.line_of("led_count"), "vlc.led_count");
                v.optical_power = vlc::OpticalPower::led_array(static_cast<int>(n), p);
            }
            else if (!swept(SweepAxis::optical_power_w))
                missing("vlc.optical_power_w");
        }
        catch (const DomainError &e)
        {
            throw ConfigError(e.what(), 0, "vlc");
        }
        r.reject_unused();
    }

    if (sections.contains("mc"))
    {
        Reader r(sections["mc"], "mc");
        out.mc.enabled = r.boolean("enabled").value_or(out.mc.enabled);
        if (auto t = r.integer("trials"))
        {
            if (*t < static_cast<long long>(mc::min_trials))
                throw ConfigError("trials must be >= " + std::to_string(mc::min_trials), r.line_of("trials"),
                                  "mc.trials");
            out.mc.trials = static_cast<std::uint64_t>(*t);
        }
        if (auto s = r.integer("seed"))
        {
            if (*s < 0)
                throw ConfigError("seed must be >= 0", r.line_of("seed"), "mc.seed");
            out.mc.seed = static_cast<std::uint64_t>(*s);
        }
        if (auto w = r.integer("workers"))
        {
            if (*w < 1 || *w > 1024)
                throw ConfigError("workers must lie in [1, 1024]", r.line_of("workers"), "mc.workers");
            out.mc.workers = static_cast<unsigned>(*w);
        }
        r.reject_unused();
    }

    // Baseline values the sweep axis stands in for.
    if (out.sweep)
    {
        const SweepSpec &s = *out.sweep;
        if (s.axis == SweepAxis::branches && !sections["rf"].contains("branches"))
            out.system = s.apply(out.system, s.grid().front());
        if (s.axis == SweepAxis::rf_avg_snr_db && !sections["rf"].contains("avg_snr") &&
            !sections["rf"].contains("avg_snr_db"))
            out.system = s.apply(out.system, s.start);
        if (s.axis == SweepAxis::semi_angle_deg && !sections["vlc"].contains("semi_angle_deg"))
            out.system = s.apply(out.system, s.start);
        if (s.axis == SweepAxis::optical_power_w && !sections["vlc"].contains("optical_power_w") &&
            !sections["vlc"].contains("led_count"))
            out.system = s.apply(out.system, s.start);
    }

    try
    {
        out.system.validate();
    }
    catch (const DomainError &e)
    {
        throw ConfigError(e.what());
    }
    return out;
}

RunConfig load_config(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string emit_config(const RunConfig &cfg)
{
    auto num = [](double v) { return format_number(v, 17); };
    const SystemConfig &s = cfg.system;
    const vlc::VlcParams &v = s.vlc;
    std::string out;
    out += "outage_threshold = " + num(s.outage_threshold) + "\n\n";
    out += "[rf]\n";
    out += "k_factor = " + num(s.rf.k_factor) + "\n";
    out += "branches = " + std::to_string(s.rf.branches) + "\n";
    out += "avg_snr = " + num(s.rf.avg_snr) + "\n\n";
    out += "[vlc]\n";
    out += "semi_angle_deg = " + num(v.semi_angle_deg) + "\n";
    out += "height_m = " + num(v.height_m) + "\n";
    out += "area_m2 = " + num(v.area_m2) + "\n";
    out += "fov_deg = " + num(v.fov_deg) + "\n";
    out += "refractive_index = " + num(v.refractive_index) + "\n";
    out += "filter_gain = " + num(v.filter_gain) + "\n";
    out += "responsivity_a_per_w = " + num(v.responsivity) + "\n";
    out += "conv_efficiency = " + num(v.conv_efficiency) + "\n";
    out += "noise_psd_w_per_hz = " + num(v.noise_psd) + "\n";
    out += "bandwidth_hz = " + num(v.bandwidth_hz) + "\n";
    if (v.optical_power.is_led_array())
    {
        out += "led_count = " + std::to_string(v.optical_power.led_count()) + "\n";
        out += "per_led_power_w = " + num(v.optical_power.per_led_watts()) + "\n";
    }
    else
        out += "optical_power_w = " + num(v.optical_power.watts()) + "\n";
    if (cfg.sweep)
    {
        const SweepSpec &w = *cfg.sweep;
        out += "\n[sweep]\n";
        out += "axis = " + std::string(to_string(w.axis)) + "\n";
        out += "start = " + num(w.start) + "\n";
        out += "stop = " + num(w.stop) + "\n";
        out += "points = " + std::to_string(w.points) + "\n";
        out += "scale = " + std::string(to_string(w.scale)) + "\n";
        out += "quantity = " + std::string(to_string(w.quantity)) + "\n";
    }
    out += "\n[mc]\n";
    out += std::string("enabled = ") + (cfg.mc.enabled ? "true" : "false") + "\n";
    out += "trials = " + std::to_string(cfg.mc.trials) + "\n";
    out += "seed = " + std::to_string(cfg.mc.seed) + "\n";
    out += "workers = " + std::to_string(cfg.mc.workers) + "\n";
    return out;
}

} // namespace rfvlc
