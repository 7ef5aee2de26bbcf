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

#include "rfvlc/sweep.hpp"

#include "rfvlc/errors.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <system_error>

namespace rfvlc
{

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double linear)
{
    if (!(linear > 0.0))
        throw DomainError("linear_to_db: value must be > 0");
    return 10.0 * std::log10(linear);
}

std::string_view to_string(SweepAxis axis)
{
    switch (axis)
    {
    case SweepAxis::rf_avg_snr_db: return "rf_avg_snr_db";
    case SweepAxis::optical_power_w: return "optical_power_w";
    case SweepAxis::semi_angle_deg: return "semi_angle_deg";
    case SweepAxis::branches: return "branches";
    }
    return "?";
}

std::string_view to_string(SweepScale scale) { return scale == SweepScale::log ? "log" : "linear"; }

std::string_view to_string(Quantity quantity) { return quantity == Quantity::ber ? "ber" : "outage"; }

void SweepSpec::validate() const
{
    if (!std::isfinite(start) || !std::isfinite(stop) || !(start < stop))
        throw DomainError("SweepSpec: start < stop is required");
    if (points < 2)
        throw DomainError("SweepSpec: points must be >= 2");
    if (scale == SweepScale::log && !(start > 0.0))
        throw DomainError("SweepSpec: log scale requires positive endpoints");
    switch (axis)
    {
    case SweepAxis::optical_power_w:
        if (!(start > 0.0))
            throw DomainError("SweepSpec: optical power must stay > 0");
        break;
    case SweepAxis::semi_angle_deg:
        if (!(start > 0.0 && stop < 90.0))
            throw DomainError("SweepSpec: semi-angle must stay inside (0, 90) degrees");
        break;
    case SweepAxis::branches:
        if (std::lround(start) < 1)
            throw DomainError("SweepSpec: branches must stay >= 1");
        break;
    case SweepAxis::rf_avg_snr_db:
        break;
    }
}

std::vector<double> SweepSpec::grid() const
{
    validate();
    std::vector<double> values(static_cast<std::size_t>(points));
    const double last = points - 1.0;
    for (int i = 0; i < points; ++i)
    {
        const double t = i / last;
        double v = scale == SweepScale::log ? std::exp(std::log(start) + t * (std::log(stop) - std::log(start)))
                                            : start + t * (stop - start);
        if (i == 0)
            v = start;
        else if (i == points - 1)
            v = stop;
        if (axis == SweepAxis::branches)
            v = static_cast<double>(std::lround(v));
        values[static_cast<std::size_t>(i)] = v;
    }
    return values;
}

SystemConfig SweepSpec::apply(const SystemConfig &cfg, double value) const
{
    SystemConfig out = cfg;
    switch (axis)
    {
    case SweepAxis::rf_avg_snr_db: out.rf.avg_snr = db_to_linear(value); break;
    case SweepAxis::optical_power_w: out.vlc.optical_power = vlc::OpticalPower::total(value); break;
    case SweepAxis::semi_angle_deg: out.vlc.semi_angle_deg = value; break;
    case SweepAxis::branches: out.rf.branches = static_cast<int>(std::lround(value)); break;
    }
    return out;
}

std::uint64_t point_seed(std::uint64_t seed, std::size_t index)
{
    // Point 0 keeps the user's seed so a one-point run matches simulate_*().
    return seed + 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(index);
}

double evaluate(Quantity quantity, const SystemConfig &cfg, const specfun::Accuracy &acc)
{
    return quantity == Quantity::outage ? outage_probability(cfg, acc) : e2e_avg_ber(cfg, acc);
}

double floor_of(Quantity quantity, const SystemConfig &cfg, const specfun::Accuracy &acc)
{
    return quantity == Quantity::outage ? outage_floor(cfg) : ber_floor(cfg, acc);
}

mc::EstimateWithError simulate(Quantity quantity, const SystemConfig &cfg, std::uint64_t trials, std::uint64_t seed,
                               unsigned workers)
{
    return quantity == Quantity::outage ? mc::simulate_outage(cfg, trials, seed, workers)
                                        : mc::simulate_ber(cfg, trials, seed, workers);
}

std::vector<ResultRecord> run_sweep(const SystemConfig &cfg, const SweepSpec &spec, const McSettings &mc,
                                    const specfun::Accuracy &acc)
{
    const std::vector<double> grid = spec.grid();
    std::vector<ResultRecord> records;
    records.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
    {
        const double value = grid[i];
        const std::string where = std::string(to_string(spec.axis)) + "=" + format_number(value) + ": ";
        try
        {
            const SystemConfig point = spec.apply(cfg, value);
            point.validate();
            ResultRecord rec;
            rec.axis_value = value;
            rec.analytic = evaluate(spec.quantity, point, acc);
            rec.floor = floor_of(spec.quantity, point, acc);
            if (mc.enabled)
            {
                const auto est = simulate(spec.quantity, point, mc.trials, point_seed(mc.seed, i), mc.workers);
                rec.mc_estimate = est.estimate;
                rec.mc_std_error = est.std_error;
            }
            records.push_back(rec);
        }
        catch (const ConvergenceError &e)
        {
            throw ConvergenceError(where + e.what());
        }
        catch (const DomainError &e)
        {
            throw DomainError(where + e.what());
        }
        catch (const std::invalid_argument &e)
        {
            throw std::invalid_argument(where + e.what());
        }
    }
    return records;
}

std::string format_number(double v, int significant)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, significant);
    return std::string(buf, res.ptr);
}

namespace
{

// Shortest text that reads back as the same double.
std::string exact_number(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

} // namespace

std::string emit_csv(std::span<const ResultRecord> records)
{
    std::string out(csv_header);
    out += '\n';
    for (const ResultRecord &r : records)
    {
        out += exact_number(r.axis_value);
        out += ',';
        out += exact_number(r.analytic);
        out += ',';
        if (r.mc_estimate)
            out += exact_number(*r.mc_estimate);
        out += ',';
        if (r.mc_std_error)
            out += exact_number(*r.mc_std_error);
        out += ',';
        out += exact_number(r.floor);
        out += '\n';
    }
    return out;
}

namespace
{

double parse_cell(std::string_view cell, std::size_t line)
{
    double v = 0.0;
    const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (res.ec != std::errc() || res.ptr != cell.data() + cell.size())
        throw ConfigError("csv: malformed number '" + std::string(cell) + "'", line);
    return v;
}

} // namespace

std::vector<ResultRecord> parse_csv(std::string_view text)
{
    std::vector<ResultRecord> records;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size())
    {
        const std::size_t end = text.find('\n', pos);
        std::string_view line = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
        pos = end == std::string_view::npos ? text.size() : end + 1;
        ++line_no;
        if (line_no == 1)
        {
            if (line != csv_header)
                throw ConfigError("csv: unexpected header", line_no);
            continue;
        }
        std::vector<std::string_view> cells;
        std::size_t start = 0;
        while (true)
        {
            const std::size_t comma = line.find(',', start);
            cells.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
            if (comma == std::string_view::npos)
                break;
            start = comma + 1;
        }
        if (cells.size() != 5)
            throw ConfigError("csv: expected 5 cells", line_no);
        ResultRecord r;
        r.axis_value = parse_cell(cells[0], line_no);
        r.analytic = parse_cell(cells[1], line_no);
        if (!cells[2].empty())
            r.mc_estimate = parse_cell(cells[2], line_no);
        if (!cells[3].empty())
            r.mc_std_error = parse_cell(cells[3], line_no);
        r.floor = parse_cell(cells[4], line_no);
        records.push_back(r);
    }
    if (line_no == 0)
        throw ConfigError("csv: empty document");
    return records;
}

} // namespace rfvlc
