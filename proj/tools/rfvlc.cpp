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

// rfvlc command-line front end.
//
//   rfvlc outage   --config PATH   single-point outage probability
//   rfvlc ber      --config PATH   single-point average BER
//   rfvlc sweep    --config PATH   CSV over the [sweep] grid
//   rfvlc validate --config PATH   analytic vs Monte Carlo gate
//
// Exit codes: 0 success, 2 configuration error, 3 convergence error,
// 4 validation-gate failure, 1 anything else.

#include "rfvlc/config.hpp"
#include "rfvlc/errors.hpp"
#include "rfvlc/sweep.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace
{

enum ExitCode
{
    exit_ok = 0,
    exit_other = 1,
    exit_config = 2,
    exit_convergence = 3,
    exit_validation = 4
};

struct Options
{
    std::string config_path;
    std::optional<std::uint64_t> trials;
    std::optional<std::uint64_t> seed;
    std::optional<unsigned> workers;
    bool no_mc = false;
    std::string out_path;
};

// Command-line flags override the [mc] section.
rfvlc::RunConfig load(const Options &opt)
{
    rfvlc::RunConfig cfg = rfvlc::load_config(opt.config_path);
    if (opt.trials)
    {
        if (*opt.trials < rfvlc::mc::min_trials)
            throw rfvlc::ConfigError("--trials must be >= " + std::to_string(rfvlc::mc::min_trials));
        cfg.mc.trials = *opt.trials;
    }
    if (opt.seed)
        cfg.mc.seed = *opt.seed;
    if (opt.workers)
    {
        if (*opt.workers < 1)
            throw rfvlc::ConfigError("--workers must be >= 1");
        cfg.mc.workers = *opt.workers;
    }
    if (opt.no_mc)
        cfg.mc.enabled = false;
    return cfg;
}

void write_output(const Options &opt, const std::string &text)
{
    if (opt.out_path.empty())
    {
        std::cout << text << std::flush;
        return;
    }
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out)
        throw rfvlc::ConfigError("cannot open output file '" + opt.out_path + "'");
    out << text;
}

void warn_unreliable(const rfvlc::mc::EstimateWithError &est, std::string_view what)
{
    if (!est.reliable())
        std::cerr << "warning: " << what << " Monte Carlo estimate " << rfvlc::format_number(est.estimate)
                  << " is below 100/trials and is unreliable\n";
}

int run_point(const Options &opt, rfvlc::Quantity quantity)
{
    const rfvlc::RunConfig cfg = load(opt);
    const double analytic = rfvlc::evaluate(quantity, cfg.system);
    const double floor = rfvlc::floor_of(quantity, cfg.system);

    std::string text = "quantity,analytic,mc_estimate,mc_std_error,floor\n";
    text += std::string(rfvlc::to_string(quantity)) + "," + rfvlc::format_number(analytic) + ",";
    if (cfg.mc.enabled)
    {
        const auto est = rfvlc::simulate(quantity, cfg.system, cfg.mc.trials, cfg.mc.seed, cfg.mc.workers);
        warn_unreliable(est, rfvlc::to_string(quantity));
        text += rfvlc::format_number(est.estimate) + "," + rfvlc::format_number(est.std_error);
    }
    else
        text += ",";
    text += "," + rfvlc::format_number(floor) + "\n";
    write_output(opt, text);
    return exit_ok;
}

int run_sweep(const Options &opt)
{
    const rfvlc::RunConfig cfg = load(opt);
    if (!cfg.sweep)
        throw rfvlc::ConfigError("the sweep command needs a [sweep] section");
    const auto records = rfvlc::run_sweep(cfg.system, *cfg.sweep, cfg.mc);
    for (const auto &r : records)
        if (r.mc_estimate && *r.mc_estimate * static_cast<double>(cfg.mc.trials) < 100.0)
            std::cerr << "warning: Monte Carlo estimate at axis " << rfvlc::format_number(r.axis_value)
                      << " is below 100/trials and is unreliable\n";
    write_output(opt, rfvlc::emit_csv(records));
    return exit_ok;
}

// Every (point, quantity) pair must agree within 4 standard errors. For the
// outage fraction the binomial error implied by the analytic value is used
// when it exceeds the empirical one, so a run with zero observed outages is
// judged against the spread it should have had.
int run_validate(const Options &opt)
{
    if (opt.no_mc)
        throw rfvlc::ConfigError("validate needs Monte Carlo; drop --no-mc");
    rfvlc::RunConfig cfg = load(opt);

    std::vector<double> axis_values{std::nan("")};
    if (cfg.sweep)
        axis_values = cfg.sweep->grid();

    std::string text = "axis,quantity,analytic,mc_estimate,mc_std_error,z,status\n";
    bool all_ok = true;
    for (std::size_t i = 0; i < axis_values.size(); ++i)
    {
        const double v = axis_values[i];
        const rfvlc::SystemConfig point = cfg.sweep ? cfg.sweep->apply(cfg.system, v) : cfg.system;
        for (rfvlc::Quantity q : {rfvlc::Quantity::outage, rfvlc::Quantity::ber})
        {
            const double analytic = rfvlc::evaluate(q, point);
            const auto est =
                rfvlc::simulate(q, point, cfg.mc.trials, rfvlc::point_seed(cfg.mc.seed, i), cfg.mc.workers);
            double se = est.std_error;
            if (q == rfvlc::Quantity::outage)
                se = std::max(se, std::sqrt(analytic * (1.0 - analytic) / static_cast<double>(est.trials)));
            const double diff = std::abs(analytic - est.estimate);
            const bool ok = se > 0.0 ? diff <= 4.0 * se : diff == 0.0;
            all_ok = all_ok && ok;
            text += (cfg.sweep ? rfvlc::format_number(v) : std::string()) + "," + std::string(rfvlc::to_string(q)) +
                    "," + rfvlc::format_number(analytic) + "," + rfvlc::format_number(est.estimate) + "," +
                    rfvlc::format_number(est.std_error) + "," + rfvlc::format_number(se > 0.0 ? diff / se : 0.0, 6) +
                    "," + (ok ? "pass" : "FAIL") + "\n";
        }
    }
    write_output(opt, text);
    if (!all_ok)
    {
        std::cerr << "validate: analytic and Monte Carlo values disagree beyond 4 standard errors\n";
        return exit_validation;
    }
    return exit_ok;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Outage probability and average BER of a mixed RF-VLC decode-and-forward relay link"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App *cmd) {
        cmd->add_option("--config", opt.config_path, "Configuration file")->required()->check(CLI::ExistingFile);
        cmd->add_option("--trials", opt.trials, "Monte Carlo trials (overrides [mc] trials)");
        cmd->add_option("--seed", opt.seed, "Monte Carlo seed (overrides [mc] seed)");
        cmd->add_option("--workers", opt.workers, "Monte Carlo worker threads (results do not depend on it)");
        cmd->add_flag("--no-mc", opt.no_mc, "Skip the Monte Carlo columns");
        cmd->add_option("--out", opt.out_path, "Output file (default: standard output)");
    };

    auto *outage = app.add_subcommand("outage", "Outage probability at the configured point");
    auto *ber = app.add_subcommand("ber", "Average BER at the configured point");
    auto *sweep = app.add_subcommand("sweep", "CSV sweep over the [sweep] grid");
    auto *validate = app.add_subcommand("validate", "Check analytic values against Monte Carlo (4 sigma)");
    for (auto *cmd : {outage, ber, sweep, validate})
        add_common(cmd);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_config;
    }

    try
    {
        if (outage->parsed())
            return run_point(opt, rfvlc::Quantity::outage);
        if (ber->parsed())
            return run_point(opt, rfvlc::Quantity::ber);
        if (sweep->parsed())
            return run_sweep(opt);
        return run_validate(opt);
    }
    catch (const rfvlc::ConfigError &e)
    {
        std::cerr << "config error: " << e.what() << "\n";
        return exit_config;
    }
    catch (const rfvlc::DomainError &e)
    {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return exit_config;
    }
    catch (const std::invalid_argument &e)
    {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return exit_config;
    }
    catch (const rfvlc::ConvergenceError &e)
    {
        std::cerr << "convergence error: " << e.what() << "\n";
        return exit_convergence;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return exit_other;
    }
}
