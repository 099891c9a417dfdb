#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "irsched/channel.hpp"
#include "irsched/harness.hpp"
#include "irsched/irs.hpp"
#include "irsched/rate.hpp"
#include "irsched/scenario.hpp"

namespace {

std::vector<std::string> split_csv(const std::string& s)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            out.push_back(item);
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"IRS-assisted OFDMA downlink scheduling simulator"};
    app.require_subcommand(1);

    // --- run ---
    auto* run = app.add_subcommand("run", "Monte Carlo experiment sweep");
    std::string config_path, sweep_spec, schedulers_spec = "gmax", out_dir = "out";
    std::string codebook_arg = "build", mode_spec = "exhaustive";
    std::uint64_t seed_override = 0;
    bool seed_given = false;
    int threads = static_cast<int>(std::thread::hardware_concurrency());
    run->add_option("--config", config_path, "scenario JSON file")->required();
    run->add_option("--sweep", sweep_spec, "parameter sweep, e.g. Z=1,2,5,10 or irs=4x8,8x8");
    run->add_option("--schedulers", schedulers_spec,
                    "comma list of gmax,da,uoscbc,ga,exhaustive");
    run->add_option("--out", out_dir, "output directory");
    run->add_option("--codebook", codebook_arg, "'build' or a codebook JSON file to reuse");
    run->add_option("--seed", seed_override, "override the config seed")
        ->each([&seed_given](const std::string&) { seed_given = true; });
    run->add_option("--mode", mode_spec, "rate table mode: exhaustive|projected");
    run->add_option("--threads", threads, "worker threads for drops");

    // --- codebook ---
    auto* cbcmd = app.add_subcommand("codebook", "build and save the cell-specific codebook");
    std::string cb_config, cb_out = "codebook.json";
    std::uint64_t cb_seed = 0;
    bool cb_seed_given = false;
    cbcmd->add_option("--config", cb_config, "scenario JSON file")->required();
    cbcmd->add_option("--out", cb_out, "output codebook JSON path");
    cbcmd->add_option("--seed", cb_seed, "override the config seed")
        ->each([&cb_seed_given](const std::string&) { cb_seed_given = true; });

    // --- rate-table ---
    auto* rtcmd = app.add_subcommand("rate-table", "dump one drop's rate table as CSV");
    std::string rt_config, rt_out = "rate_table.csv", rt_codebook = "build";
    std::string rt_mode = "exhaustive";
    int rt_drop = 0;
    rtcmd->add_option("--config", rt_config, "scenario JSON file")->required();
    rtcmd->add_option("--out", rt_out, "output CSV path");
    rtcmd->add_option("--codebook", rt_codebook, "'build' or codebook JSON file");
    rtcmd->add_option("--drop", rt_drop, "drop index");
    rtcmd->add_option("--mode", rt_mode, "exhaustive|projected");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) {
            irsched::ScenarioConfig cfg = irsched::ScenarioConfig::from_file(config_path);
            if (seed_given)
                cfg.seed = seed_override;
            cfg.validate_or_throw();

            irsched::RunOptions opts;
            opts.schedulers.clear();
            for (const auto& name : split_csv(schedulers_spec))
                opts.schedulers.push_back(irsched::scheduler_from_name(name));
            if (opts.schedulers.empty())
                throw std::invalid_argument("no schedulers requested");
            if (!sweep_spec.empty()) {
                const auto eq = sweep_spec.find('=');
                if (eq == std::string::npos)
                    throw std::invalid_argument("--sweep must look like param=v1,v2,...");
                opts.sweep_param = sweep_spec.substr(0, eq);
                opts.sweep_values = split_csv(sweep_spec.substr(eq + 1));
                if (opts.sweep_values.empty())
                    throw std::invalid_argument("--sweep has no values");
            }
            if (mode_spec == "exhaustive")
                opts.mode = irsched::TableMode::kExhaustive;
            else if (mode_spec == "projected")
                opts.mode = irsched::TableMode::kProjected;
            else
                throw std::invalid_argument("--mode must be exhaustive or projected");
            opts.n_threads = std::max(1, threads);
            if (codebook_arg != "build")
                opts.prebuilt_codebook = irsched::Codebook::from_file(codebook_arg);

            const irsched::MetricsReport report = irsched::run_experiment(cfg, opts);
            bool any_active = false;
            for (const auto& point : report.points)
                any_active |= !point.skipped;
            if (!any_active)
                throw std::runtime_error("every sweep point was skipped; nothing to report");
            irsched::emit_csv(report, out_dir);
            irsched::emit_timings(report, out_dir);
            irsched::emit_plots(report, out_dir);

            for (const auto& point : report.points) {
                if (point.skipped) {
                    std::cout << point.param << "=" << point.value
                              << "  skipped: " << point.skip_reason << "\n";
                    continue;
                }
                for (const auto& [kind, m] : point.per_scheduler) {
                    std::cout << (point.param.empty()
                                      ? std::string("run")
                                      : point.param + "=" + point.value)
                              << "  " << irsched::scheduler_name(kind)
                              << "  mean sum rate = " << m.mean_sum_rate() << " bit/s/Hz"
                              << " (stderr " << m.stderr_sum_rate() << ", reconfig bits "
                              << m.mean_reconfig_bits() << ")\n";
                }
            }
            std::cout << "wrote CSV and plots to " << out_dir << "\n";
        } else if (*cbcmd) {
            irsched::ScenarioConfig cfg = irsched::ScenarioConfig::from_file(cb_config);
            if (cb_seed_given)
                cfg.seed = cb_seed;
            cfg.validate_or_throw();
            const irsched::Codebook cb = irsched::build_codebook(cfg);
            cb.save(cb_out);
            std::cout << "wrote " << cb.size() << "-entry codebook to " << cb_out << "\n";
        } else if (*rtcmd) {
            irsched::ScenarioConfig cfg = irsched::ScenarioConfig::from_file(rt_config);
            cfg.validate_or_throw();
            irsched::Codebook cb = rt_codebook == "build"
                                       ? irsched::build_codebook(cfg)
                                       : irsched::Codebook::from_file(rt_codebook);
            irsched::RngStream pos(cfg.seed, irsched::StreamTag::kDropPositions, rt_drop);
            irsched::RngStream chan(cfg.seed, irsched::StreamTag::kDropChannels, rt_drop);
            const irsched::UeDrop drop = irsched::drop_ues(cfg, pos);
            const irsched::ChannelSet channels = irsched::synthesize_channels(cfg, drop, chan);
            const irsched::TableMode mode = rt_mode == "projected"
                                                ? irsched::TableMode::kProjected
                                                : irsched::TableMode::kExhaustive;
            const irsched::RateTable table = irsched::build_rate_table(channels, cb, cfg, mode);
            std::ofstream out(rt_out);
            if (!out)
                throw std::runtime_error("cannot write " + rt_out);
            irsched::write_rate_table_csv(table, out);
            std::cout << "wrote rate table to " << rt_out << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
