#include "irsched/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "irsched/channel.hpp"
#include "irsched/svg.hpp"

namespace irsched {

namespace {

std::string fmt_double(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double mean(const std::vector<double>& v)
{
    if (v.empty())
        return 0.0;
    double s = 0.0;
    for (double x : v)
        s += x;
    return s / static_cast<double>(v.size());
}

} // namespace

std::string scheduler_name(SchedulerKind kind)
{
    switch (kind) {
    case SchedulerKind::kGmax:
        return "gmax";
    case SchedulerKind::kDa:
        return "da";
    case SchedulerKind::kUoscbc:
        return "uoscbc";
    case SchedulerKind::kGa:
        return "ga";
    case SchedulerKind::kExhaustive:
        return "exhaustive";
    }
    return "unknown";
}

SchedulerKind scheduler_from_name(const std::string& name)
{
    if (name == "gmax")
        return SchedulerKind::kGmax;
    if (name == "da")
        return SchedulerKind::kDa;
    if (name == "uoscbc")
        return SchedulerKind::kUoscbc;
    if (name == "ga")
        return SchedulerKind::kGa;
    if (name == "exhaustive")
        return SchedulerKind::kExhaustive;
    throw std::invalid_argument("unknown scheduler: " + name);
}

double SchedulerMetrics::mean_sum_rate() const { return mean(drop_sum_rate); }

double SchedulerMetrics::stderr_sum_rate() const
{
    const std::size_t n = drop_sum_rate.size();
    if (n < 2)
        return 0.0;
    const double m = mean_sum_rate();
    double ss = 0.0;
    for (double x : drop_sum_rate)
        ss += (x - m) * (x - m);
    return std::sqrt(ss / static_cast<double>(n - 1)) / std::sqrt(static_cast<double>(n));
}

double SchedulerMetrics::mean_reconfig_bits() const
{
    if (drop_reconfig_bits.empty())
        return 0.0;
    double s = 0.0;
    for (int b : drop_reconfig_bits)
        s += b;
    return s / static_cast<double>(drop_reconfig_bits.size());
}

double SchedulerMetrics::mean_ms() const { return mean(drop_ms); }

ScenarioConfig apply_sweep(const ScenarioConfig& cfg, const std::string& param,
                           const std::string& value)
{
    ScenarioConfig out = cfg;
    auto as_int = [&value]() {
        try {
            std::size_t pos = 0;
            const int v = std::stoi(value, &pos);
            if (pos != value.size())
                throw std::invalid_argument("trailing characters");
            return v;
        } catch (const std::exception&) {
            throw std::invalid_argument("sweep value is not an integer: " + value);
        }
    };
    if (param == "Z")
        out.Z = as_int();
    else if (param == "F")
        out.F = as_int();
    else if (param == "K")
        out.K = as_int();
    else if (param == "b_codebook" || param == "bq")
        out.b_codebook = as_int();
    else if (param == "b_irs")
        out.b_irs = as_int();
    else if (param == "n_gnb")
        out.n_gnb = as_int();
    else if (param == "n_ue")
        out.n_ue = as_int();
    else if (param == "irs") {
        const auto x = value.find('x');
        if (x == std::string::npos)
            throw std::invalid_argument("irs sweep value must look like 8x8, got: " + value);
        out.irs_rows = std::stoi(value.substr(0, x));
        out.irs_cols = std::stoi(value.substr(x + 1));
    } else {
        throw std::invalid_argument("unknown sweep parameter: " + param);
    }
    return out;
}

double sweep_numeric_value(const std::string& value)
{
    const auto x = value.find('x');
    if (x != std::string::npos)
        return std::stod(value.substr(0, x)) * std::stod(value.substr(x + 1));
    return std::stod(value);
}

namespace {

// Everything the codebook depends on; grid points sharing this key reuse the
// built codebook.
std::string codebook_cache_key(const ScenarioConfig& cfg)
{
    std::ostringstream os;
    os << cfg.training_count() << '|' << cfg.F << '|' << cfg.b_codebook << '|' << cfg.b_irs
       << '|' << cfg.n_irs() << '|' << cfg.n_gnb << '|' << cfg.n_ue << '|' << cfg.carrier_hz
       << '|' << cfg.band_hz << '|' << cfg.tx_power_dbm << '|' << cfg.noise_psd_dbm_hz << '|'
       << cfg.cell_radius_m << '|' << cfg.gnb_pos_m[0] << ',' << cfg.gnb_pos_m[1] << '|'
       << cfg.irs_pos_m[0] << ',' << cfg.irs_pos_m[1] << '|' << cfg.seed;
    return os.str();
}

struct DropResult {
    std::map<SchedulerKind, double> sum_rates;
    std::map<SchedulerKind, std::vector<double>> ue_rates;
    std::map<SchedulerKind, int> reconfig_bits;
    std::map<SchedulerKind, double> ms;
    std::vector<std::string> violations;
};

DropResult run_drop(const ScenarioConfig& cfg, const Codebook& cb, const RunOptions& opts,
                    int drop_index)
{
    using clock = std::chrono::steady_clock;
    DropResult res;

    RngStream pos_rng(cfg.seed, StreamTag::kDropPositions, drop_index);
    RngStream chan_rng(cfg.seed, StreamTag::kDropChannels, drop_index);
    const UeDrop drop = drop_ues(cfg, pos_rng);
    const ChannelSet channels = synthesize_channels(cfg, drop, chan_rng);
    const RateTable table = build_rate_table(channels, cb, cfg, opts.mode);

    std::optional<AssignmentGrid> gmax_grid;
    auto get_gmax = [&]() -> const AssignmentGrid& {
        if (!gmax_grid)
            gmax_grid = gmax(table, cfg);
        return *gmax_grid;
    };

    for (SchedulerKind kind : opts.schedulers) {
        const auto t0 = clock::now();
        AssignmentGrid grid;
        switch (kind) {
        case SchedulerKind::kGmax:
            grid = get_gmax();
            break;
        case SchedulerKind::kDa:
            grid = da(table, cfg);
            break;
        case SchedulerKind::kUoscbc:
            grid = uoscbc(table, cfg);
            break;
        case SchedulerKind::kGa: {
            RngStream ga_rng(cfg.seed, StreamTag::kGa, drop_index);
            grid = ga(table, cfg, get_gmax(), ga_rng);
            break;
        }
        case SchedulerKind::kExhaustive:
            grid = exhaustive(table, cfg);
            break;
        }
        const auto t1 = clock::now();

        for (const auto& violation : validate(grid, cfg))
            res.violations.push_back(scheduler_name(kind) + " drop " +
                                     std::to_string(drop_index) + ": " + violation);

        res.sum_rates[kind] = sum_rate(grid, table);
        res.reconfig_bits[kind] = cfg.b_codebook * reconfiguration_count(grid);
        res.ms[kind] = std::chrono::duration<double, std::milli>(t1 - t0).count();
        std::vector<double> ue_rates(cfg.K, 0.0);
        for (int k = 0; k < cfg.K; ++k)
            if (grid.assign[k])
                ue_rates[k] = table.rate(k, grid.configs[grid.assign[k]->cluster],
                                         grid.assign[k]->carrier);
        res.ue_rates[kind] = std::move(ue_rates);
    }
    return res;
}

} // namespace

MetricsReport run_experiment(const ScenarioConfig& base_cfg, const RunOptions& opts)
{
    MetricsReport report;
    report.sweep_param = opts.sweep_param;

    std::vector<std::pair<std::string, std::string>> grid; // (param, value)
    if (opts.sweep_param.empty()) {
        grid.emplace_back("", "");
    } else {
        for (const auto& v : opts.sweep_values)
            grid.emplace_back(opts.sweep_param, v);
    }

    std::map<std::string, Codebook> codebook_cache;
    for (const auto& [param, value] : grid) {
        GridPointReport point;
        point.param = param;
        point.value = value;
        ScenarioConfig cfg = base_cfg;
        if (!param.empty()) {
            try {
                cfg = apply_sweep(base_cfg, param, value);
            } catch (const std::exception& e) {
                point.skipped = true;
                point.skip_reason = e.what();
                std::cerr << "skipping sweep point " << param << "=" << value << ": "
                          << e.what() << "\n";
                report.points.push_back(std::move(point));
                continue;
            }
        }
        point.cfg = cfg;
        const auto violations = cfg.check();
        if (!violations.empty()) {
            point.skipped = true;
            point.skip_reason = violations.front();
            std::cerr << "skipping sweep point " << param << "=" << value << ": "
                      << violations.front() << "\n";
            report.points.push_back(std::move(point));
            continue;
        }

        const Codebook* cb = nullptr;
        if (opts.prebuilt_codebook) {
            if (opts.prebuilt_codebook->entries.empty() ||
                opts.prebuilt_codebook->entries[0].size() != cfg.n_irs())
                throw std::invalid_argument(
                    "prebuilt codebook does not match the scenario IRS size");
            cb = &*opts.prebuilt_codebook;
        } else {
            const std::string key = codebook_cache_key(cfg);
            auto it = codebook_cache.find(key);
            if (it == codebook_cache.end())
                it = codebook_cache.emplace(key, build_codebook(cfg)).first;
            cb = &it->second;
        }

        std::vector<DropResult> drops(cfg.n_drops);
        parallel_for(static_cast<std::size_t>(cfg.n_drops), opts.n_threads,
                     [&](std::size_t d) {
                         drops[d] = run_drop(cfg, *cb, opts, static_cast<int>(d));
                     });

        std::vector<std::string> all_violations;
        for (const auto& d : drops)
            all_violations.insert(all_violations.end(), d.violations.begin(),
                                  d.violations.end());
        if (!all_violations.empty()) {
            std::ostringstream os;
            os << "scheduler output failed validation:";
            for (const auto& v : all_violations)
                os << "\n  - " << v;
            throw std::runtime_error(os.str());
        }

        for (SchedulerKind kind : opts.schedulers) {
            SchedulerMetrics m;
            for (const auto& d : drops) {
                m.drop_sum_rate.push_back(d.sum_rates.at(kind));
                m.drop_reconfig_bits.push_back(d.reconfig_bits.at(kind));
                m.drop_ms.push_back(d.ms.at(kind));
                const auto& ue = d.ue_rates.at(kind);
                m.per_ue_rates.insert(m.per_ue_rates.end(), ue.begin(), ue.end());
            }
            point.per_scheduler.emplace(kind, std::move(m));
        }
        report.points.push_back(std::move(point));
    }
    return report;
}

void emit_csv(const MetricsReport& report, const std::filesystem::path& dir)
{
    std::filesystem::create_directories(dir);

    std::ofstream summary(dir / "summary.csv");
    if (!summary)
        throw std::runtime_error("cannot write " + (dir / "summary.csv").string());
    summary << "param,value,scheduler,n_drops,mean_sum_rate_bps_hz,stderr_sum_rate_bps_hz,"
               "mean_reconfig_bits_per_frame,zf_over_k\n";

    std::ofstream drops(dir / "drops.csv");
    if (!drops)
        throw std::runtime_error("cannot write " + (dir / "drops.csv").string());
    drops << "param,value,scheduler,drop,sum_rate_bps_hz,reconfig_bits\n";

    std::ofstream perue(dir / "perue.csv");
    if (!perue)
        throw std::runtime_error("cannot write " + (dir / "perue.csv").string());
    perue << "param,value,scheduler,drop,ue,rate_bps_hz\n";

    for (const auto& point : report.points) {
        if (point.skipped)
            continue;
        const double zf_over_k =
            static_cast<double>(point.cfg.Z) * point.cfg.F / point.cfg.K;
        for (const auto& [kind, m] : point.per_scheduler) {
            const std::string name = scheduler_name(kind);
            summary << point.param << ',' << point.value << ',' << name << ','
                    << m.drop_sum_rate.size() << ',' << fmt_double(m.mean_sum_rate()) << ','
                    << fmt_double(m.stderr_sum_rate()) << ','
                    << fmt_double(m.mean_reconfig_bits()) << ',' << fmt_double(zf_over_k)
                    << '\n';
            for (std::size_t d = 0; d < m.drop_sum_rate.size(); ++d)
                drops << point.param << ',' << point.value << ',' << name << ',' << d << ','
                      << fmt_double(m.drop_sum_rate[d]) << ',' << m.drop_reconfig_bits[d]
                      << '\n';
            const int K = point.cfg.K;
            for (std::size_t s = 0; s < m.per_ue_rates.size(); ++s)
                perue << point.param << ',' << point.value << ',' << name << ',' << s / K
                      << ',' << s % K << ',' << fmt_double(m.per_ue_rates[s]) << '\n';
        }
    }
}

void emit_timings(const MetricsReport& report, const std::filesystem::path& dir)
{
    std::filesystem::create_directories(dir);
    std::ofstream out(dir / "timings.txt");
    if (!out)
        throw std::runtime_error("cannot write " + (dir / "timings.txt").string());
    out << "# wall clock per scheduler invocation (mean over drops); not part of the\n"
           "# deterministic CSV set\n";
    for (const auto& point : report.points) {
        if (point.skipped)
            continue;
        for (const auto& [kind, m] : point.per_scheduler)
            out << point.param << '=' << point.value << ' ' << scheduler_name(kind) << ' '
                << m.mean_ms() << " ms/drop\n";
    }
}

std::vector<std::string> emit_plots(const MetricsReport& report,
                                    const std::filesystem::path& dir)
{
    std::filesystem::create_directories(dir);
    std::vector<std::string> written;

    std::vector<const GridPointReport*> active;
    for (const auto& p : report.points)
        if (!p.skipped)
            active.push_back(&p);
    if (active.empty())
        throw std::invalid_argument("emit_plots: empty report");

    if (active.size() >= 2) {
        SvgPlot curve("Average sum rate vs " + report.sweep_param, report.sweep_param,
                      "average sum rate [bit/s/Hz]");
        std::map<SchedulerKind, std::pair<std::vector<double>, std::vector<double>>> series;
        for (const auto* p : active)
            for (const auto& [kind, m] : p->per_scheduler) {
                series[kind].first.push_back(sweep_numeric_value(p->value));
                series[kind].second.push_back(m.mean_sum_rate());
            }
        for (const auto& [kind, xy] : series)
            curve.add_series(scheduler_name(kind), xy.first, xy.second);
        const std::string name = "rate_vs_" + report.sweep_param + ".svg";
        curve.write((dir / name).string());
        written.push_back(name);
    } else {
        std::cerr << "emit_plots: single grid point, curve plot skipped\n";
    }

    for (const auto* p : active) {
        const std::string suffix =
            p->param.empty() ? std::string("single") : p->param + "_" + p->value;
        SvgPlot ecdf("Per-UE rate ECDF (" + suffix + ")", "rate [bit/s/Hz]", "ECDF");
        for (const auto& [kind, m] : p->per_scheduler) {
            std::vector<double> xs = m.per_ue_rates;
            std::sort(xs.begin(), xs.end());
            std::vector<double> ys(xs.size());
            for (std::size_t s = 0; s < xs.size(); ++s)
                ys[s] = static_cast<double>(s + 1) / static_cast<double>(xs.size());
            ecdf.add_series(scheduler_name(kind), std::move(xs), std::move(ys));
        }
        const std::string name = "ecdf_" + suffix + ".svg";
        ecdf.write((dir / name).string());
        written.push_back(name);
    }
    return written;
}

} // namespace irsched
