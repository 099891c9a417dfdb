#ifndef IRSCHED_HARNESS_HPP
#define IRSCHED_HARNESS_HPP

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "irsched/irs.hpp"
#include "irsched/rate.hpp"
#include "irsched/scenario.hpp"
#include "irsched/sched.hpp"

namespace irsched {

enum class SchedulerKind { kGmax, kDa, kUoscbc, kGa, kExhaustive };

std::string scheduler_name(SchedulerKind kind);
SchedulerKind scheduler_from_name(const std::string& name);

struct SchedulerMetrics {
    std::vector<double> drop_sum_rate;   // per drop, index order
    std::vector<double> per_ue_rates;    // K * n_drops ECDF samples
    std::vector<int> drop_reconfig_bits; // b_codebook * reconfigurations, per drop
    std::vector<double> drop_ms;         // wall clock; reported separately, never
                                         // part of the deterministic CSV output

    double mean_sum_rate() const;
    double stderr_sum_rate() const;
    double mean_reconfig_bits() const;
    double mean_ms() const;
};

struct GridPointReport {
    std::string param;  // swept parameter name ("" for a single point)
    std::string value;  // swept value as written in the sweep spec
    ScenarioConfig cfg; // fully resolved config at this point
    bool skipped = false;
    std::string skip_reason;
    std::map<SchedulerKind, SchedulerMetrics> per_scheduler;
};

struct MetricsReport {
    std::string sweep_param;
    std::vector<GridPointReport> points;
};

struct RunOptions {
    std::vector<SchedulerKind> schedulers = {SchedulerKind::kGmax};
    std::string sweep_param;               // empty: single grid point
    std::vector<std::string> sweep_values; // raw value tokens
    TableMode mode = TableMode::kExhaustive;
    int n_threads = 1;
    std::optional<Codebook> prebuilt_codebook;
};

// Returns a copy of cfg with `param` set to `value`; throws on unknown
// parameter names. "irs" takes "RxC" panel sizes, everything else integers.
ScenarioConfig apply_sweep(const ScenarioConfig& cfg, const std::string& param,
                           const std::string& value);

// Numeric x-axis position for a sweep token ("8x8" -> 64).
double sweep_numeric_value(const std::string& value);

// Seeded Monte Carlo sweep: per grid point, build (or reuse) the codebook,
// then per drop synthesize channels, build the rate table and run every
// requested scheduler. Throws if any scheduler output fails validation.
MetricsReport run_experiment(const ScenarioConfig& cfg, const RunOptions& opts);

// summary.csv, drops.csv, perue.csv under dir; byte-deterministic for a
// fixed (config, seed).
void emit_csv(const MetricsReport& report, const std::filesystem::path& dir);

// Wall-clock report (timings.txt); intentionally outside the CSV set.
void emit_timings(const MetricsReport& report, const std::filesystem::path& dir);

// Rate-vs-parameter curve (when >= 2 points) and one per-UE-rate ECDF per
// grid point. Returns the written file names; prints a notice for skipped
// plots.
std::vector<std::string> emit_plots(const MetricsReport& report,
                                    const std::filesystem::path& dir);

} // namespace irsched

#endif
