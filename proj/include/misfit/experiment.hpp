#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "misfit/config.hpp"
#include "misfit/metrics.hpp"

namespace misfit {

struct RunResult {
    std::vector<PeriodStats> series;  // one entry per period, periods 1..n
    std::vector<double> final_valuations;
};

// One full trajectory, deterministic in (config, seed). Validates the config first.
RunResult run_experiment(const ModelConfig& config, std::uint64_t seed);

struct RunRecord {
    std::vector<std::pair<std::string, std::string>> params;
    int period = 0;
    std::string statistic;
    double mean = 0.0;
    double std = 0.0;
    std::size_t n_runs = 0;

    bool operator==(const RunRecord&) const = default;
};

struct HistogramRecord {
    std::vector<std::pair<std::string, std::string>> params;
    std::size_t bin = 0;
    double lower = 0.0;
    MeanStd count;
};

struct SweepOptions {
    unsigned workers = 1;
    bool histogram = false;
};

struct SweepResult {
    std::vector<RunRecord> records;
    std::vector<HistogramRecord> histogram;  // filled only when requested
};

/// Runs every (grid point, run) task on a pool of `workers` threads.
///
/// Run r of point p is seeded with derive_seed(master_seed, p, r), so the
/// output does not depend on the worker count. Records are ordered by grid
/// point, then period, then statistic. A failing run is rethrown as a
/// std::runtime_error carrying the grid point's parameters.
SweepResult run_sweep(const ExperimentPlan& plan, const SweepOptions& options = {});

// Raw per-run results for one config, in run order; used by the acceptance suite.
std::vector<RunResult> run_replicates(const ModelConfig& config, std::size_t n_runs,
                                      std::uint64_t master_seed, std::uint32_t point_index,
                                      unsigned workers);

unsigned default_worker_count();

}  // namespace misfit
