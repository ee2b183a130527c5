#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "misfit/econ.hpp"

namespace misfit {

/// Gini coefficient of non-negative values via the sorted-rank formula
///   G = sum_i (2i - n - 1) x_(i) / (n * sum x),  i = 1..n ascending.
/// Returns 0 when every value is zero. Throws std::invalid_argument on an
/// empty input or a negative value.
double gini(std::span<const double> values);

std::size_t digital_count(const PopulationState& pop);

std::vector<double> valuations(const PopulationState& pop);

// Sample excess kurtosis (m4 / m2^2 - 3, population moments). 0 for degenerate input.
double excess_kurtosis(std::span<const double> values);

struct MeanStd {
    double mean = 0.0;
    double std = 0.0;
};

// Mean and sample standard deviation (n-1); std is 0 for a single value.
MeanStd mean_std(std::span<const double> values);

// Names of the per-period statistics, in output order.
const std::vector<std::string>& statistic_names();

double statistic_value(const PeriodStats& stats, std::string_view name);

struct AggregatedPeriod {
    int period = 0;
    std::vector<MeanStd> values;  // parallel to statistic_names()
};

/// Element-wise mean and sample std across runs, per period and statistic.
/// All series must have the same length.
std::vector<AggregatedPeriod> aggregate_runs(std::span<const std::vector<PeriodStats>> per_run_series);

// Log-spaced histogram bins over [1, 1e12] with a catch-all last bin.
struct LogHistogram {
    std::vector<double> edges;  // bins are [edges[i], edges[i+1]); last bin is unbounded

    static LogHistogram standard();
    std::size_t bin_count() const { return edges.size(); }
    std::vector<std::size_t> counts(std::span<const double> values) const;
};

}  // namespace misfit
