#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "misfit/experiment.hpp"
#include "misfit/metrics.hpp"

namespace misfit {

// %.9g
std::string format_float(double value);

/// Header row, then one row per record:
///   <axis columns sorted by name>,period,statistic,mean,std,n_runs
/// The axis columns come from the first record; all records must carry the
/// same axes. An empty record list writes `period,statistic,mean,std,n_runs`.
void write_csv(const std::vector<RunRecord>& records, std::ostream& out);
void write_csv(const std::vector<RunRecord>& records, const std::string& path);

std::vector<RunRecord> read_csv(std::istream& in);

// Histogram export; the first line is a `# bin_edges=` comment.
void write_histogram_csv(const std::vector<HistogramRecord>& records, const LogHistogram& bins,
                         std::ostream& out);

}  // namespace misfit
