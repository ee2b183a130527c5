#include "misfit/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace misfit {

double gini(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("gini of an empty list");
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    if (sorted.front() < 0.0) throw std::invalid_argument("gini needs non-negative values");

    // The rank weights sum to zero, so shifting by the minimum leaves the
    // numerator unchanged and makes equal values give exactly 0.
    const auto n = static_cast<double>(sorted.size());
    const double lowest = sorted.front();
    double total = 0.0;
    double weighted = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        total += sorted[i];
        weighted += (2.0 * static_cast<double>(i + 1) - n - 1.0) * (sorted[i] - lowest);
    }
    if (total == 0.0) return 0.0;
    return std::max(0.0, weighted / (n * total));
}

std::size_t digital_count(const PopulationState& pop) {
    return static_cast<std::size_t>(
        std::count_if(pop.agents.begin(), pop.agents.end(), [](const Agent& a) { return a.is_digital(); }));
}

std::vector<double> valuations(const PopulationState& pop) {
    std::vector<double> v;
    v.reserve(pop.agents.size());
    for (const Agent& a : pop.agents) v.push_back(a.valuation);
    return v;
}

double excess_kurtosis(std::span<const double> values) {
    if (values.size() < 2) return 0.0;
    const auto n = static_cast<double>(values.size());
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= n;
    double m2 = 0.0, m4 = 0.0;
    for (double v : values) {
        const double d2 = (v - mean) * (v - mean);
        m2 += d2;
        m4 += d2 * d2;
    }
    m2 /= n;
    m4 /= n;
    if (m2 == 0.0) return 0.0;
    return m4 / (m2 * m2) - 3.0;
}

MeanStd mean_std(std::span<const double> values) {
    if (values.empty()) return {};
    const auto n = static_cast<double>(values.size());
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= n;
    if (values.size() == 1) return {mean, 0.0};
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    return {mean, std::sqrt(ss / (n - 1.0))};
}

const std::vector<std::string>& statistic_names() {
    static const std::vector<std::string> names{"bankruptcies", "digital_count", "gini", "mean_valuation"};
    return names;
}

double statistic_value(const PeriodStats& s, std::string_view name) {
    if (name == "gini") return s.gini;
    if (name == "digital_count") return static_cast<double>(s.digital_count);
    if (name == "bankruptcies") return static_cast<double>(s.bankruptcies);
    if (name == "mean_valuation") return s.mean_valuation;
    throw std::invalid_argument("unknown statistic '" + std::string(name) + "'");
}

std::vector<AggregatedPeriod> aggregate_runs(std::span<const std::vector<PeriodStats>> per_run_series) {
    if (per_run_series.empty()) return {};
    const std::size_t length = per_run_series.front().size();
    for (const auto& series : per_run_series)
        if (series.size() != length) throw std::invalid_argument("aggregate_runs: series lengths differ");

    const auto& names = statistic_names();
    std::vector<AggregatedPeriod> out(length);
    std::vector<double> column(per_run_series.size());
    for (std::size_t t = 0; t < length; ++t) {
        out[t].period = per_run_series.front()[t].period;
        for (const auto& name : names) {
            for (std::size_t r = 0; r < per_run_series.size(); ++r)
                column[r] = statistic_value(per_run_series[r][t], name);
            out[t].values.push_back(mean_std(column));
        }
    }
    return out;
}

LogHistogram LogHistogram::standard() {
    // [0, 1) then quarter-decades from 1 to 1e12.
    LogHistogram h;
    h.edges.push_back(0.0);
    for (int i = 0; i <= 48; ++i) h.edges.push_back(std::pow(10.0, i / 4.0));
    return h;
}

std::vector<std::size_t> LogHistogram::counts(std::span<const double> values) const {
    std::vector<std::size_t> c(edges.size(), 0);
    for (double v : values) {
        const auto it = std::upper_bound(edges.begin(), edges.end(), v);
        const auto bin = it == edges.begin() ? 0 : static_cast<std::size_t>(it - edges.begin()) - 1;
        ++c[bin];
    }
    return c;
}

}  // namespace misfit
