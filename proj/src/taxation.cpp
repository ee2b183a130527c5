#include "misfit/taxation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace misfit {

namespace {

void check_rate(double r) {
    if (!(r >= 0.0 && r <= 1.0)) throw std::invalid_argument("tax rate outside [0, 1]");
}

}  // namespace

TaxPolicy::TaxPolicy(FlatTax flat) : schedule_(flat) { check_rate(flat.rate); }

TaxPolicy::TaxPolicy(ProgressiveTax p) {
    if (p.rates.size() != p.quantiles.size() + 1)
        throw std::invalid_argument("progressive tax needs exactly one more rate than quantiles");
    if (p.initial_thresholds.size() != p.quantiles.size())
        throw std::invalid_argument("progressive tax needs one initial threshold per quantile");
    for (double r : p.rates) check_rate(r);
    for (std::size_t i = 0; i < p.quantiles.size(); ++i) {
        const double q = p.quantiles[i];
        if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("tax quantile outside (0, 1)");
        if (i > 0 && !(q > p.quantiles[i - 1]))
            throw std::invalid_argument("tax quantiles must be strictly ascending");
        if (i > 0 && p.initial_thresholds[i] < p.initial_thresholds[i - 1])
            throw std::invalid_argument("initial thresholds must be non-decreasing");
    }
    schedule_ = std::move(p);
}

double TaxPolicy::max_rate() const {
    if (is_flat()) return flat().rate;
    const auto& r = progressive().rates;
    return *std::max_element(r.begin(), r.end());
}

const std::vector<std::string>& TaxPolicy::preset_names() {
    static const std::vector<std::string> names{"flat15", "moderate", "high", "extra_high"};
    return names;
}

TaxPolicy TaxPolicy::preset(std::string_view name) {
    const std::vector<double> quartiles{0.25, 0.5, 0.75};
    const std::vector<double> first_period{10.0, 20.0, 30.0};
    if (name == "flat15") return FlatTax{0.15};
    if (name == "moderate") return ProgressiveTax{quartiles, {0.10, 0.15, 0.25, 0.30}, first_period};
    if (name == "high") return ProgressiveTax{quartiles, {0.15, 0.25, 0.50, 0.70}, first_period};
    if (name == "extra_high") return ProgressiveTax{quartiles, {0.10, 0.15, 0.30, 0.90}, first_period};
    throw std::invalid_argument("unknown tax preset '" + std::string(name) + "'");
}

double nearest_rank_quantile(std::span<const double> sorted_values, double q) {
    if (sorted_values.empty()) throw std::invalid_argument("quantile of an empty list");
    const double n = static_cast<double>(sorted_values.size());
    const double exact = q * n;
    double rank = std::ceil(exact);
    // q*n that should be an integer can land a hair above it (0.1 * 30 -> 3.0000000000000004).
    if (rank - exact > 1.0 - 1e-9) rank -= 1.0;
    const auto index = static_cast<std::size_t>(std::clamp(rank, 1.0, n)) - 1;
    return sorted_values[index];
}

BracketBounds compute_brackets(std::span<const double> previous_gains,
                               std::span<const double> quantiles,
                               std::span<const double> initial_thresholds) {
    if (previous_gains.empty())
        return {std::vector<double>(initial_thresholds.begin(), initial_thresholds.end())};
    std::vector<double> sorted(previous_gains.begin(), previous_gains.end());
    std::sort(sorted.begin(), sorted.end());
    BracketBounds bounds;
    bounds.thresholds.reserve(quantiles.size());
    for (double q : quantiles) bounds.thresholds.push_back(nearest_rank_quantile(sorted, q));
    return bounds;
}

BracketBounds compute_brackets(std::span<const double> previous_gains, const TaxPolicy& policy) {
    if (policy.is_flat()) return {};
    const auto& p = policy.progressive();
    return compute_brackets(previous_gains, p.quantiles, p.initial_thresholds);
}

double tax_due(double gain, const TaxPolicy& policy, const BracketBounds& bounds) {
    if (!(gain > 0.0)) return 0.0;
    if (policy.is_flat()) return policy.flat().rate * gain;

    const auto& rates = policy.progressive().rates;
    const auto& t = bounds.thresholds;
    if (t.size() + 1 != rates.size())
        throw std::invalid_argument("bracket bounds do not match the tax policy");

    // Only the positive part of each slice is taxable; the first slice starts at 0.
    double tax = 0.0;
    double lower = 0.0;
    for (std::size_t i = 0; i < rates.size(); ++i) {
        const double upper = i < t.size() ? t[i] : std::numeric_limits<double>::infinity();
        const double top = std::min(gain, upper);
        if (top > lower) {
            tax += rates[i] * (top - lower);
            lower = top;
        }
        if (gain <= upper) break;
    }
    return tax;
}

}  // namespace misfit
