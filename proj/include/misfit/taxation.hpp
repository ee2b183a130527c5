#pragma once

#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace misfit {

struct FlatTax {
    double rate = 0.15;
};

/// Progressive schedule over quantiles of the previous period's gains.
///
/// `rates[i]` applies to the slice of a gain between thresholds i-1 and i,
/// with an open lower edge for the first bracket and an open upper edge for
/// the last one. `initial_thresholds` stand in for the quantiles before any
/// gains have been observed.
struct ProgressiveTax {
    std::vector<double> quantiles;
    std::vector<double> rates;
    std::vector<double> initial_thresholds;
};

class TaxPolicy {
public:
    TaxPolicy() = default;
    TaxPolicy(FlatTax flat);
    TaxPolicy(ProgressiveTax progressive);

    bool is_flat() const { return std::holds_alternative<FlatTax>(schedule_); }
    const FlatTax& flat() const { return std::get<FlatTax>(schedule_); }
    const ProgressiveTax& progressive() const { return std::get<ProgressiveTax>(schedule_); }

    double max_rate() const;

    // Named presets: flat15, moderate, high, extra_high. Throws std::invalid_argument otherwise.
    static TaxPolicy preset(std::string_view name);
    static const std::vector<std::string>& preset_names();

private:
    std::variant<FlatTax, ProgressiveTax> schedule_{FlatTax{}};
};

struct BracketBounds {
    std::vector<double> thresholds;  // non-decreasing
};

// Nearest-rank quantile (1-based index ceil(q*n) of the sorted values).
double nearest_rank_quantile(std::span<const double> sorted_values, double q);

/// Bracket thresholds for the coming period.
///
/// Uses nearest-rank quantiles of every gain from the previous period, losses
/// included. With no previous gains the policy's initial thresholds are used.
/// Flat policies have no brackets and yield empty bounds.
BracketBounds compute_brackets(std::span<const double> previous_gains, const TaxPolicy& policy);

BracketBounds compute_brackets(std::span<const double> previous_gains,
                               std::span<const double> quantiles,
                               std::span<const double> initial_thresholds);

// Tax on one period's gross gain. Zero for non-positive gains.
double tax_due(double gain, const TaxPolicy& policy, const BracketBounds& bounds);

// Policy together with the brackets in force for the current period.
struct TaxContext {
    const TaxPolicy* policy = nullptr;
    BracketBounds bounds;

    double due(double gain) const { return tax_due(gain, *policy, bounds); }
};

}  // namespace misfit
