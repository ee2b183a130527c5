#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "misfit/error.hpp"
#include "misfit/random.hpp"
#include "misfit/taxation.hpp"

namespace misfit {

enum class FirmKind : std::uint8_t { Traditional, Digital };

struct GrowthSpec {
    double mu = 0.0;
    double sigma = 0.0;
};

/// Linear amortization of a digital firm's growth surplus over `periods`.
class DepreciationSchedule {
public:
    explicit DepreciationSchedule(int periods = 10);

    int periods() const { return periods_; }
    double rate_per_period() const { return 1.0 / periods_; }

    // Fraction of the surplus already written off at `age`, in [0, 1].
    double written_off(int age) const;

private:
    int periods_;
};

// Per-agent traditional sigma: one shared value, or |Normal(0, scale)| drawn at creation.
struct SigmaMode {
    enum class Kind : std::uint8_t { Fixed, HalfNormalPerAgent };
    Kind kind = Kind::Fixed;
    double scale = 0.0;  // only read for HalfNormalPerAgent

    static SigmaMode fixed() { return {}; }
    static SigmaMode half_normal(double s) { return {Kind::HalfNormalPerAgent, s}; }
};

// Which traditional rate a digital firm depreciates toward each period.
enum class TraditionalRateMode : std::uint8_t { FreshDraw, FixedMean };

struct Agent {
    std::uint32_t id = 0;
    double valuation = 0.0;
    FirmKind kind = FirmKind::Traditional;
    int age = 0;
    int threshold = 0;
    double trad_sigma = 0.0;

    bool is_digital() const { return kind == FirmKind::Digital; }
};

struct PopulationState {
    std::vector<Agent> agents;
    int period = 0;
    // Gross gains of every agent in the period just completed, indexed by agent id.
    // Empty before the first period; feeds the next period's tax brackets.
    std::vector<double> previous_gains;
};

struct AdoptionSpec;

/// Settings shared by both models: the growth economy of the static model.
struct StaticModelConfig {
    std::size_t n_agents = 10'000;
    int n_periods = 10;
    double p_digital = 0.0;
    GrowthSpec trad_spec{0.15, 0.1};
    GrowthSpec dig_spec{1.5, 1.0};
    DepreciationSchedule schedule{10};
    double initial_valuation = 10.0;
    double bankruptcy_floor = 1.0;
    SigmaMode sigma_mode = SigmaMode::fixed();
    TraditionalRateMode trad_rate_mode = TraditionalRateMode::FreshDraw;

    // Throws std::invalid_argument naming the offending field.
    void validate() const;
};

struct PeriodStats {
    int period = 0;
    double gini = 0.0;
    std::size_t digital_count = 0;
    std::size_t bankruptcies = 0;
    double mean_valuation = 0.0;
};

// Growth rate for one period. Digital firms get their raw draw here; see effective_digital_rate.
double draw_growth_rate(FirmKind kind, const StaticModelConfig& config, const Agent& agent, Rng& rng);

/// Digital rate after depreciation at `age`.
///
/// The surplus over twice the traditional rate is written off linearly, so at
/// age >= D the firm grows at exactly 2 * raw_traditional.
double effective_digital_rate(double raw_digital, double raw_traditional, int age,
                              const DepreciationSchedule& schedule);

struct StepResult {
    Agent agent;
    double gross_gain = 0.0;
    double tax_paid = 0.0;
};

StepResult step_agent(const Agent& agent, double rate, const TaxContext& tax);

// Fresh agent for slot `id` following the initialization rules.
Agent make_agent(std::uint32_t id, double p_digital, const StaticModelConfig& config,
                 const AdoptionSpec* adoption, Rng& rng);

/// Replaces an agent whose valuation fell strictly below the bankruptcy floor.
/// The slot id is kept; everything else is redrawn as for a new entrant.
Agent replace_if_bankrupt(const Agent& agent, double p_digital, const StaticModelConfig& config,
                          const AdoptionSpec* adoption, Rng& rng);

PopulationState initial_population(const StaticModelConfig& config, const AdoptionSpec* adoption,
                                   Rng& rng);

// Growth, depreciation, tax and replacement for one agent within a period.
// Returns true when the agent went bankrupt and was replaced.
bool advance_agent(Agent& agent, const StaticModelConfig& config, const TaxContext& tax,
                   const AdoptionSpec* adoption, Rng& rng, double& gross_gain);

std::vector<std::uint32_t> activation_order(std::size_t n, Rng& rng);

/// One period of the static market model.
///
/// Every agent is visited exactly once in a fresh random order. Tax brackets
/// come from the gains stored in `pop.previous_gains`, which are then replaced
/// by this period's gains.
PeriodStats run_static_period(PopulationState& pop, const StaticModelConfig& config,
                              const TaxPolicy& tax, Rng& rng);

PeriodStats summarize(const PopulationState& pop, std::size_t bankruptcies);

}  // namespace misfit
