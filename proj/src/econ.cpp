#include "misfit/econ.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "misfit/adoption.hpp"
#include "misfit/metrics.hpp"

namespace misfit {

DepreciationSchedule::DepreciationSchedule(int periods) : periods_(periods) {
    if (periods <= 0) throw ConfigError("depreciation_periods", "must be positive");
}

double DepreciationSchedule::written_off(int age) const {
    if (age >= periods_) return 1.0;
    return static_cast<double>(std::max(age, 0)) / periods_;
}

void StaticModelConfig::validate() const {
    if (n_agents == 0) throw ConfigError("n_agents", "must be positive");
    if (n_periods < 1) throw ConfigError("n_periods", "must be at least 1");
    if (!(p_digital >= 0.0 && p_digital <= 1.0)) throw ConfigError("p_digital", "outside [0, 1]");
    if (!(trad_spec.sigma >= 0.0)) throw ConfigError("trad_sigma", "must be >= 0");
    if (!(dig_spec.sigma >= 0.0)) throw ConfigError("dig_sigma", "must be >= 0");
    if (!(bankruptcy_floor >= 0.0)) throw ConfigError("bankruptcy_floor", "must be >= 0");
    if (!(initial_valuation > bankruptcy_floor))
        throw ConfigError("initial_valuation", "must exceed bankruptcy_floor");
    if (sigma_mode.kind == SigmaMode::Kind::HalfNormalPerAgent && !(sigma_mode.scale >= 0.0))
        throw ConfigError("sigma_scale", "must be >= 0");
}

double draw_growth_rate(FirmKind kind, const StaticModelConfig& config, const Agent& agent, Rng& rng) {
    if (kind == FirmKind::Digital) return draw_normal(rng, config.dig_spec.mu, config.dig_spec.sigma);
    return draw_normal(rng, config.trad_spec.mu, agent.trad_sigma);
}

double effective_digital_rate(double raw_digital, double raw_traditional, int age,
                              const DepreciationSchedule& schedule) {
    const double w = schedule.written_off(age);
    if (w >= 1.0) return 2.0 * raw_traditional;
    return raw_digital - w * (raw_digital - 2.0 * raw_traditional);
}

StepResult step_agent(const Agent& agent, double rate, const TaxContext& tax) {
    StepResult out{agent, agent.valuation * rate, 0.0};
    out.tax_paid = tax.due(out.gross_gain);
    out.agent.valuation = agent.valuation + out.gross_gain - out.tax_paid;
    out.agent.age = agent.age + 1;
    return out;
}

Agent make_agent(std::uint32_t id, double p_digital, const StaticModelConfig& config,
                 const AdoptionSpec* adoption, Rng& rng) {
    Agent a;
    a.id = id;
    a.valuation = config.initial_valuation;
    a.age = 0;
    a.kind = draw_bernoulli(rng, p_digital) ? FirmKind::Digital : FirmKind::Traditional;
    if (config.sigma_mode.kind == SigmaMode::Kind::HalfNormalPerAgent)
        a.trad_sigma = std::abs(draw_normal(rng, 0.0, config.sigma_mode.scale));
    else
        a.trad_sigma = config.trad_spec.sigma;
    if (adoption != nullptr) a.threshold = draw_threshold(*adoption, rng);
    return a;
}

Agent replace_if_bankrupt(const Agent& agent, double p_digital, const StaticModelConfig& config,
                          const AdoptionSpec* adoption, Rng& rng) {
    if (agent.valuation >= config.bankruptcy_floor) return agent;
    return make_agent(agent.id, p_digital, config, adoption, rng);
}

PopulationState initial_population(const StaticModelConfig& config, const AdoptionSpec* adoption,
                                   Rng& rng) {
    PopulationState pop;
    pop.agents.reserve(config.n_agents);
    for (std::size_t i = 0; i < config.n_agents; ++i)
        pop.agents.push_back(make_agent(static_cast<std::uint32_t>(i), config.p_digital, config, adoption, rng));
    return pop;
}

bool advance_agent(Agent& agent, const StaticModelConfig& config, const TaxContext& tax,
                   const AdoptionSpec* adoption, Rng& rng, double& gross_gain) {
    double rate = draw_growth_rate(agent.kind, config, agent, rng);
    if (agent.is_digital()) {
        const double raw_traditional =
            config.trad_rate_mode == TraditionalRateMode::FreshDraw
                ? draw_growth_rate(FirmKind::Traditional, config, agent, rng)
                : config.trad_spec.mu;
        rate = effective_digital_rate(rate, raw_traditional, agent.age, config.schedule);
    }
    const StepResult step = step_agent(agent, rate, tax);
    gross_gain = step.gross_gain;
    const bool bankrupt = step.agent.valuation < config.bankruptcy_floor;
    agent = replace_if_bankrupt(step.agent, config.p_digital, config, adoption, rng);
    return bankrupt;
}

std::vector<std::uint32_t> activation_order(std::size_t n, Rng& rng) {
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);
    std::shuffle(order.begin(), order.end(), rng);
    return order;
}

PeriodStats summarize(const PopulationState& pop, std::size_t bankruptcies) {
    PeriodStats s;
    s.period = pop.period;
    const auto values = valuations(pop);
    s.gini = gini(values);
    s.digital_count = digital_count(pop);
    s.bankruptcies = bankruptcies;
    s.mean_valuation = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
    return s;
}

PeriodStats run_static_period(PopulationState& pop, const StaticModelConfig& config,
                              const TaxPolicy& tax, Rng& rng) {
    const TaxContext ctx{&tax, compute_brackets(pop.previous_gains, tax)};
    std::vector<double> gains(pop.agents.size(), 0.0);
    std::size_t bankruptcies = 0;
    for (std::uint32_t i : activation_order(pop.agents.size(), rng)) {
        if (advance_agent(pop.agents[i], config, ctx, nullptr, rng, gains[i])) ++bankruptcies;
    }
    pop.previous_gains = std::move(gains);
    ++pop.period;
    return summarize(pop, bankruptcies);
}

}  // namespace misfit
