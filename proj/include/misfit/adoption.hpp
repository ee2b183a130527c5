#pragma once

#include <span>

#include "misfit/econ.hpp"
#include "misfit/network.hpp"

namespace misfit {

// Distribution of the aspiration-level threshold.
struct AdoptionSpec {
    double threshold_mu = 5.0;
    double threshold_sigma = 0.1;
};

struct DynamicModelConfig {
    // p_digital doubles as the seed fraction and the digital share of replacements.
    StaticModelConfig economy = default_economy();
    NetworkSpec network{1000, 100, 0.1};
    AdoptionSpec adoption;

    double seed_digital_fraction() const { return economy.p_digital; }
    void validate() const;

    static StaticModelConfig default_economy();
};

/// Closest integer to a Normal(mu, sigma) draw, halves away from zero, clamped at 0.
int draw_threshold(const AdoptionSpec& spec, Rng& rng);
int threshold_from_sample(double sample);

// True iff the agent sits strictly below the mean valuation of its neighbourhood.
bool consider_transformation(const Agent& agent, std::span<const double> neighborhood_valuations);

/// Social validation: counts digital neighbours valued strictly above the
/// agent and adopts when the count reaches the agent's threshold. On adoption
/// the agent turns digital and keeps its age.
bool adoption_decision(Agent& agent, std::span<const Agent* const> neighbor_agents);

// consider_transformation followed by adoption_decision against the live population.
bool try_adopt(PopulationState& pop, const Graph& graph, NodeId node);

/// One period of the networked model. Agent i lives on node i.
///
/// The economic step matches run_static_period; after it, a traditional agent
/// may adopt based on its neighbours' state at that moment, so agents activated
/// earlier in the period are already updated.
PeriodStats run_dynamic_period(PopulationState& pop, const Graph& graph,
                               const DynamicModelConfig& config, const TaxPolicy& tax, Rng& rng);

}  // namespace misfit
