#include "misfit/adoption.hpp"

#include <cmath>
#include <stdexcept>

namespace misfit {

StaticModelConfig DynamicModelConfig::default_economy() {
    StaticModelConfig c;
    c.n_agents = 1000;
    c.n_periods = 100;
    c.p_digital = 0.01;
    c.schedule = DepreciationSchedule{30};
    return c;
}

void DynamicModelConfig::validate() const {
    economy.validate();
    network.validate();
    if (network.n != economy.n_agents)
        throw ConfigError("n_agents", "network size must equal n_agents");
    if (!(adoption.threshold_sigma >= 0.0)) throw ConfigError("threshold_sigma", "must be >= 0");
}

int threshold_from_sample(double sample) {
    const double rounded = std::round(sample);  // halves away from zero
    return rounded <= 0.0 ? 0 : static_cast<int>(rounded);
}

int draw_threshold(const AdoptionSpec& spec, Rng& rng) {
    return threshold_from_sample(draw_normal(rng, spec.threshold_mu, spec.threshold_sigma));
}

bool consider_transformation(const Agent& agent, std::span<const double> neighborhood_valuations) {
    if (neighborhood_valuations.empty()) return false;
    double sum = 0.0;
    for (double v : neighborhood_valuations) sum += v;
    return agent.valuation < sum / static_cast<double>(neighborhood_valuations.size());
}

bool adoption_decision(Agent& agent, std::span<const Agent* const> neighbor_agents) {
    int digital_above = 0;
    for (const Agent* n : neighbor_agents)
        if (n->is_digital() && n->valuation > agent.valuation) ++digital_above;
    if (digital_above < agent.threshold) return false;
    agent.kind = FirmKind::Digital;
    return true;
}

bool try_adopt(PopulationState& pop, const Graph& graph, NodeId node) {
    Agent& agent = pop.agents[node];
    if (agent.is_digital()) return false;
    const auto adj = graph.neighbors(node);

    std::vector<double> neighborhood;
    neighborhood.reserve(adj.size());
    for (NodeId j : adj) neighborhood.push_back(pop.agents[j].valuation);
    if (!consider_transformation(agent, neighborhood)) return false;

    std::vector<const Agent*> peers;
    peers.reserve(adj.size());
    for (NodeId j : adj) peers.push_back(&pop.agents[j]);
    return adoption_decision(agent, peers);
}

PeriodStats run_dynamic_period(PopulationState& pop, const Graph& graph,
                               const DynamicModelConfig& config, const TaxPolicy& tax, Rng& rng) {
    if (graph.node_count() != pop.agents.size())
        throw std::invalid_argument("graph and population sizes differ");
    const TaxContext ctx{&tax, compute_brackets(pop.previous_gains, tax)};
    std::vector<double> gains(pop.agents.size(), 0.0);
    std::size_t bankruptcies = 0;
    for (std::uint32_t i : activation_order(pop.agents.size(), rng)) {
        if (advance_agent(pop.agents[i], config.economy, ctx, &config.adoption, rng, gains[i]))
            ++bankruptcies;
        try_adopt(pop, graph, i);
    }
    pop.previous_gains = std::move(gains);
    ++pop.period;
    return summarize(pop, bankruptcies);
}

}  // namespace misfit
