#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "misfit/adoption.hpp"
#include "misfit/error.hpp"

namespace misfit {

enum class ModelKind : std::uint8_t { Static, Dynamic };

/// A fully specified model: everything one simulation run needs.
struct ModelConfig {
    ModelKind model = ModelKind::Static;
    // For the dynamic model, economy.p_digital is the seed fraction.
    StaticModelConfig economy;
    NetworkSpec network{1000, 100, 0.1};
    AdoptionSpec adoption;
    std::string tax = "flat15";

    static ModelConfig static_defaults();
    static ModelConfig dynamic_defaults();

    DynamicModelConfig dynamic() const { return {economy, network, adoption}; }

    // Throws ConfigError naming the offending key.
    void validate() const;
};

// Sweepable parameters, by config-file name.
inline const std::vector<std::string>& sweep_axis_names() {
    static const std::vector<std::string> names{
        "beta", "p_digital", "sigma", "sigma_scale", "tax", "threshold_mu", "threshold_sigma"};
    return names;
}

struct SweepAxis {
    std::string name;
    std::vector<std::string> values;  // canonical text; numeric axes use %.9g
};

// Sets one sweep axis on a config. Throws ConfigError on unknown axis or bad value.
void apply_axis(ModelConfig& config, const std::string& axis, const std::string& value);

struct GridPoint {
    std::vector<std::pair<std::string, std::string>> params;  // sorted by axis name
    ModelConfig config;
};

struct ExperimentPlan {
    ModelConfig base;
    std::vector<SweepAxis> axes;  // sorted by name
    std::size_t n_runs = 1000;
    std::uint64_t master_seed = 0;

    void validate() const;

    // Cartesian product of the axes, last axis varying fastest. One point when there are no axes.
    std::vector<GridPoint> grid() const;
};

/// Parses a flat `key = value` experiment file.
///
/// Blank lines and lines starting with '#' are ignored. `model` is required;
/// every other key defaults to the reference tables for that model. Unknown
/// keys, keys that belong to the other model, duplicate keys and out-of-range
/// values raise ConfigError.
ExperimentPlan parse_config(std::istream& in);
ExperimentPlan parse_config_file(const std::string& path);

std::string format_number(double value);

}  // namespace misfit
