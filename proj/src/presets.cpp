#include "misfit/presets.hpp"

namespace misfit {

namespace {

constexpr const char* kBetaGrid = "0.001,0.01,0.05,0.1,0.15,0.2,0.3,0.4,0.5,0.7,1";

struct Scale {
    const char* suffix;
    const char* label;
    const char* static_size;   // n_agents / n_runs lines for the static model
    const char* dynamic_size;  // same for the networked model
};

const Scale kScales[] = {
    {"", "full scale",
     "n_agents = 10000\nn_runs = 1000\n",
     "n_agents = 1000\nnetwork_k = 100\nn_runs = 1000\n"},
    {"_desk", "desk scale",
     "n_agents = 1000\nn_runs = 200\n",
     "n_agents = 500\nnetwork_k = 50\nn_runs = 30\n"},
};

std::vector<Preset> build() {
    struct Body {
        const char* name;
        const char* description;
        bool dynamic;
        std::string lines;
    };
    const std::vector<Body> bodies{
        {"baseline", "static model, traditional firms only, 15% flat tax", false,
         "tax = flat15\np_digital = 0\n"},
        {"sigma_sweep", "static model: inequality vs spread of traditional growth", false,
         "tax = flat15\np_digital = 0\nsweep.sigma = 0.1,0.25,0.5,0.75,1\n"},
        {"digital_mix", "static model: digital share with per-agent traditional sigma", false,
         "tax = flat15\nsigma_mode = half_normal\nsweep.sigma_scale = 0.1,0.5,1\n"
         "sweep.p_digital = 0.01,0.1,0.2,0.3,0.5,0.7,1\n"},
        {"tax_sigma", "static model: progressive taxation vs traditional sigma", false,
         "p_digital = 0\nsweep.tax = moderate,high\nsweep.sigma = 0.1,0.25,0.5,0.75,1\n"},
        {"tax_mix", "static model: progressive taxation vs digital share", false,
         "sweep.tax = moderate,high,extra_high\nsweep.p_digital = 0.01,0.1,0.2,0.3,0.5,0.7,1\n"},
        {"tax_mix_halfnormal", "static model: taxation, digital share and per-agent sigma", false,
         "sigma_mode = half_normal\nsweep.sigma_scale = 0.1,0.5,1\nsweep.tax = moderate,high,extra_high\n"
         "sweep.p_digital = 0.01,0.1,0.3,0.5,1\n"},
        {"beta_sweep", "networked model: adoption and inequality across NWS beta", true,
         std::string("tax = flat15\nthreshold_mu = 5\nthreshold_sigma = 0.1\nsweep.beta = ") + kBetaGrid + "\n"},
        {"tax_beta", "networked model: taxation vs adoption across beta", true,
         std::string("threshold_mu = 5\nthreshold_sigma = 0.1\nsweep.tax = flat15,moderate,high\nsweep.beta = ") +
             kBetaGrid + "\n"},
        {"misfits", "networked model: widening the aspiration threshold spread", true,
         std::string("tax = flat15\nthreshold_mu = 7\nsweep.threshold_sigma = 0,1.5,2,2.5\nsweep.beta = ") +
             kBetaGrid + "\n"},
    };

    std::vector<Preset> out;
    for (const auto& scale : kScales) {
        for (const auto& b : bodies) {
            std::string text = std::string("# ") + b.name + scale.suffix + ": " + b.description + " (" +
                               scale.label + ")\n";
            text += b.dynamic ? "model = dynamic\nn_periods = 100\n" : "model = static\nn_periods = 10\n";
            text += b.dynamic ? scale.dynamic_size : scale.static_size;
            text += "master_seed = 20240101\n";
            text += b.lines;
            out.push_back({std::string(b.name) + scale.suffix, std::string(b.description) + " (" + scale.label + ")",
                           std::move(text)});
        }
    }
    return out;
}

}  // namespace

const std::vector<Preset>& presets() {
    static const std::vector<Preset> all = build();
    return all;
}

const Preset* find_preset(std::string_view name) {
    for (const auto& p : presets())
        if (p.name == name) return &p;
    return nullptr;
}

}  // namespace misfit
