#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace misfit {

struct Preset {
    std::string name;
    std::string description;
    std::string config_text;  // parseable by parse_config
};

const std::vector<Preset>& presets();
const Preset* find_preset(std::string_view name);

}  // namespace misfit
