#pragma once

#include <stdexcept>
#include <string>

namespace misfit {

// Invalid experiment setting; `key` is the config entry at fault.
class ConfigError : public std::invalid_argument {
public:
    ConfigError(std::string key, const std::string& message)
        : std::invalid_argument(key + ": " + message), key_(std::move(key)) {}

    const std::string& key() const { return key_; }

private:
    std::string key_;
};

}  // namespace misfit
